use alloc::string::String;
use core::fmt;

/// What went wrong while reading cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    EmptyCycle,
    BadInteger,
    ZeroEntry,
    OutOfRange { value: i64, n: usize },
    RepeatedValue(u64),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::EmptyCycle => f.write_str("empty cycle"),
            ParseErrorKind::BadInteger => f.write_str("malformed integer"),
            ParseErrorKind::ZeroEntry => f.write_str("cycle entries must be nonzero"),
            ParseErrorKind::OutOfRange { value, n } => {
                write!(f, "entry {value} out of range for n = {n}")
            }
            ParseErrorKind::RepeatedValue(v) => write!(f, "absolute value {v} appears twice"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {position}: {kind}")]
    Parse { position: usize, kind: ParseErrorKind },
    #[error("rank {n} is not supported (expected 1..={max})")]
    UnsupportedRank { n: usize, max: usize },
    #[error("invalid image array: {0}")]
    InvalidImages(String),
    #[error("permutations act on different ranks ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },
    #[error("{element} is not an element of {group}")]
    NotMember { element: String, group: String },
    #[error("{lower} is not below {upper} in the absolute order")]
    NotBelow { lower: String, upper: String },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} is not an element of this poset")]
    NotInPoset(String),
    #[error("{0} -> {1} is not a covering relation")]
    NotCover(String, String),
    #[error("elements are incomparable")]
    Incomparable,
    #[error("poset has no {0}")]
    Unbounded(&'static str),
    #[error("no join of {0} and {1} exists")]
    NoJoin(String, String),
    #[error("{what}: {count} exceeds the guard of {limit}")]
    GuardExceeded { what: &'static str, count: usize, limit: usize },
    #[error("power series: {0}")]
    Series(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

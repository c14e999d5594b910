//! File formats, the verification suite and exit-code conventions for the
//! `absorder` command-line tool.

pub mod export;
pub mod verify;

use absorder_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

/// Resource guards map to [`EXIT_GUARD`], everything else is bad input.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

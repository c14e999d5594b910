use std::process::ExitCode;

use absorder::export::{homology_json, invariants_json, poset_dot, poset_json, poset_table};
use absorder::verify::{self, Fault, Profile, SuiteOptions};
use absorder::{exit_code, EXIT_GUARD, EXIT_MISMATCH, EXIT_OK};
use absorder_core::invariants::{
    census, closed_form_lkr, closed_form_ln, closed_form_ncb, lkr_top, mobius_with_top, BoundaryConvention,
    InvariantReport,
};
use absorder_core::labeling::{verify_labeling, Labeling};
use absorder_core::lattice::theorem_scan;
use absorder_core::order::{build_ideal, build_interval, coxeter_ideal, full_poset, Poset};
use absorder_core::series::{predicted_chi_jn, predicted_chi_sn};
use absorder_core::topology::{cm_check_with, homology, order_complex, CmOptions, Strip};
use absorder_core::{parse_cycles, Error, Family, GroupKind, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// `println!` that exits quietly when stdout is closed early.
macro_rules! out {
    ($($arg:tt)*) => {
        emit(format_args!("{}\n", format_args!($($arg)*)))
    };
}

macro_rules! out_raw {
    ($($arg:tt)*) => {
        emit(format_args!($($arg)*))
    };
}

fn emit(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(err) = std::io::stdout().lock().write_fmt(args) {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {err}");
    }
}

#[derive(Parser)]
#[command(name = "absorder", version, about = "The absolute order on S_n, B_n and D_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    S,
    B,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Args)]
struct Group {
    #[arg(long, value_enum, ignore_case = true, default_value = "b")]
    group: GroupArg,
    #[arg(long)]
    n: usize,
}

impl Group {
    fn kind(&self) -> Result<GroupKind> {
        let family = match self.group {
            GroupArg::S => Family::S,
            GroupArg::B => Family::B,
            GroupArg::D => Family::D,
        };
        GroupKind::new(family, self.n)
    }
}

#[derive(Args)]
struct Bounds {
    /// Top element in cycle notation, e.g. "[1,2]((3,-4))".
    #[arg(long)]
    top: String,
    #[arg(long, default_value = "e")]
    bottom: String,
}

impl Bounds {
    fn interval(&self, kind: GroupKind) -> Result<Poset> {
        let bottom = parse_cycles(&self.bottom, kind.n)?;
        let top = parse_cycles(&self.top, kind.n)?;
        Ok(build_interval(&bottom, &top, kind)?.into_poset())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    Lambda,
    Lambda1,
    Lambda2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedForm {
    /// NC^B(n) = [e, [1,…,n]].
    Ncb,
    /// L_n = [e, [1][2]…[n]].
    Ln,
    /// L(k, n-k) = [e, [1,…,k][k+1]…[n]].
    Lkr,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealArg {
    /// J_n, generated by the Coxeter elements of B_n.
    Coxeter,
    /// The whole poset.
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripArg {
    None,
    Bottom,
    Endpoints,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesFamily {
    /// Abs(S_n) minus e.
    Sym,
    /// J_n minus e.
    Hyper,
}

#[derive(Subcommand)]
enum Command {
    /// All of Abs(W).
    Poset {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The closed interval [bottom, top].
    Interval {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The order ideal generated by the given elements or by the Coxeter elements.
    Ideal {
        #[command(flatten)]
        group: Group,
        #[arg(long = "gen")]
        generators: Vec<String>,
        #[arg(long, conflicts_with = "generators")]
        coxeter: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check that an edge labeling is an EL-labeling of [bottom, top].
    CheckEl {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value = "lambda")]
        labeling: LabelingArg,
    },
    /// Compare is_lattice([e, w]) with the hook criterion for every w.
    LatticeScan {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Cardinality, rank sizes, chains, Möbius value and zeta polynomial.
    Invariants {
        #[command(flatten)]
        group: Group,
        #[arg(long, required_unless_present = "compare")]
        top: Option<String>,
        /// Use the named family and compare with its closed form.
        #[arg(long, value_enum)]
        compare: Option<ClosedForm>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Homology and the Cohen-Macaulay test for an order complex.
    Topology {
        #[command(flatten)]
        group: Group,
        #[arg(long, required_unless_present = "ideal")]
        top: Option<String>,
        #[arg(long, value_enum, conflicts_with = "top")]
        ideal: Option<IdealArg>,
        /// Defaults to endpoints for intervals and bottom for ideals.
        #[arg(long, value_enum)]
        strip: Option<StripArg>,
        #[arg(long)]
        cm: bool,
        /// Test at most this many links per dimension.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long)]
        torsion: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reduced Euler characteristics from the generating functions.
    Gf {
        #[arg(long, value_enum)]
        family: SeriesFamily,
        #[arg(long)]
        upto: usize,
        /// Also compute the Möbius and homology values by enumeration.
        #[arg(long)]
        crosscheck: bool,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "full")]
        profile: Profile,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=13))]
        criterion: Option<u8>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn print_poset(p: &Poset, format: Format) {
    match format {
        Format::Json => out!("{}", serde_json::to_string_pretty(&poset_json(p)).unwrap()),
        Format::Dot => out_raw!("{}", poset_dot(p)),
        Format::Table => out_raw!("{}", poset_table(p)),
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Poset { group, format } => print_poset(&full_poset(group.kind()?), format),
        Command::Interval { group, bounds, format } => print_poset(&bounds.interval(group.kind()?)?, format),
        Command::Ideal { group, generators, coxeter, format } => {
            let kind = group.kind()?;
            let p = if coxeter {
                if kind.family != Family::B {
                    return Err(Error::NotMember { element: "--coxeter".into(), group: "B".into() });
                }
                coxeter_ideal(kind.n)?
            } else {
                let gens = generators.iter().map(|g| parse_cycles(g, kind.n)).collect::<Result<Vec<_>>>()?;
                build_ideal(&gens, kind)?
            };
            print_poset(&p, format);
        }
        Command::CheckEl { group, bounds, labeling } => {
            let p = bounds.interval(group.kind()?)?;
            let labeling = match labeling {
                LabelingArg::Lambda => Labeling::Lambda,
                LabelingArg::Lambda1 => Labeling::Lambda1,
                LabelingArg::Lambda2 => Labeling::Lambda2,
            };
            let verdict = verify_labeling(&p, labeling)?;
            out!(
                "{} intervals, {} chains: {}",
                verdict.intervals_checked,
                verdict.chains_checked,
                if verdict.holds { "EL" } else { "not EL" }
            );
            if let Some(cert) = verdict.certificate {
                out!("fails on [{}, {}]", cert.bottom, cert.top);
                for chain in &cert.increasing {
                    out!("  increasing: {}", chain.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" < "));
                }
                out!("  lex-first:  {}", cert.lex_first.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" < "));
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::LatticeScan { group, witnesses, format } => {
            let kind = group.kind()?;
            let report = theorem_scan(kind, kind.n)?;
            let describe = |w: &absorder_core::lattice::MeetWitness| {
                format!("{} and {} have maximal lower bounds {}", w.x, w.y, list(&w.lower_bounds))
            };
            if format == Format::Json {
                let value = json!({
                    "kind": kind.to_string(),
                    "checked": report.checked,
                    "lattices": report.lattices,
                    "mismatches": report.mismatches.iter().map(|m| json!({
                        "w": m.w.to_string(),
                        "predicted": m.predicted,
                        "is_lattice": m.verdict.is_lattice,
                    })).collect::<Vec<_>>(),
                    "witnesses": witnesses.then(|| report.witnesses.iter().map(|(w, m)| json!({
                        "w": w.to_string(),
                        "x": m.x.to_string(),
                        "y": m.y.to_string(),
                        "lower_bounds": m.lower_bounds.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>()),
                });
                out!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                out!(
                    "{kind}: {} intervals, {} lattices, {} mismatches",
                    report.checked,
                    report.lattices,
                    report.mismatches.len()
                );
                for m in &report.mismatches {
                    out!("  mismatch at {}: predicted {}, measured {}", m.w, m.predicted, m.verdict.is_lattice);
                }
                if witnesses {
                    for (w, m) in &report.witnesses {
                        out!("  [e, {w}]: {}", describe(m));
                    }
                }
            }
            if !report.mismatches.is_empty() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Invariants { group, top, compare, k, format } => {
            let kind = group.kind()?;
            let n = kind.n;
            let (top, formula) = match compare {
                None => (parse_cycles(top.as_deref().unwrap_or("e"), n)?, None),
                Some(ClosedForm::Ncb) => (lkr_top(n, 0), Some(closed_form_ncb(n))),
                Some(ClosedForm::Ln) => (lkr_top(0, n), Some(closed_form_ln(n))),
                Some(ClosedForm::Lkr) => {
                    if k > n {
                        return Err(Error::IndexOutOfRange { index: k, n });
                    }
                    (lkr_top(k, n - k), Some(closed_form_lkr(k, n - k, BoundaryConvention::Enumerated)))
                }
            };
            let p = build_interval(&absorder_core::SignedPerm::identity(n), &top, kind)?.into_poset();
            let measured = census(&p);
            let mismatches = formula.as_ref().map(|f| f.mismatches(&measured)).unwrap_or_default();
            if format == Format::Json {
                let value = json!({
                    "top": top.to_string(),
                    "enumerated": invariants_json(&measured),
                    "formula": formula.as_ref().map(invariants_json),
                    "mismatches": mismatches,
                });
                out!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print_invariants(&top.to_string(), &measured, formula.as_ref());
            }
            if !mismatches.is_empty() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Topology { group, top, ideal, strip, cm, sample, torsion, format } => {
            let kind = group.kind()?;
            let (p, default_strip) = match ideal {
                Some(IdealArg::Coxeter) => (coxeter_ideal(kind.n)?, Strip::Bottom),
                Some(IdealArg::Full) => (full_poset(kind), Strip::Bottom),
                None => {
                    let top = parse_cycles(top.as_deref().unwrap_or("e"), kind.n)?;
                    (
                        build_interval(&absorder_core::SignedPerm::identity(kind.n), &top, kind)?.into_poset(),
                        Strip::Endpoints,
                    )
                }
            };
            let strip = match strip {
                None => default_strip,
                Some(StripArg::None) => Strip::None,
                Some(StripArg::Bottom) => Strip::Bottom,
                Some(StripArg::Endpoints) => Strip::Endpoints,
            };
            let complex = order_complex(&p, strip)?;
            let h = homology(&complex, torsion)?;
            let verdict = if cm { Some(cm_check_with(&complex, CmOptions { per_dimension: sample })?) } else { None };
            if format == Format::Json {
                let mut value = homology_json(&h);
                if let Some(v) = &verdict {
                    value["cohen_macaulay"] = json!({
                        "is_cm": v.is_cm,
                        "pure": v.pure,
                        "faces_checked": v.faces_checked,
                        "sampled": v.sampled,
                        "failing_face": v.failing_face.as_ref().map(|f| f.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
                    });
                }
                out!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                out!("dim {}, f-vector {:?}", h.dim, h.f_vector);
                out!("reduced betti {:?} (b_-1 = {}), reduced euler {}", h.reduced_betti, h.betti_minus_one, h.euler);
                if let Some(t) = &h.torsion {
                    out!("torsion {t:?}");
                }
                if let Some(v) = &verdict {
                    out!(
                        "cohen-macaulay: {} ({} faces checked{})",
                        v.is_cm,
                        v.faces_checked,
                        if v.sampled { ", sampled" } else { "" }
                    );
                    if let Some(f) = &v.failing_face {
                        out!("  fails at {{{}}}", list(f));
                    }
                }
            }
            if verdict.is_some_and(|v| !v.is_cm) {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Gf { family, upto, crosscheck } => return gf(family, upto, crosscheck),
        Command::Verify { profile, seed, inject_fault, criterion, format } => {
            let options = SuiteOptions { profile, seed, fault: inject_fault };
            let report = match criterion {
                None => verify::run_verify_suite(options),
                Some(id) => {
                    let (claims, guard) = match verify::criterion(id, options) {
                        Ok(claims) => (claims, None),
                        Err(err @ Error::GuardExceeded { .. }) => (Vec::new(), Some(err.to_string())),
                        Err(err) => return Err(err),
                    };
                    let passed = guard.is_none() && claims.iter().all(|c| c.pass);
                    verify::VerificationSuiteReport { profile, seed, fault: inject_fault, claims, guard, passed }
                }
            };
            if format == Format::Json {
                out!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                for c in &report.claims {
                    out!("{} {}  [{}]", if c.pass { "PASS" } else { "FAIL" }, c.id, c.parameters);
                    if !c.pass {
                        out!("     {}\n     expected: {}\n     computed: {}", c.claim, c.expected, c.computed);
                    }
                }
                let failed = report.failures().count();
                out!(
                    "{} claims, {} failed{}",
                    report.claims.len(),
                    failed,
                    report.guard.as_deref().map(|g| format!(", guard: {g}")).unwrap_or_default()
                );
            }
            if report.guard.is_some() {
                return Ok(EXIT_GUARD);
            }
            if !report.passed {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn print_invariants(top: &str, measured: &InvariantReport, formula: Option<&InvariantReport>) {
    out!("[e, {top}]");
    let show = |r: &InvariantReport| {
        [
            r.cardinality.to_string(),
            r.rank_sizes.as_ref().map(|v| list(v)).unwrap_or_default(),
            r.max_chains.as_ref().map(|x| x.to_string()).unwrap_or_default(),
            r.mobius.as_ref().map(|x| x.to_string()).unwrap_or_default(),
            r.zeta.as_ref().map(|z| z.to_string()).unwrap_or_default(),
        ]
    };
    let names = ["cardinality", "rank sizes", "maximal chains", "mobius", "zeta"];
    let m = show(measured);
    match formula {
        None => {
            for (name, v) in names.iter().zip(&m) {
                out!("{name:<15} {v}");
            }
        }
        Some(f) => {
            out!("{:<15} {:<30} {}", "", "formula", "enumerated");
            for ((name, a), b) in names.iter().zip(show(f)).zip(&m) {
                let mark = if !a.is_empty() && a != *b { "  MISMATCH" } else { "" };
                out!("{name:<15} {a:<30} {b}{mark}");
            }
        }
    }
}

fn gf(family: SeriesFamily, upto: usize, crosscheck: bool) -> Result<u8> {
    let (predicted, name) = match family {
        SeriesFamily::Sym => (predicted_chi_sn(upto)?, "Abs(S_n) - e"),
        SeriesFamily::Hyper => (predicted_chi_jn(upto)?, "J_n - e"),
    };
    let first = predicted.first().map_or(0, |(n, _)| *n);
    out!("# reduced Euler characteristic of {name}");
    if crosscheck {
        out!("{:>3} {:>24} {:>24} {:>24}", "n", "series", "mobius", "homology");
    } else {
        out!("{:>3} {:>24}", "n", "series");
    }
    let mut status = EXIT_OK;
    for (n, chi) in predicted {
        let boundary = if n == first || (family == SeriesFamily::Sym && n == 2) {
            "  (boundary: empty complex -1, point 0)"
        } else {
            ""
        };
        if !crosscheck {
            out!("{n:>3} {chi:>24}{boundary}");
            continue;
        }
        let p = match family {
            SeriesFamily::Sym => full_poset(GroupKind::new(Family::S, n)?),
            SeriesFamily::Hyper => coxeter_ideal(n)?,
        };
        let mobius = mobius_with_top(&p)?;
        let euler = homology(&order_complex(&p, Strip::Bottom)?, false)?.euler;
        let mark = if chi != mobius || mobius != euler.into() {
            status = EXIT_MISMATCH;
            "  MISMATCH"
        } else {
            ""
        };
        out!("{n:>3} {chi:>24} {mobius:>24} {euler:>24}{boundary}{mark}");
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

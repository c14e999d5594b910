//! The one-shot verification suite. Each criterion compares a brute-force
//! computation with its closed form or an independent oracle and records one
//! claim per compared value.

use std::collections::BTreeSet;
use std::fmt::Display;

use absorder_core::invariants::{
    annular_facts, census, closed_form_lkr, closed_form_ln, closed_form_ncb, lkr_top, mobius_with_top,
    BoundaryConvention, InvariantReport,
};
use absorder_core::labeling::{c_sequence, canonical_chain, verify_labeling, Labeling, MaximalChain};
use absorder_core::lattice::{common_lower_bounds, is_lattice, theorem_scan};
use absorder_core::order::{
    abs_leq, build_interval, cover_lift_witness, covers, covers_by_pattern, coxeter_ideal, fiber_ideal_identity,
    fiber_map, full_poset, leq, sn_leq_noncrossing, Ambient, AmbientKind, Poset,
};
use absorder_core::series::{predicted_chi_jn, predicted_chi_sn};
use absorder_core::topology::{cm_check, homology, lifting_ideal_checks, order_complex, HomologyProfile, Strip};
use absorder_core::{parse_cycles, Error, Family, GroupKind, Result, SignedPerm};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const CRITERIA: std::ops::RangeInclusive<u8> = 1..=13;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Ranks up to 3.
    Quick,
    /// Every criterion at full size.
    Full,
}

/// Deliberate errors in the expected values, to exercise the mismatch path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Expect `μ(NC^B(n))` with the wrong sign.
    MobiusSign,
    /// Read the `L(k, r)` boundary values as all equal to 1.
    LiteralConvention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub profile: Profile,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { profile: Profile::Full, seed: DEFAULT_SEED, fault: None }
    }
}

impl SuiteOptions {
    fn scope(&self, quick: usize, full: usize) -> usize {
        match self.profile {
            Profile::Quick => quick,
            Profile::Full => full,
        }
    }

    fn full(&self) -> bool {
        self.profile == Profile::Full
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub criterion: u8,
    pub claim: String,
    pub parameters: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationSuiteReport {
    pub profile: Profile,
    pub seed: u64,
    pub fault: Option<Fault>,
    pub claims: Vec<ClaimRecord>,
    /// The resource guard that cut a criterion short; the report is partial.
    pub guard: Option<String>,
    pub passed: bool,
}

impl VerificationSuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.claims.iter().filter(|c| !c.pass)
    }
}

/// Collects the claims of one criterion.
pub struct Claims {
    criterion: u8,
    records: Vec<ClaimRecord>,
}

impl Claims {
    fn new(criterion: u8) -> Self {
        Claims { criterion, records: Vec::new() }
    }

    fn check(&mut self, id: String, claim: &str, parameters: String, expected: String, computed: String, pass: bool) {
        self.records.push(ClaimRecord {
            id: format!("{:02}/{id}", self.criterion),
            criterion: self.criterion,
            claim: claim.to_string(),
            parameters,
            expected,
            computed,
            pass,
        });
    }

    fn eq<T: Display + PartialEq>(&mut self, id: String, claim: &str, parameters: String, expected: T, computed: T) {
        let pass = expected == computed;
        self.check(id, claim, parameters, expected.to_string(), computed.to_string(), pass);
    }

    fn holds(&mut self, id: String, claim: &str, parameters: String, computed: String, pass: bool) {
        self.check(id, claim, parameters, "holds".into(), computed, pass);
    }
}

fn list<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn e(n: usize) -> SignedPerm {
    SignedPerm::identity(n)
}

fn lower_interval(top: &SignedPerm, kind: GroupKind) -> Result<Poset> {
    Ok(build_interval(&e(kind.n), top, kind)?.into_poset())
}

fn cycles(text: &str, n: usize) -> SignedPerm {
    parse_cycles(text, n).expect("literal cycle notation")
}

/// Runs every criterion. A guard error stops that criterion only.
pub fn run_verify_suite(options: SuiteOptions) -> VerificationSuiteReport {
    let mut claims = Vec::new();
    let mut guard = None;
    for id in CRITERIA {
        match criterion(id, options) {
            Ok(mut records) => claims.append(&mut records),
            Err(err @ Error::GuardExceeded { .. }) => {
                guard.get_or_insert_with(|| format!("criterion {id}: {err}"));
            }
            Err(err) => claims.push(ClaimRecord {
                id: format!("{id:02}/error"),
                criterion: id,
                claim: "criterion runs to completion".into(),
                parameters: String::new(),
                expected: "no error".into(),
                computed: err.to_string(),
                pass: false,
            }),
        }
    }
    let passed = guard.is_none() && claims.iter().all(|c| c.pass);
    VerificationSuiteReport {
        profile: options.profile,
        seed: options.seed,
        fault: options.fault,
        claims,
        guard,
        passed,
    }
}

/// The claims of a single criterion, `1..=13`.
pub fn criterion(id: u8, o: SuiteOptions) -> Result<Vec<ClaimRecord>> {
    let mut c = Claims::new(id);
    match id {
        1 => ncb_census(&mut c, o)?,
        2 => ln_census(&mut c, o)?,
        3 => lkr_census(&mut c, o)?,
        4 => annular(&mut c, o)?,
        5 => hook_scan(&mut c, o)?,
        6 => type_d_scan(&mut c, o)?,
        7 => lambda_el(&mut c, o)?,
        8 => auxiliary_el(&mut c, o)?,
        9 => d4_counterexample(&mut c)?,
        10 => euler_series(&mut c, o)?,
        11 => cohen_macaulay(&mut c, o)?,
        12 => cross_validation(&mut c, o)?,
        13 => lifting(&mut c, o)?,
        _ => return Err(Error::IndexOutOfRange { index: id as usize, n: *CRITERIA.end() as usize }),
    }
    Ok(c.records)
}

/// One claim per field present in `formula`.
fn compare_reports(
    c: &mut Claims,
    prefix: &str,
    parameters: &str,
    formula: &InvariantReport,
    measured: &InvariantReport,
) {
    let p = || parameters.to_string();
    c.eq(format!("{prefix}/cardinality"), "cardinality", p(), &formula.cardinality, &measured.cardinality);
    if let (Some(f), Some(m)) = (&formula.rank_sizes, &measured.rank_sizes) {
        c.eq(format!("{prefix}/rank-sizes"), "rank sizes", p(), list(f), list(m));
    }
    if let (Some(f), Some(m)) = (&formula.max_chains, &measured.max_chains) {
        c.eq(format!("{prefix}/maximal-chains"), "number of maximal chains", p(), f, m);
    }
    if let (Some(f), Some(m)) = (&formula.mobius, &measured.mobius) {
        c.eq(format!("{prefix}/mobius"), "Möbius value μ(0̂, 1̂)", p(), f, m);
    }
    if let (Some(f), Some(m)) = (&formula.zeta, &measured.zeta) {
        c.eq(format!("{prefix}/zeta"), "zeta polynomial Z(m)", p(), f.to_string(), m.to_string());
    }
    c.holds(
        format!("{prefix}/identities"),
        "Z(2) = #P, Z(-1) = μ, lead(Z)·d! = #maximal chains",
        p(),
        if measured.identities_hold() { "holds".into() } else { "fails".into() },
        measured.identities_hold(),
    );
}

fn ncb_census(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for n in 1..=o.scope(3, 4) {
        let p = lower_interval(&lkr_top(n, 0), GroupKind::b(n))?;
        let mut formula = closed_form_ncb(n);
        if o.fault == Some(Fault::MobiusSign) {
            formula.mobius = formula.mobius.map(|m| -m);
        }
        compare_reports(c, &format!("ncb/n={n}"), &format!("NC^B({n})"), &formula, &census(&p));
    }
    Ok(())
}

fn ln_census(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for n in 1..=o.scope(3, 5) {
        let p = lower_interval(&lkr_top(0, n), GroupKind::b(n))?;
        compare_reports(c, &format!("ln/n={n}"), &format!("L_{n}"), &closed_form_ln(n), &census(&p));
        if n == 5 {
            c.eq("ln/n=5/size".into(), "|L_5| = 312", "L_5".into(), 312, p.len());
        }
    }
    Ok(())
}

fn lkr_census(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    let convention = match o.fault {
        Some(Fault::LiteralConvention) => BoundaryConvention::Literal,
        _ => BoundaryConvention::Enumerated,
    };
    let max = o.scope(3, 5);
    for k in 0..=max {
        for r in 0..=max - k {
            if k + r == 0 {
                continue;
            }
            let p = lower_interval(&lkr_top(k, r), GroupKind::b(k + r))?;
            let formula = closed_form_lkr(k, r, convention);
            compare_reports(c, &format!("lkr/k={k},r={r}"), &format!("L({k},{r})"), &formula, &census(&p));
        }
    }
    let literal = closed_form_lkr(1, 1, BoundaryConvention::Literal).cardinality;
    let enumerated = lower_interval(&lkr_top(1, 1), GroupKind::b(2))?.len();
    c.check(
        "lkr/literal-boundary".into(),
        "the all-ones boundary reading disagrees with enumeration at (1,1)",
        "L(1,1)".into(),
        "formula 4, enumerated 6".into(),
        format!("formula {literal}, enumerated {enumerated}"),
        literal == BigInt::from(4) && enumerated == 6,
    );
    Ok(())
}

fn annular(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for k in 1..=o.scope(2, 4) {
        let facts = annular_facts(k, 6)?;
        let params = format!("k={k}");
        c.eq(format!("annular/k={k}/size"), "|E| = 2·binom(2k, k-1)", params.clone(), &facts.size_formula, &facts.size);
        for (m, count, formula) in &facts.zeta {
            c.eq(
                format!("annular/k={k}/m={m}"),
                "multichains of L(k,1) meeting E = 2·binom(mk, k+1)",
                format!("k={k}, m={m}"),
                formula,
                count,
            );
        }
    }
    Ok(())
}

fn scan_claims(c: &mut Claims, kind: GroupKind) -> Result<()> {
    let report = theorem_scan(kind, kind.n)?;
    let first = report.mismatches.first().map(|m| format!(" (first: {}, predicted {})", m.w, m.predicted));
    c.check(
        format!("scan/{kind}"),
        "is_lattice([e, w]) agrees with the hook criterion for every w",
        format!("{kind}, {} intervals", report.checked),
        "0 mismatches".into(),
        format!("{} mismatches{}", report.mismatches.len(), first.unwrap_or_default()),
        report.mismatches.is_empty() && report.checked == kind.order(),
    );
    Ok(())
}

fn hook_scan(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for n in 1..=o.scope(3, 4) {
        scan_claims(c, GroupKind::b(n))?;
    }
    Ok(())
}

fn type_d_scan(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for n in 2..=o.scope(4, 5) {
        scan_claims(c, GroupKind::d(n))?;
    }
    let d4 = GroupKind::d(4);
    let lattice = is_lattice(&lower_interval(&cycles("[1][2][3][4]", 4), d4)?)?.is_lattice;
    c.eq("d4/1111".into(), "[e, [1][2][3][4]] is a lattice in Abs(D_4)", "D4".into(), true, lattice);

    let d5 = GroupKind::d(5);
    let (u, v) = (cycles("[1][2][3][4]", 5), cycles("[1][2][3][5]", 5));
    let mut bounds: Vec<SignedPerm> = common_lower_bounds(&u, &v, d5)?;
    bounds.sort();
    let mut want: Vec<SignedPerm> = ["[1][2]", "[1][3]", "[2][3]"].iter().map(|s| cycles(s, 5)).collect();
    want.sort();
    c.eq(
        "d5/lower-bounds".into(),
        "maximal common lower bounds",
        format!("{u}, {v} in D5"),
        list(&want),
        list(&bounds),
    );

    if o.full() {
        let d6 = GroupKind::d(6);
        let verdict = is_lattice(&lower_interval(&cycles("[1][2][3][4][5][6]", 6), d6)?)?;
        let computed = match &verdict.witness {
            Some(w) => format!("not a lattice; {} and {} have lower bounds {}", w.x, w.y, list(&w.lower_bounds)),
            None => "lattice".into(),
        };
        c.check(
            "d6/111111".into(),
            "[e, [1]…[6]] is not a lattice in Abs(D_6)",
            "D6".into(),
            "not a lattice".into(),
            computed,
            !verdict.is_lattice,
        );
    }
    Ok(())
}

fn lambda_el(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    let b3 = GroupKind::b(3);
    let elements = b3.elements();
    let (mut checked, mut failed) = (0, Vec::new());
    for u in &elements {
        for v in elements.iter().filter(|v| leq(u, v)) {
            let iv = build_interval(u, v, b3)?;
            checked += 1;
            if !verify_labeling(iv.poset(), Labeling::Lambda)?.holds {
                failed.push(format!("[{u}, {v}]"));
            }
        }
    }
    c.check(
        "el/b3".into(),
        "λ is an EL-labeling of every closed interval",
        format!("B3, {checked} intervals"),
        "0 failures".into(),
        format!("{} failures {}", failed.len(), list(&failed)),
        failed.is_empty(),
    );

    if o.full() {
        let b4 = GroupKind::b(4);
        let all = b4.elements();
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        let mut failed = Vec::new();
        for _ in 0..50 {
            let v = all[rng.random_range(0..all.len())];
            let below = lower_interval(&v, b4)?;
            let u = *below.element(rng.random_range(0..below.len()));
            if !verify_labeling(build_interval(&u, &v, b4)?.poset(), Labeling::Lambda)?.holds {
                failed.push(format!("[{u}, {v}]"));
            }
        }
        c.check(
            "el/b4-random".into(),
            "λ is an EL-labeling of random closed intervals",
            format!("B4, 50 intervals, seed {}", o.seed),
            "0 failures".into(),
            format!("{} failures {}", failed.len(), list(&failed)),
            failed.is_empty(),
        );
    }

    let kind = GroupKind::b(o.scope(3, 4));
    let bad: Vec<String> = kind
        .elements()
        .iter()
        .filter(|w| {
            let chain = canonical_chain(w);
            chain.labels != c_sequence(w) || chain.elements.last() != Some(*w)
        })
        .map(|w| w.to_string())
        .collect();
    c.check(
        format!("chain/{kind}"),
        "the labels of the canonical chain C_w are c(w)",
        format!("every w in {kind}"),
        "0 failures".into(),
        format!("{} failures {}", bad.len(), list(&bad)),
        bad.is_empty(),
    );

    let examples: [(&str, usize, &[&str], &[usize]); 2] = [
        (
            "[1,-7][3]((2,-6,-5))((4))",
            7,
            &["e", "[1]", "[1][3]", "[1][3]((2,-5))", "[1][3]((2,-6,-5))", "[1,-7][3]((2,-6,-5))"],
            &[1, 3, 5, 6, 7],
        ),
        ("[3,-4]((1,2))", 4, &["e", "((1,2))", "((1,2))[3]", "[3,-4]((1,2))"], &[2, 3, 4]),
    ];
    for (top, n, elements, labels) in examples {
        let expected =
            MaximalChain { elements: elements.iter().map(|s| cycles(s, n)).collect(), labels: labels.to_vec() };
        let computed = canonical_chain(&cycles(top, n));
        c.eq(
            format!("chain/example/{top}"),
            "canonical chain C_w",
            format!("w = {top}"),
            expected.to_string(),
            computed.to_string(),
        );
    }
    Ok(())
}

fn auxiliary_el(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for n in 1..=o.scope(3, 4) {
        let p = lower_interval(&lkr_top(0, n), GroupKind::b(n))?;
        for (name, labeling) in [("lambda1", Labeling::Lambda1), ("lambda2", Labeling::Lambda2)] {
            let verdict = verify_labeling(&p, labeling)?;
            let computed = match &verdict.certificate {
                None => format!("holds on {} intervals", verdict.intervals_checked),
                Some(cert) => format!("fails on [{}, {}]", cert.bottom, cert.top),
            };
            c.holds(format!("el/L{n}/{name}"), "EL-labeling of L_n", format!("L_{n}, {name}"), computed, verdict.holds);
        }
    }
    Ok(())
}

fn d4_counterexample(c: &mut Claims) -> Result<()> {
    let p = lower_interval(&cycles("[1][2][3][4]", 4), GroupKind::d(4))?;
    let complex = order_complex(&p, Strip::Endpoints)?;
    let h = homology(&complex, false)?;
    let b0 = h.reduced_betti.first().copied().unwrap_or(0);
    c.check(
        "d4/disconnected".into(),
        "the open interval (e, [1][2][3][4]) in Abs(D_4) is disconnected",
        "D4".into(),
        "reduced b_0 > 0".into(),
        format!("reduced b_0 = {b0}"),
        b0 > 0,
    );
    let verdict = cm_check(&complex)?;
    let at_empty = verdict.failing_face.as_ref().is_some_and(|f| f.is_empty());
    c.check(
        "d4/cm".into(),
        "the Cohen-Macaulay test fails at the empty face",
        "D4".into(),
        "fails at ∅".into(),
        match &verdict.failing_face {
            None => "passes".into(),
            Some(f) => format!("fails at {{{}}}", list(f)),
        },
        !verdict.is_cm && at_empty,
    );
    Ok(())
}

/// `χ̃` as the alternating sum of the reduced Betti numbers.
fn reduced_euler(h: &HomologyProfile) -> BigInt {
    let sum: i64 =
        h.reduced_betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    BigInt::from(sum - h.betti_minus_one as i64)
}

fn three_way(c: &mut Claims, name: &str, n: usize, p: &Poset, series: &BigInt) -> Result<()> {
    let mobius = mobius_with_top(p)?;
    let euler = reduced_euler(&homology(&order_complex(p, Strip::Bottom)?, false)?);
    let boundary = if name == "S" && n <= 2 { " (boundary term)" } else { "" };
    c.check(
        format!("chi/{name}{n}"),
        "series, Möbius sum and homology give the same reduced Euler characteristic",
        format!("{name}_{n}{boundary}"),
        format!("series {series}"),
        format!("möbius {mobius}, homology {euler}"),
        *series == mobius && mobius == euler,
    );
    Ok(())
}

fn euler_series(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for (n, chi) in predicted_chi_sn(o.scope(4, 5))? {
        three_way(c, "S", n, &full_poset(GroupKind::s(n)), &chi)?;
    }
    for (n, chi) in predicted_chi_jn(o.scope(3, 4))? {
        three_way(c, "J", n, &coxeter_ideal(n)?, &chi)?;
    }
    let j2 = mobius_with_top(&coxeter_ideal(2)?)?;
    c.eq("chi/J2-value".into(), "reduced Euler characteristic of J_2 minus e", "J_2".into(), BigInt::from(-3), j2);
    Ok(())
}

fn cm_claim(c: &mut Claims, id: String, parameters: String, p: &Poset) -> Result<()> {
    let complex = order_complex(p, Strip::Bottom)?;
    let verdict = cm_check(&complex)?;
    let h = homology(&complex, false)?;
    c.check(
        id,
        "the order complex is Cohen-Macaulay with homology only in the top degree",
        parameters,
        "CM, concentrated".into(),
        format!(
            "{}, betti {:?}, {} faces checked",
            if verdict.is_cm { "CM" } else { "not CM" },
            h.reduced_betti,
            verdict.faces_checked
        ),
        verdict.is_cm && h.concentrated_in_top(),
    );
    Ok(())
}

fn cohen_macaulay(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for n in 2..=o.scope(3, 4) {
        cm_claim(c, format!("cm/S{n}"), format!("Abs(S_{n}) minus e"), &full_poset(GroupKind::s(n)))?;
    }
    for n in 2..=o.scope(3, 4) {
        cm_claim(c, format!("cm/J{n}"), format!("J_{n} minus e"), &coxeter_ideal(n)?)?;
    }
    Ok(())
}

fn rank_polynomial(exponents: &[usize]) -> Vec<BigInt> {
    exponents.iter().fold(vec![BigInt::from(1)], |acc, &e| {
        let mut next = vec![BigInt::from(0); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] += a;
            next[i + 1] += a * e;
        }
        next
    })
}

fn cross_validation(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    let kind = GroupKind::b(o.scope(3, 4));
    let bad: Vec<String> = kind
        .elements()
        .into_iter()
        .filter(|w| covers(w, kind).map(|cv| cv != covers_by_pattern(w)).unwrap_or(true))
        .map(|w| w.to_string())
        .collect();
    c.check(
        format!("covers/{kind}"),
        "upper covers by reflections equal the cycle-pattern covers",
        format!("every w in {kind}"),
        "0 differences".into(),
        format!("{} differences {}", bad.len(), list(&bad)),
        bad.is_empty(),
    );

    let sym = GroupKind::s(o.scope(4, 5));
    let elements = sym.elements();
    let mut differences = 0;
    for u in &elements {
        for v in &elements {
            if abs_leq(u, v, sym)? != sn_leq_noncrossing(u, v)? {
                differences += 1;
            }
        }
    }
    c.eq(
        format!("noncrossing/{sym}"),
        "absolute order equals the noncrossing-cycle criterion",
        format!("all {} pairs of {sym}", elements.len() * elements.len()),
        0,
        differences,
    );

    for family in [Family::S, Family::B, Family::D] {
        let from = if family == Family::D { 2 } else { 1 };
        for n in from..=o.scope(3, 4) {
            let kind = GroupKind::new(family, n)?;
            let sizes: Vec<BigInt> = full_poset(kind).rank_sizes().into_iter().map(BigInt::from).collect();
            c.eq(
                format!("rank-gf/{kind}"),
                "rank generating function is the product of (1 + e_i t)",
                format!("{kind}, exponents {:?}", kind.exponents()),
                list(&rank_polynomial(&kind.exponents())),
                list(&sizes),
            );
        }
    }

    let b3 = GroupKind::b(3);
    let all = b3.elements();
    let (mut intervals, mut zeta_bad, mut palindrome_bad) = (0, Vec::new(), Vec::new());
    for u in &all {
        for v in all.iter().filter(|v| leq(u, v)) {
            let p = build_interval(u, v, b3)?.into_poset();
            intervals += 1;
            if !census(&p).identities_hold() {
                zeta_bad.push(format!("[{u}, {v}]"));
            }
            let sizes = p.rank_sizes();
            if sizes.iter().ne(sizes.iter().rev()) {
                palindrome_bad.push(format!("[{u}, {v}]"));
            }
        }
    }
    let mut bounded = vec![(b3.to_string(), intervals, zeta_bad)];
    if o.full() {
        for kind in [GroupKind::b(4), GroupKind::d(4)] {
            let bad = kind
                .elements()
                .iter()
                .filter(|w| !census(&lower_interval(w, kind).expect("w is in kind")).identities_hold())
                .map(|w| format!("[e, {w}]"))
                .collect();
            bounded.push((kind.to_string(), kind.order(), bad));
        }
    }
    for (name, count, bad) in bounded {
        c.check(
            format!("zeta/{name}"),
            "Z(2) = #P and Z(-1) = μ for every interval",
            format!("{name}, {count} intervals"),
            "0 failures".into(),
            format!("{} failures {}", bad.len(), list(&bad)),
            bad.is_empty(),
        );
    }
    c.check(
        "self-dual/B3".into(),
        "rank sizes of every interval are palindromic",
        format!("B3, {intervals} intervals"),
        "0 failures".into(),
        format!("{} failures {}", palindrome_bad.len(), list(&palindrome_bad)),
        palindrome_bad.is_empty(),
    );
    Ok(())
}

fn lifting(c: &mut Claims, o: SuiteOptions) -> Result<()> {
    for (family, max) in [(Family::B, o.scope(3, 4)), (Family::S, o.scope(3, 5))] {
        for n in 2..=max {
            for check in lifting_ideal_checks(family, n)? {
                c.check(
                    format!("ideals/{family}{n}/{}", check.name),
                    "ideal has the stated rank, is graded and Cohen-Macaulay",
                    format!("{family}_{n}, {} elements", check.size),
                    format!("rank {}, graded, CM", check.expected_rank),
                    format!(
                        "rank {}, {}, {}",
                        check.rank,
                        if check.graded { "graded" } else { "not graded" },
                        if check.cm { "CM" } else { "not CM" }
                    ),
                    check.passes(),
                );
            }
        }
    }

    for kind in [AmbientKind::Symmetric, AmbientKind::CoxeterIdeal] {
        for n in 2..=o.scope(3, 4) {
            let ambient = Ambient::new(kind, n)?;
            let name = match kind {
                AmbientKind::Symmetric => format!("S{n}"),
                AmbientKind::CoxeterIdeal => format!("J{n}"),
            };
            let (mut pairs, mut missing) = (0, Vec::new());
            for w in ambient.upper.elements() {
                let base = fiber_map(w, n)?.base;
                for u in ambient.lower.elements().iter().filter(|u| leq(&base, u)) {
                    pairs += 1;
                    if cover_lift_witness(w, u, &ambient)?.is_none() {
                        missing.push(format!("({w}, {u})"));
                    }
                }
            }
            c.check(
                format!("cover-lift/{name}"),
                "every (w, u) with π(w) ⪯ u has a lift v of u covering it with w ⪯ v",
                format!("{name}, {pairs} pairs"),
                "0 missing".into(),
                format!("{} missing {}", missing.len(), list(&missing)),
                missing.is_empty(),
            );
            let failure = fiber_ideal_identity(&ambient);
            c.check(
                format!("fiber-ideal/{name}"),
                "the preimage of every principal ideal is generated by the preimage of its top",
                name.clone(),
                "holds for all q".into(),
                failure.as_ref().map_or("holds for all q".into(), |q| format!("fails at {q}")),
                failure.is_none(),
            );
        }
    }
    Ok(())
}

/// Distinct criteria among the failing claims.
pub fn failing_criteria(report: &VerificationSuiteReport) -> BTreeSet<u8> {
    report.failures().map(|c| c.criterion).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_profile_passes() {
        let report = run_verify_suite(SuiteOptions { profile: Profile::Quick, ..SuiteOptions::default() });
        let failures: Vec<_> = report.failures().collect();
        assert!(report.passed, "{failures:#?}");
        assert!(report.guard.is_none());
        for id in CRITERIA {
            assert!(report.claims.iter().any(|c| c.criterion == id), "criterion {id} recorded nothing");
        }
    }

    #[test]
    fn injected_faults_are_reported() {
        let quick = SuiteOptions { profile: Profile::Quick, ..SuiteOptions::default() };
        let report = run_verify_suite(SuiteOptions { fault: Some(Fault::MobiusSign), ..quick });
        assert!(!report.passed);
        assert_eq!(failing_criteria(&report), BTreeSet::from([1]));
        assert!(report.failures().all(|c| c.id.ends_with("/mobius")));

        let report = run_verify_suite(SuiteOptions { fault: Some(Fault::LiteralConvention), ..quick });
        assert_eq!(failing_criteria(&report), BTreeSet::from([3]));
        assert!(report
            .failures()
            .any(|c| c.id == "03/lkr/k=1,r=1/cardinality" && c.expected == "4" && c.computed == "6"));
    }

    #[test]
    fn ids_are_unique_and_stable() {
        let o = SuiteOptions { profile: Profile::Quick, ..SuiteOptions::default() };
        let a = run_verify_suite(o);
        let ids: BTreeSet<_> = a.claims.iter().map(|c| c.id.clone()).collect();
        assert_eq!(ids.len(), a.claims.len());
        assert_eq!(a.claims, run_verify_suite(o).claims);
    }

    #[test]
    fn rank_polynomial_of_b2() {
        assert_eq!(rank_polynomial(&[1, 3]), vec![BigInt::from(1), BigInt::from(4), BigInt::from(3)]);
    }
}

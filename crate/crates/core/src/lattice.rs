//! Meets, joins and the hook-partition lattice criteria.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::order::{build_interval, leq, Poset};
use crate::perm::{Family, GroupKind, SignedPerm};

fn greatest(p: &Poset, set: &FixedBitSet) -> Option<usize> {
    let m = set.ones().next_back()?;
    set.ones().all(|z| p.leq(z, m)).then_some(m)
}

fn common_below(p: &Poset, x: usize, y: usize) -> FixedBitSet {
    let mut set = p.downset(x);
    set.intersect_with(&p.downset(y));
    set
}

/// Greatest common lower bound of `x` and `y`, if there is one.
pub fn meet(p: &Poset, x: usize, y: usize) -> Option<usize> {
    greatest(p, &common_below(p, x, y))
}

/// Least common upper bound of `x` and `y`, if there is one.
pub fn join(p: &Poset, x: usize, y: usize) -> Option<usize> {
    let mut set = p.upset(x).clone();
    set.intersect_with(p.upset(y));
    let m = set.ones().next()?;
    set.ones().all(|z| p.leq(m, z)).then_some(m)
}

/// The maximal elements among the common lower bounds of `x` and `y`.
pub fn maximal_common_lower_bounds(p: &Poset, x: usize, y: usize) -> Vec<usize> {
    let set = common_below(p, x, y);
    set.ones().filter(|&z| set.ones().all(|w| w == z || !p.leq(z, w))).collect()
}

/// Maximal common lower bounds of `u` and `v` in `Abs(kind)`.
pub fn common_lower_bounds(u: &SignedPerm, v: &SignedPerm, kind: GroupKind) -> Result<Vec<SignedPerm>> {
    let below_u = build_interval(&SignedPerm::identity(u.n()), u, kind)?;
    kind.check_member(v)?;
    let p = below_u.poset();
    let top = p.require(u)?;
    let both: Vec<usize> = (0..p.len()).filter(|&z| p.leq(z, top) && leq(p.element(z), v)).collect();
    Ok(both.iter().filter(|&&z| both.iter().all(|&w| w == z || !p.leq(z, w))).map(|&z| *p.element(z)).collect())
}

/// A pair without a meet, with its maximal common lower bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetWitness {
    pub x: SignedPerm,
    pub y: SignedPerm,
    pub lower_bounds: Vec<SignedPerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVerdict {
    pub is_lattice: bool,
    pub witness: Option<MeetWitness>,
}

/// Whether every pair of the bounded poset `p` has a meet. The witness is the
/// first failing pair in index order.
pub fn is_lattice(p: &Poset) -> Result<LatticeVerdict> {
    if !p.is_bounded() {
        return Err(Error::Unbounded("minimum and maximum"));
    }
    let downs: Vec<FixedBitSet> = (0..p.len()).map(|i| p.downset(i)).collect();
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            if p.leq(x, y) {
                continue;
            }
            let mut set = downs[x].clone();
            set.intersect_with(&downs[y]);
            if greatest(p, &set).is_none() {
                let lower_bounds = maximal_common_lower_bounds(p, x, y).into_iter().map(|z| *p.element(z)).collect();
                return Ok(LatticeVerdict {
                    is_lattice: false,
                    witness: Some(MeetWitness { x: *p.element(x), y: *p.element(y), lower_bounds }),
                });
            }
        }
    }
    Ok(LatticeVerdict { is_lattice: true, witness: None })
}

/// Whether `[e, w]` should be a lattice: a hook `μ(w)` in type B; `μ(w)`
/// empty, `(k, 1)` or `(1, 1, 1, 1)` in type D. Type S intervals are always
/// lattices.
pub fn predict_lattice(w: &SignedPerm, kind: GroupKind) -> Result<bool> {
    kind.check_member(w)?;
    let mu = w.mu_partition();
    Ok(match kind.family {
        Family::S => true,
        Family::B => mu.is_hook(),
        Family::D => matches!(mu.parts.as_slice(), [] | [_, 1] | [1, 1, 1, 1]),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanMismatch {
    pub w: SignedPerm,
    pub predicted: bool,
    pub verdict: LatticeVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub kind: GroupKind,
    pub checked: usize,
    pub lattices: usize,
    pub mismatches: Vec<ScanMismatch>,
    /// Non-lattice witnesses of the intervals that agreed with the prediction.
    pub witnesses: Vec<(SignedPerm, MeetWitness)>,
}

/// Compares `is_lattice([e, w])` with [`predict_lattice`] for every `w`.
/// `max_n` is the size guard.
pub fn theorem_scan(kind: GroupKind, max_n: usize) -> Result<ScanReport> {
    if kind.n > max_n {
        return Err(Error::GuardExceeded { what: "theorem scan rank", count: kind.n, limit: max_n });
    }
    let e = SignedPerm::identity(kind.n);
    let mut report = ScanReport { kind, checked: 0, lattices: 0, mismatches: Vec::new(), witnesses: Vec::new() };
    for w in kind.elements() {
        let interval = build_interval(&e, &w, kind)?;
        let verdict = is_lattice(interval.poset())?;
        let predicted = predict_lattice(&w, kind)?;
        report.checked += 1;
        if verdict.is_lattice {
            report.lattices += 1;
        }
        if predicted != verdict.is_lattice {
            report.mismatches.push(ScanMismatch { w, predicted, verdict });
        } else if let Some(witness) = verdict.witness {
            report.witnesses.push((w, witness));
        }
    }
    Ok(report)
}

/// Absolute length in `kind` by breadth-first search in the Cayley graph
/// of its reflections; independent of the cycle formula.
pub fn cayley_lengths(kind: GroupKind) -> hashbrown::HashMap<SignedPerm, usize> {
    let reflections = kind.reflections();
    let mut dist = hashbrown::HashMap::new();
    let e = SignedPerm::identity(kind.n);
    dist.insert(e, 0);
    let mut frontier = alloc::vec![e];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for t in &reflections {
                let z = *w * *t;
                if !dist.contains_key(&z) {
                    dist.insert(z, d);
                    next.push(z);
                }
            }
        }
        frontier = next;
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> SignedPerm {
        parse_cycles(s, n).unwrap()
    }

    fn interval(top: &str, kind: GroupKind) -> Poset {
        build_interval(&SignedPerm::identity(kind.n), &p(top, kind.n), kind).unwrap().into_poset()
    }

    #[test]
    fn meets() {
        let l2 = interval("[1][2]", GroupKind::b(2));
        let a = l2.index_of(&p("((1,2))", 2)).unwrap();
        let b = l2.index_of(&p("((1,-2))", 2)).unwrap();
        assert_eq!(meet(&l2, a, b), Some(0));
        assert_eq!(meet(&l2, a, a), Some(a));
        assert_eq!(join(&l2, a, b), l2.top());

        let d4 = GroupKind::d(4);
        let mut lower = common_lower_bounds(&p("[1,2][3]", 4), &p("[1,2][4]", 4), d4).unwrap();
        let mut want = alloc::vec![p("((1,2))", 4), p("((1,-2))", 4)];
        lower.sort();
        want.sort();
        assert_eq!(lower, want);
    }

    #[test]
    fn lattice_examples() {
        assert!(is_lattice(&interval("[1,2,3]", GroupKind::b(3))).unwrap().is_lattice);
        let v = is_lattice(&interval("[1,2][3,4]", GroupKind::b(4))).unwrap();
        assert!(!v.is_lattice && v.witness.unwrap().lower_bounds.len() >= 2);
        assert!(is_lattice(&interval("[1][2][3][4]", GroupKind::d(4))).unwrap().is_lattice);
    }

    #[test]
    fn predictions() {
        let b5 = GroupKind::b(5);
        assert!(!predict_lattice(&p("[1,2][3,4][5]", 5), b5).unwrap());
        assert!(predict_lattice(&p("[1,2,3,4][5]", 5), b5).unwrap());
        assert!(predict_lattice(&p("[1,2,3,4][5]", 5), GroupKind::d(5)).unwrap());
        assert!(predict_lattice(&p("[1][2][3][4]", 4), GroupKind::d(4)).unwrap());
        assert!(!predict_lattice(&p("[1][2][3][4][5][6]", 6), GroupKind::d(6)).unwrap());
    }

    #[test]
    fn small_scans() {
        let r = theorem_scan(GroupKind::b(2), 4).unwrap();
        assert_eq!((r.checked, r.lattices, r.mismatches.len()), (8, 8, 0));
        let r = theorem_scan(GroupKind::b(3), 4).unwrap();
        assert_eq!((r.checked, r.mismatches.len()), (48, 0));
        assert!(theorem_scan(GroupKind::b(5), 4).is_err());
    }

    #[test]
    fn d_length_restricts_from_b() {
        for n in 2..=4 {
            for (w, d) in cayley_lengths(GroupKind::d(n)) {
                assert_eq!(w.absolute_length(), d, "{w}");
            }
        }
    }
}

use alloc::{format, vec::Vec};
use core::fmt;

use fixedbitset::FixedBitSet;

use super::leq;
use super::poset::{build_ideal, coxeter_ideal, full_poset, Poset};
use crate::error::{Error, Result};
use crate::perm::{GroupKind, SignedPerm};

/// `π_i(w)`: `w` with `±i` deleted from its cycle. The rank is unchanged.
pub fn project_pi(w: &SignedPerm, i: usize) -> Result<SignedPerm> {
    w.delete(i)
}

/// A point of `π(P) × {0̂ < 1̂}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberPoint {
    pub base: SignedPerm,
    /// `true` for `1̂`.
    pub flag: bool,
}

impl FiberPoint {
    pub fn leq(&self, other: &FiberPoint) -> bool {
        (!self.flag || other.flag) && leq(&self.base, &other.base)
    }
}

impl fmt::Display for FiberPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, if self.flag { "1" } else { "0" })
    }
}

/// `f_i(w) = (π_i(w), 0̂)` if `w` fixes `i`, `(π_i(w), 1̂)` otherwise. For
/// `i = n` the base is read in rank `n - 1`.
pub fn fiber_map(w: &SignedPerm, i: usize) -> Result<FiberPoint> {
    let projected = project_pi(w, i)?;
    let base = if i == w.n() { projected.truncate(i - 1).expect("i is fixed after deletion") } else { projected };
    Ok(FiberPoint { base, flag: w.moves(i) })
}

/// Which family of posets `P_n` the fiber maps act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbientKind {
    /// `P_n = Abs(S_n)`.
    Symmetric,
    /// `P_n = J_n`.
    CoxeterIdeal,
}

/// `P_n` together with `P_{n-1}`, built once.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub kind: AmbientKind,
    pub n: usize,
    pub upper: Poset,
    pub lower: Poset,
}

impl Ambient {
    pub fn new(kind: AmbientKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedRank { n, max: crate::perm::MAX_RANK });
        }
        let build = |m: usize| match kind {
            AmbientKind::Symmetric => GroupKind::new(crate::perm::Family::S, m).map(full_poset),
            AmbientKind::CoxeterIdeal => coxeter_ideal(m),
        };
        Ok(Ambient { kind, n, upper: build(n)?, lower: build(n - 1)? })
    }

    pub fn group(&self) -> GroupKind {
        self.upper.kind()
    }

    fn fibers(&self) -> Vec<FiberPoint> {
        self.upper.elements().iter().map(|w| fiber_map(w, self.n).expect("rank checked")).collect()
    }
}

/// `M(u)`: the ideal of `P_n` generated by the `v ∈ P_n` with `π_n(v) = u`.
pub fn fiber_ideal_m(u: &SignedPerm, ambient: &Ambient) -> Result<Poset> {
    ambient.lower.require(u)?;
    let generators: Vec<SignedPerm> = ambient
        .upper
        .elements()
        .iter()
        .filter(|v| fiber_map(v, ambient.n).map(|f| f.base == *u).unwrap_or(false))
        .copied()
        .collect();
    build_ideal(&generators, ambient.group())
}

/// Given `w ∈ P_n` and `u ∈ P_{n-1}` with `π_n(w) ⪯ u`, finds `v ∈ P_n`
/// covering `u` with `π_n(v) = u` and `w ⪯ v`. `Ok(None)` means no such `v`.
pub fn cover_lift_witness(w: &SignedPerm, u: &SignedPerm, ambient: &Ambient) -> Result<Option<SignedPerm>> {
    ambient.upper.require(w)?;
    ambient.lower.require(u)?;
    let base = fiber_map(w, ambient.n)?.base;
    if !leq(&base, u) {
        return Err(Error::NotBelow { lower: format!("{base}"), upper: format!("{u}") });
    }
    let lifted = u.embed(ambient.n);
    Ok(ambient.upper.elements().iter().copied().find(|v| {
        v.absolute_length() == lifted.absolute_length() + 1
            && leq(&lifted, v)
            && fiber_map(v, ambient.n).map(|f| f.base == *u).unwrap_or(false)
            && leq(w, v)
    }))
}

/// Checks `f_n⁻¹(⟨q⟩) = ⟨f_n⁻¹(q)⟩` for every `q ∈ P_{n-1} × {0̂ < 1̂}`.
/// Returns the first `q` where it fails.
pub fn fiber_ideal_identity(ambient: &Ambient) -> Option<FiberPoint> {
    let p = &ambient.upper;
    let fibers = ambient.fibers();
    let downsets: Vec<FixedBitSet> = (0..p.len()).map(|i| p.downset(i)).collect();
    for base in ambient.lower.elements() {
        for flag in [false, true] {
            let q = FiberPoint { base: *base, flag };
            let mut lhs = FixedBitSet::with_capacity(p.len());
            let mut rhs = FixedBitSet::with_capacity(p.len());
            for (i, f) in fibers.iter().enumerate() {
                if f.leq(&q) {
                    lhs.insert(i);
                }
                if *f == q {
                    rhs.union_with(&downsets[i]);
                }
            }
            if lhs != rhs {
                return Some(q);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> SignedPerm {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project_pi(&p("[1,-5,2]((3,-4))", 5), 5).unwrap(), p("[1,2]((3,-4))", 5));
        assert_eq!(project_pi(&SignedPerm::identity(3), 2).unwrap(), SignedPerm::identity(3));
        assert_eq!(project_pi(&p("[1,2]", 2), 2).unwrap(), p("[1]", 2));
        assert!(project_pi(&p("[1,2]", 2), 3).is_err());
    }

    #[test]
    fn fiber_examples() {
        let f = fiber_map(&p("[1,-5,2]((3,-4))", 5), 5).unwrap();
        assert_eq!(f, FiberPoint { base: p("[1,2]((3,-4))", 4), flag: true });
        let f = fiber_map(&SignedPerm::identity(3), 3).unwrap();
        assert_eq!(f, FiberPoint { base: SignedPerm::identity(2), flag: false });
    }

    #[test]
    fn m_ideals_small() {
        let amb = Ambient::new(AmbientKind::CoxeterIdeal, 2).unwrap();
        let m = fiber_ideal_m(&SignedPerm::identity(1), &amb).unwrap();
        assert_eq!(m.max_rank(), 1);
        for t in GroupKind::b(2).reflections().iter().filter(|t| t.moves(2)) {
            assert!(m.contains(t), "{t}");
        }
        let amb = Ambient::new(AmbientKind::Symmetric, 3).unwrap();
        assert_eq!(fiber_ideal_m(&p("((1,2))", 2), &amb).unwrap().max_rank(), 2);
    }

    #[test]
    fn fiber_identity_and_lift_small() {
        for kind in [AmbientKind::Symmetric, AmbientKind::CoxeterIdeal] {
            let amb = Ambient::new(kind, 3).unwrap();
            assert_eq!(fiber_ideal_identity(&amb), None);
            for w in amb.upper.elements() {
                for u in amb.lower.elements() {
                    if leq(&fiber_map(w, 3).unwrap().base, u) {
                        assert!(cover_lift_witness(w, u, &amb).unwrap().is_some(), "{w} {u}");
                    }
                }
            }
        }
    }
}

//! The absolute order: `u ⪯ v` iff `ℓ(u) + ℓ(u⁻¹v) = ℓ(v)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{GroupKind, SignedPerm};

mod fiber;
mod patterns;
mod poset;

pub use fiber::{
    cover_lift_witness, fiber_ideal_identity, fiber_ideal_m, fiber_map, project_pi, Ambient, AmbientKind, FiberPoint,
};
pub use patterns::covers_by_pattern;
pub use poset::{
    build_ideal, build_interval, coxeter_ideal, full_poset, translate_interval, Interval, Poset, PosetLabel,
    Translation,
};

/// Length additivity, without membership checks.
#[inline]
pub fn leq(u: &SignedPerm, v: &SignedPerm) -> bool {
    u.absolute_length() + (u.inverse() * *v).absolute_length() == v.absolute_length()
}

/// `u ⪯ v` in `Abs(kind)`.
pub fn abs_leq(u: &SignedPerm, v: &SignedPerm, kind: GroupKind) -> Result<bool> {
    kind.check_member(u)?;
    kind.check_member(v)?;
    Ok(leq(u, v))
}

/// Upper covers `wt` of `w`, one per reflection `t` that raises the length.
/// Sorted.
pub fn covers(w: &SignedPerm, kind: GroupKind) -> Result<Vec<SignedPerm>> {
    kind.check_member(w)?;
    Ok(upper_covers(w, &kind.reflections()))
}

pub(crate) fn upper_covers(w: &SignedPerm, reflections: &[SignedPerm]) -> Vec<SignedPerm> {
    let len = w.absolute_length();
    let mut out: Vec<SignedPerm> =
        reflections.iter().map(|t| *w * *t).filter(|z| z.absolute_length() == len + 1).collect();
    out.sort();
    out.dedup();
    out
}

pub(crate) fn lower_covers(w: &SignedPerm, reflections: &[SignedPerm]) -> Vec<SignedPerm> {
    let len = w.absolute_length();
    let mut out: Vec<SignedPerm> =
        reflections.iter().map(|t| *w * *t).filter(|z| z.absolute_length() + 1 == len).collect();
    out.sort();
    out.dedup();
    out
}

/// Order test on `S_n` through the cycle criterion: every cycle of `u` is
/// obtained from a cycle of `v` by deleting elements, and cycles of `u`
/// inside the same cycle of `v` do not cross.
pub fn sn_leq_noncrossing(u: &SignedPerm, v: &SignedPerm) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch { left: u.n(), right: v.n() });
    }
    let kind = GroupKind::s(u.n());
    kind.check_member(u)?;
    kind.check_member(v)?;

    let n = v.n();
    // Position of each value inside its v-cycle, and which v-cycle.
    let mut host = alloc::vec![usize::MAX; n + 1];
    let mut pos = alloc::vec![0usize; n + 1];
    let v_cycles = v.cycles();
    let v_lists: Vec<&[i32]> = v_cycles.cycles.iter().map(|c| c.entries()).collect();
    for (c, entries) in v_lists.iter().enumerate() {
        for (p, &x) in entries.iter().enumerate() {
            host[x as usize] = c;
            pos[x as usize] = p;
        }
    }

    let u_cycles = u.cycles();
    let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); v_lists.len()];
    for (k, cycle) in u_cycles.cycles.iter().enumerate() {
        let entries = cycle.entries();
        let c = host[entries[0] as usize];
        if c == usize::MAX || entries.iter().any(|&x| host[x as usize] != c) {
            return Ok(false);
        }
        // Cyclic order must agree: positions increase exactly once around.
        let len = v_lists[c].len();
        let mut wraps = 0;
        for p in 0..entries.len() {
            let a = pos[entries[p] as usize];
            let b = pos[entries[(p + 1) % entries.len()] as usize];
            if b <= a {
                wraps += 1;
            }
        }
        if wraps != 1 || entries.len() > len {
            return Ok(false);
        }
        members[c].push(k);
    }

    for (c, ks) in members.iter().enumerate() {
        if ks.len() < 2 {
            continue;
        }
        let entries = v_lists[c];
        let mut owner = alloc::vec![usize::MAX; n + 1];
        for &k in ks {
            for &x in u_cycles.cycles[k].entries() {
                owner[x as usize] = k;
            }
        }
        for (i, &a) in ks.iter().enumerate() {
            for &b in &ks[i + 1..] {
                // Reading the v-cycle, the a/b pattern must have at most two
                // cyclic blocks.
                let word: Vec<usize> =
                    entries.iter().map(|&x| owner[x as usize]).filter(|&o| o == a || o == b).collect();
                let changes = (0..word.len()).filter(|&p| word[p] != word[(p + 1) % word.len()]).count();
                if changes > 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks `[e,w] ≅ [e,b] × [e,p]` for `w = b·p` (balanced times paired
/// part) through the explicit map `(x, y) ↦ xy`.
pub fn verify_product_decomposition(w: &SignedPerm, kind: GroupKind) -> Result<bool> {
    let (b, p) = w.cycles().split();
    let whole = build_interval(&SignedPerm::identity(w.n()), w, kind)?;
    let left = build_interval(&SignedPerm::identity(w.n()), &b, GroupKind::b(w.n()))?;
    let right = build_interval(&SignedPerm::identity(w.n()), &p, GroupKind::b(w.n()))?;
    let (lp, rp, wp) = (left.poset(), right.poset(), whole.poset());
    if lp.len() * rp.len() != wp.len() {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(wp.len());
    for x in lp.elements() {
        for y in rp.elements() {
            match wp.index_of(&(*x * *y)) {
                Some(k) => image.push(k),
                None => return Ok(false),
            }
        }
    }
    let mut seen = image.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != wp.len() {
        return Ok(false);
    }
    let m = rp.len();
    for i in 0..image.len() {
        for j in 0..image.len() {
            let product = lp.leq(i / m, j / m) && rp.leq(i % m, j % m);
            if product != wp.leq(image[i], image[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> SignedPerm {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn comparability_examples() {
        let b4 = GroupKind::b(4);
        assert!(abs_leq(&p("((1,2))", 4), &p("[3,-4]((1,2))", 4), b4).unwrap());
        for w in GroupKind::b(3).elements() {
            assert!(leq(&SignedPerm::identity(3), &w));
        }
        assert!(!abs_leq(&p("[1][2]", 2), &p("[1,2]", 2), GroupKind::b(2)).unwrap());
        assert!(abs_leq(&p("[1]", 4), &p("e", 4), GroupKind::d(4)).is_err());
    }

    #[test]
    fn noncrossing_examples() {
        let v = p("((3,5,1,9,2,6,4))", 9);
        assert!(sn_leq_noncrossing(&p("((3,6,4))((5,9,2))", 9), &v).unwrap());
        assert!(!sn_leq_noncrossing(&p("((3,2,4))((5,9,6))", 9), &v).unwrap());
        assert!(sn_leq_noncrossing(&SignedPerm::identity(9), &v).unwrap());
        assert!(sn_leq_noncrossing(&p("((1,-2))", 2), &p("((1,2))", 2)).is_err());
    }

    #[test]
    fn covers_in_b2() {
        let b2 = GroupKind::b(2);
        let got = covers(&p("((1,2))", 2), b2).unwrap();
        let mut want = alloc::vec![p("[1,2]", 2), p("[1,-2]", 2), p("[1][2]", 2)];
        want.sort();
        assert_eq!(got, want);
        let mut atoms = b2.reflections();
        atoms.sort();
        assert_eq!(covers(&SignedPerm::identity(2), b2).unwrap(), atoms);
        assert!(covers(&p("[1,2]", 2), b2).unwrap().is_empty());
    }

    #[test]
    fn product_decomposition_small() {
        assert!(verify_product_decomposition(&p("[3,-4]((1,2))", 4), GroupKind::b(4)).unwrap());
        assert!(verify_product_decomposition(&p("[1]((2,3))", 3), GroupKind::b(3)).unwrap());
    }
}

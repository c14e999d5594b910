//! Recomputes invariants from nothing but Cayley-graph distances and the
//! length-additivity definition of the order, then compares with the
//! library's posets, closed forms and series.

use std::collections::HashMap;

use absorder_core::invariants::{
    census, closed_form_lkr, closed_form_ln, closed_form_ncb, lkr_top, BoundaryConvention,
};
use absorder_core::lattice::cayley_lengths;
use absorder_core::order::build_interval;
use absorder_core::series::{predicted_chi_jn, predicted_chi_sn};
use absorder_core::{parse_cycles, GroupKind, SignedPerm};
use num_bigint::BigInt;

struct Oracle {
    len: HashMap<SignedPerm, usize>,
}

impl Oracle {
    fn new(kind: GroupKind) -> Self {
        Oracle { len: cayley_lengths(kind).into_iter().collect() }
    }

    fn leq(&self, a: &SignedPerm, b: &SignedPerm) -> bool {
        self.len[a] + self.len[&(a.inverse() * *b)] == self.len[b]
    }

    /// Elements below any of `tops`, sorted by length.
    fn ideal(&self, tops: &[SignedPerm]) -> Vec<SignedPerm> {
        let mut out: Vec<SignedPerm> =
            self.len.keys().filter(|g| tops.iter().any(|t| self.leq(g, t))).copied().collect();
        out.sort_by_key(|g| (self.len[g], *g));
        out
    }

    /// `μ(e, x)` for each `x` of `elems`.
    fn mobius_from_bottom(&self, elems: &[SignedPerm]) -> Vec<BigInt> {
        let mut mu: Vec<BigInt> = Vec::with_capacity(elems.len());
        for (j, y) in elems.iter().enumerate() {
            let value = if j == 0 {
                BigInt::from(1)
            } else {
                -(0..j).filter(|&i| self.leq(&elems[i], y)).map(|i| &mu[i]).sum::<BigInt>()
            };
            mu.push(value);
        }
        mu
    }

    /// Multichains `x_1 ≤ … ≤ x_k` inside `elems`.
    fn multichains(&self, elems: &[SignedPerm], k: usize) -> BigInt {
        let mut count = vec![BigInt::from(1); elems.len()];
        for _ in 1..k {
            count = elems
                .iter()
                .map(|y| elems.iter().zip(&count).filter(|(x, _)| self.leq(x, y)).map(|(_, c)| c).sum())
                .collect();
        }
        count.into_iter().sum()
    }

    fn maximal_chains(&self, elems: &[SignedPerm]) -> BigInt {
        let mut paths = vec![BigInt::from(0); elems.len()];
        paths[0] = BigInt::from(1);
        for j in 1..elems.len() {
            paths[j] = (0..j)
                .filter(|&i| self.len[&elems[i]] + 1 == self.len[&elems[j]] && self.leq(&elems[i], &elems[j]))
                .map(|i| paths[i].clone())
                .sum();
        }
        paths[elems.len() - 1].clone()
    }
}

fn check_interval(kind: GroupKind, top: SignedPerm, formula: absorder_core::invariants::InvariantReport) {
    let oracle = Oracle::new(kind);
    let elems = oracle.ideal(&[top]);
    let mobius = oracle.mobius_from_bottom(&elems).pop().unwrap();
    let measured = census(&build_interval(&SignedPerm::identity(kind.n), &top, kind).unwrap().into_poset());

    assert_eq!(BigInt::from(elems.len()), measured.cardinality, "{top}");
    assert_eq!(Some(&mobius), measured.mobius.as_ref(), "{top}");
    assert_eq!(Some(oracle.maximal_chains(&elems)), measured.max_chains, "{top}");
    let zeta = measured.zeta.as_ref().unwrap();
    for m in 2..=5 {
        let z = zeta.eval_int(m as i64);
        assert_eq!(z.to_integer(), oracle.multichains(&elems, m - 1), "{top} m={m}");
        assert_eq!(formula.zeta.as_ref().unwrap().eval_int(m as i64), z, "{top} m={m}");
    }
    assert_eq!(formula.cardinality, measured.cardinality, "{top}");
    assert_eq!(formula.mobius, measured.mobius, "{top}");
}

#[test]
fn noncrossing_partitions() {
    for n in 1..=3 {
        check_interval(GroupKind::b(n), lkr_top(n, 0), closed_form_ncb(n));
    }
}

#[test]
fn involution_intervals() {
    for n in 1..=4 {
        check_interval(GroupKind::b(n), lkr_top(0, n), closed_form_ln(n));
    }
    for (k, r) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3)] {
        check_interval(GroupKind::b(k + r), lkr_top(k, r), closed_form_lkr(k, r, BoundaryConvention::Enumerated));
    }
}

#[test]
fn reduced_euler_characteristics() {
    // χ̃(P ∖ {e}) = -Σ_{x ∈ P} μ(e, x).
    let chi = |oracle: &Oracle, tops: &[SignedPerm]| -> BigInt {
        -oracle.mobius_from_bottom(&oracle.ideal(tops)).into_iter().sum::<BigInt>()
    };
    for (n, value) in predicted_chi_sn(4).unwrap() {
        let kind = GroupKind::s(n);
        let oracle = Oracle::new(kind);
        let all: Vec<SignedPerm> = oracle.len.keys().copied().collect();
        assert_eq!(chi(&oracle, &all), value, "S_{n}");
    }
    for (n, value) in predicted_chi_jn(3).unwrap() {
        let kind = GroupKind::b(n);
        let oracle = Oracle::new(kind);
        assert_eq!(chi(&oracle, &kind.coxeter_elements()), value, "J_{n}");
    }
    let oracle = Oracle::new(GroupKind::b(2));
    assert_eq!(chi(&oracle, &GroupKind::b(2).coxeter_elements()), BigInt::from(-3));
}

#[test]
fn d4_interval_elements() {
    let d4 = GroupKind::d(4);
    let oracle = Oracle::new(d4);
    let top = parse_cycles("[1][2][3][4]", 4).unwrap();
    let elems = oracle.ideal(&[top]);
    let p = build_interval(&SignedPerm::identity(4), &top, d4).unwrap();
    assert_eq!(elems.len(), p.len());
    assert!(elems.iter().all(|w| p.poset().contains(w)));
}

use absorder_core::invariants::mobius_with_top;
use absorder_core::order::{coxeter_ideal, full_poset};
use absorder_core::series::{predicted_chi_jn, predicted_chi_sn};
use absorder_core::topology::{homology, order_complex, Strip};
use absorder_core::GroupKind;
use num_bigint::BigInt;

fn oracles(p: &absorder_core::order::Poset) -> (BigInt, BigInt) {
    let mobius = mobius_with_top(p).unwrap();
    let complex = order_complex(p, Strip::Bottom).unwrap();
    let euler = homology(&complex, false).unwrap().euler;
    (mobius, BigInt::from(euler))
}

#[test]
fn symmetric_group_three_way() {
    let series = predicted_chi_sn(5).unwrap();
    for n in 1..=5 {
        let (mobius, euler) = oracles(&full_poset(GroupKind::s(n)));
        assert_eq!(mobius, euler, "n = {n}");
        assert_eq!(series[n - 1].1, mobius, "n = {n}");
    }
}

#[test]
fn coxeter_ideal_three_way() {
    let series = predicted_chi_jn(4).unwrap();
    for n in 2..=4 {
        let (mobius, euler) = oracles(&coxeter_ideal(n).unwrap());
        assert_eq!(mobius, euler, "n = {n}");
        assert_eq!(series[n - 2].1, mobius, "n = {n}");
    }
}

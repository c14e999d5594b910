//! JSON, DOT and plain-text renderings of posets and reports.

use std::fmt::Write;

use absorder_core::invariants::InvariantReport;
use absorder_core::order::Poset;
use absorder_core::topology::{HomologyProfile, RankMethod};
use serde_json::{json, Value};

/// `{"kind","n","elements","rank","hasse"}` with Hasse edges as index pairs.
pub fn poset_json(p: &Poset) -> Value {
    json!({
        "kind": p.kind().family.to_string(),
        "n": p.kind().n,
        "elements": p.elements().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "rank": p.ranks(),
        "hasse": p.hasse_edges().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
    })
}

/// Hasse diagram with one `rank=same` layer per rank, bottom to top.
pub fn poset_dot(p: &Poset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"Abs({})\" {{", p.kind()).unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n");
    for r in 0..=p.max_rank() {
        let layer: Vec<String> =
            (0..p.len()).filter(|&i| p.rank(i) == r).map(|i| format!("n{i} [label=\"{}\"];", p.element(i))).collect();
        if !layer.is_empty() {
            writeln!(out, "  {{ rank=same; {} }}", layer.join(" ")).unwrap();
        }
    }
    for (i, j) in p.hasse_edges() {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One line per element: rank, element, upper covers.
pub fn poset_table(p: &Poset) -> String {
    let mut out = format!("# Abs({}): {} elements, rank sizes {:?}\n", p.kind(), p.len(), p.rank_sizes());
    for i in 0..p.len() {
        let ups: Vec<String> = p.up(i).iter().map(|&j| p.element(j).to_string()).collect();
        writeln!(out, "{}\t{}\t{}", p.rank(i), p.element(i), ups.join(" ")).unwrap();
    }
    out
}

pub fn invariants_json(r: &InvariantReport) -> Value {
    let strings =
        |v: &Option<Vec<num_bigint::BigInt>>| v.as_ref().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    json!({
        "cardinality": r.cardinality.to_string(),
        "rank_sizes": strings(&r.rank_sizes),
        "max_chains": r.max_chains.as_ref().map(|x| x.to_string()),
        "mobius": r.mobius.as_ref().map(|x| x.to_string()),
        "zeta": r.zeta.as_ref().map(|z| z.to_string()),
    })
}

pub fn homology_json(h: &HomologyProfile) -> Value {
    json!({
        "dim": h.dim,
        "f_vector": h.f_vector,
        "reduced_betti": h.reduced_betti,
        "betti_minus_one": h.betti_minus_one,
        "euler": h.euler,
        "torsion": h.torsion.as_ref().map(|t| {
            t.iter().map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        }),
        "method": match h.method {
            RankMethod::ModularCertified => "modular-certified",
            RankMethod::Exact => "exact",
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use absorder_core::order::build_interval;
    use absorder_core::{parse_cycles, GroupKind, SignedPerm};

    fn l2() -> Poset {
        let top = parse_cycles("[1][2]", 2).unwrap();
        build_interval(&SignedPerm::identity(2), &top, GroupKind::b(2)).unwrap().into_poset()
    }

    #[test]
    fn json_shape() {
        let v = poset_json(&l2());
        assert_eq!(v["kind"], "B");
        assert_eq!(v["n"], 2);
        assert_eq!(v["elements"].as_array().unwrap().len(), 6);
        assert_eq!(v["elements"][0], "e");
        assert_eq!(v["rank"], json!([0, 1, 1, 1, 1, 2]));
        assert_eq!(v["hasse"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn dot_layers() {
        let dot = poset_dot(&l2());
        assert_eq!(dot.matches("rank=same").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 8);
        assert!(dot.starts_with("digraph") && dot.ends_with("}\n"));
    }
}

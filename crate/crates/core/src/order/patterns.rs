use alloc::{vec, vec::Vec};

use crate::perm::{Cycle, CycleDecomposition, CycleKind, SignedPerm};

/// Upper covers of `w` in `Abs(B_n)`, generated from the cycle structure
/// rather than by multiplying with reflections.
///
/// Fixed points are treated as paired 1-cycles, so the cases where the
/// reflection is disjoint from `w` fall out of the merging patterns.
pub fn covers_by_pattern(w: &SignedPerm) -> Vec<SignedPerm> {
    let n = w.n();
    let dec = w.cycles();
    let balanced: Vec<Cycle> = dec.balanced().cloned().collect();
    let paired = dec.paired_with_fixed();
    let mut out = Vec::new();

    let rebuild = |drop_b: &[usize], drop_p: &[usize], new: Vec<Cycle>| {
        let mut cycles: Vec<Cycle> =
            balanced.iter().enumerate().filter(|(k, _)| !drop_b.contains(k)).map(|(_, c)| c.clone()).collect();
        cycles.extend(paired.iter().enumerate().filter(|(k, _)| !drop_p.contains(k)).map(|(_, c)| c.clone()));
        cycles.extend(new);
        CycleDecomposition { n, cycles, fixed_points: Vec::new() }.recompose()
    };

    // A paired cycle turns balanced, or splits into two balanced cycles.
    for (k, c) in paired.iter().enumerate() {
        let m = c.len();
        for a in rotations(c.entries()) {
            for i in 1..=m {
                let mut b: Vec<i32> = a[..i].to_vec();
                b.extend(a[i..].iter().map(|x| -x));
                out.push(rebuild(&[], &[k], vec![Cycle::new(CycleKind::Balanced, b)]));
            }
            for i in 1..m {
                for j in i + 1..=m {
                    let mut first: Vec<i32> = a[..i].to_vec();
                    first.extend(a[j..].iter().map(|x| -x));
                    let second = a[i..j].to_vec();
                    out.push(rebuild(
                        &[],
                        &[k],
                        vec![Cycle::new(CycleKind::Balanced, first), Cycle::new(CycleKind::Balanced, second)],
                    ));
                }
            }
        }
    }

    // Two paired cycles merge into one.
    for k1 in 0..paired.len() {
        for k2 in k1 + 1..paired.len() {
            for a in rotations(paired[k1].entries()) {
                for b in signed_writings(paired[k2].entries(), false) {
                    let mut merged = a.clone();
                    merged.extend(b);
                    out.push(rebuild(&[], &[k1, k2], vec![Cycle::new(CycleKind::Paired, merged)]));
                }
            }
        }
    }

    // A balanced cycle absorbs a paired one.
    for (kb, bc) in balanced.iter().enumerate() {
        for (kp, pc) in paired.iter().enumerate() {
            for a in signed_writings(bc.entries(), true) {
                for b in signed_writings(pc.entries(), false) {
                    let mut merged = a.clone();
                    merged.extend(b);
                    out.push(rebuild(&[kb], &[kp], vec![Cycle::new(CycleKind::Balanced, merged)]));
                }
            }
        }
    }

    out.sort();
    out.dedup();
    out
}

fn rotations(entries: &[i32]) -> Vec<Vec<i32>> {
    let k = entries.len();
    (0..k).map(|r| (0..k).map(|p| entries[(r + p) % k]).collect()).collect()
}

/// Every way of writing the cycle as a sequence: rotations, where wrapping a
/// balanced cycle flips signs, and their negatives.
fn signed_writings(entries: &[i32], balanced: bool) -> Vec<Vec<i32>> {
    let k = entries.len();
    let mut out = Vec::with_capacity(2 * k);
    for r in 0..k {
        let w: Vec<i32> = (0..k)
            .map(|p| {
                if r + p < k {
                    entries[r + p]
                } else if balanced {
                    -entries[r + p - k]
                } else {
                    entries[r + p - k]
                }
            })
            .collect();
        out.push(w.iter().map(|x| -x).collect());
        out.push(w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::covers;
    use crate::perm::{parse_cycles, GroupKind};

    #[test]
    fn listed_patterns() {
        let w = parse_cycles("((1,2))", 2).unwrap();
        let got = covers_by_pattern(&w);
        assert!(got.contains(&parse_cycles("[1,2]", 2).unwrap()));
        assert!(got.contains(&parse_cycles("[1][2]", 2).unwrap()));
        let w = parse_cycles("((1,2,3))", 4).unwrap();
        assert!(covers_by_pattern(&w).contains(&parse_cycles("((1,2,3,4))", 4).unwrap()));
    }

    #[test]
    fn agrees_with_brute_force_in_b3() {
        let b3 = GroupKind::b(3);
        for w in b3.elements() {
            assert_eq!(covers_by_pattern(&w), covers(&w, b3).unwrap(), "{w}");
        }
    }
}

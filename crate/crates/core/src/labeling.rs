//! Edge labelings of covering relations and an EL-property verifier.

use alloc::{format, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::join;
use crate::order::Poset;
use crate::perm::{GroupKind, SignedPerm};

/// A reflection `t` read off as `[i]` or `((i, ±j))` with `i < j`.
fn reflection_parts(a: &SignedPerm, b: &SignedPerm) -> Result<(usize, Option<(usize, i32)>)> {
    let not_cover = || Error::NotCover(format!("{a}"), format!("{b}"));
    if a.n() != b.n() || b.absolute_length() != a.absolute_length() + 1 {
        return Err(not_cover());
    }
    let t = a.inverse() * *b;
    let moved: Vec<usize> = (1..=t.n()).filter(|&i| t.moves(i)).collect();
    match moved.as_slice() {
        [i] if t.apply(*i as i32) == -(*i as i32) => Ok((*i, None)),
        [i, j] => Ok((*j, Some((*i, t.apply(*i as i32))))),
        _ => Err(not_cover()),
    }
}

/// `λ(a, b)`: `i` if `a⁻¹b = [i]`, `j` if `a⁻¹b = ((i, ±j))` with `i < j`.
pub fn lambda_edge(a: &SignedPerm, b: &SignedPerm) -> Result<usize> {
    reflection_parts(a, b).map(|(j, _)| j)
}

/// Label of the reflection alphabet `[1] < … < [n] < ((1,2)) < ((1,3)) < …`,
/// paired reflections in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lambda1Label {
    Balanced(usize),
    Paired(usize, usize),
}

impl fmt::Display for Lambda1Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda1Label::Balanced(i) => write!(f, "[{i}]"),
            Lambda1Label::Paired(i, j) => write!(f, "(({i},{j}))"),
        }
    }
}

/// `λ₁(a, b)`: `[i]` if `a⁻¹b = [i]`, `((i, j))` if `a⁻¹b = ((i, ±j))`.
pub fn lambda1_edge(a: &SignedPerm, b: &SignedPerm) -> Result<Lambda1Label> {
    Ok(match reflection_parts(a, b)? {
        (i, None) => Lambda1Label::Balanced(i),
        (j, Some((i, _))) => Lambda1Label::Paired(i, j),
    })
}

/// `λ₂(a, b) = min { i : t_i ∨ a = b }` with `t_1, t_2, …` the reflections
/// of `B_n` in the order `[1] < … < [n] < ((i,j)) lex < ((i,-j)) lex`, joins
/// taken in `p`.
pub fn lambda2_edge(a: &SignedPerm, b: &SignedPerm, p: &Poset) -> Result<usize> {
    reflection_parts(a, b)?;
    let ia = p.require(a)?;
    let ib = p.require(b)?;
    for (k, t) in GroupKind::b(a.n()).reflections().iter().enumerate() {
        let Some(it) = p.index_of(t) else { continue };
        match join(p, it, ia) {
            Some(j) if j == ib => return Ok(k + 1),
            Some(_) => {}
            None => return Err(Error::NoJoin(format!("{t}"), format!("{a}"))),
        }
    }
    Err(Error::NotCover(format!("{a}"), format!("{b}")))
}

/// Which edge labeling to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labeling {
    Lambda,
    Lambda1,
    Lambda2,
}

/// `c(w)`: the absolute values in balanced cycles together with those in
/// paired cycles other than each cycle's smallest, increasingly.
pub fn c_sequence(w: &SignedPerm) -> Vec<usize> {
    let mut out = Vec::new();
    for c in w.cycles().cycles {
        let skip = usize::from(c.kind == crate::perm::CycleKind::Paired);
        out.extend(c.entries().iter().skip(skip).map(|x| x.unsigned_abs() as usize));
    }
    out.sort_unstable();
    out
}

/// A chain of covers `e = w_0 → w_1 → … → w_r` with its `λ` labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalChain {
    pub elements: Vec<SignedPerm>,
    pub labels: Vec<usize>,
}

impl fmt::Display for MaximalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.elements.iter().enumerate() {
            if k > 0 {
                write!(f, " -{}-> ", self.labels[k - 1])?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// The chain `C_w` of `[e, w]` whose labels are `c(w)`: step `j` keeps the
/// first `j` entries of `c(w)` together with the anchors of the paired
/// cycles already entered, deleting everything else from `w`.
pub fn canonical_chain(w: &SignedPerm) -> MaximalChain {
    let c = c_sequence(w);
    let dec = w.cycles();
    let mut keep = vec![false; w.n() + 1];
    let mut elements = vec![SignedPerm::identity(w.n())];
    let mut labels = Vec::with_capacity(c.len());
    for &x in &c {
        keep[x] = true;
        if let Some(cycle) = dec.cycle_of(x) {
            if cycle.kind == crate::perm::CycleKind::Paired {
                keep[cycle.anchor()] = true;
            }
        }
        let next = w.restrict(|i| keep[i]);
        labels.push(lambda_edge(elements.last().unwrap(), &next).expect("consecutive covers"));
        elements.push(next);
    }
    MaximalChain { elements, labels }
}

/// A closed subinterval where the EL property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElCertificate {
    pub bottom: SignedPerm,
    pub top: SignedPerm,
    /// All strictly increasing maximal chains of `[bottom, top]` (possibly
    /// none).
    pub increasing: Vec<Vec<SignedPerm>>,
    /// A lexicographically first maximal chain.
    pub lex_first: Vec<SignedPerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElVerdict {
    pub holds: bool,
    pub intervals_checked: usize,
    pub chains_checked: usize,
    pub certificate: Option<ElCertificate>,
}

/// Refuse posets with more than this many saturated chains in total.
pub const EL_CHAIN_GUARD: usize = 1_000_000;

struct Track<L> {
    increasing: Vec<Vec<usize>>,
    min_labels: Option<Vec<L>>,
    min_chain: Vec<usize>,
    inc_labels: Option<Vec<L>>,
}

/// Checks that every closed subinterval `[x, y]` of `p` has exactly one
/// maximal chain with strictly increasing labels and that it is
/// lexicographically first. `label(i, j)` labels the cover `i → j`.
pub fn verify_el<L: Ord + Clone>(p: &Poset, mut label: impl FnMut(usize, usize) -> Result<L>) -> Result<ElVerdict> {
    let len = p.len();
    let mut edge_labels: Vec<Vec<L>> = Vec::with_capacity(len);
    for i in 0..len {
        edge_labels.push(p.up(i).iter().map(|&j| label(i, j)).collect::<Result<Vec<L>>>()?);
    }

    let mut verdict = ElVerdict { holds: true, intervals_checked: 0, chains_checked: 0, certificate: None };
    for x in 0..len {
        let mut tracks: Vec<Option<Track<L>>> = (0..len).map(|_| None).collect();
        let mut path = vec![x];
        let mut labels: Vec<L> = Vec::new();
        let mut stack: Vec<usize> = vec![0];
        while let Some(&next) = stack.last() {
            let at = *path.last().unwrap();
            if next == 0 && at != x {
                verdict.chains_checked += 1;
                if verdict.chains_checked > EL_CHAIN_GUARD {
                    return Err(Error::GuardExceeded {
                        what: "maximal chains",
                        count: verdict.chains_checked,
                        limit: EL_CHAIN_GUARD,
                    });
                }
                let track = tracks[at].get_or_insert_with(|| Track {
                    increasing: Vec::new(),
                    min_labels: None,
                    min_chain: Vec::new(),
                    inc_labels: None,
                });
                if labels.windows(2).all(|w| w[0] < w[1]) {
                    track.increasing.push(path.clone());
                    track.inc_labels = Some(labels.clone());
                }
                if track.min_labels.as_ref().is_none_or(|m| labels < *m) {
                    track.min_labels = Some(labels.clone());
                    track.min_chain = path.clone();
                }
            }
            if next < p.up(at).len() {
                *stack.last_mut().unwrap() += 1;
                path.push(p.up(at)[next]);
                labels.push(edge_labels[at][next].clone());
                stack.push(0);
            } else {
                stack.pop();
                path.pop();
                labels.pop();
            }
        }
        for (y, track) in tracks.into_iter().enumerate() {
            let Some(track) = track else { continue };
            verdict.intervals_checked += 1;
            let ok = track.increasing.len() == 1 && track.inc_labels == track.min_labels;
            if !ok && verdict.holds {
                let names = |c: &Vec<usize>| c.iter().map(|&i| *p.element(i)).collect::<Vec<_>>();
                verdict.holds = false;
                verdict.certificate = Some(ElCertificate {
                    bottom: *p.element(x),
                    top: *p.element(y),
                    increasing: track.increasing.iter().map(names).collect(),
                    lex_first: names(&track.min_chain),
                });
            }
        }
        if !verdict.holds {
            break;
        }
    }
    Ok(verdict)
}

/// [`verify_el`] with one of the three labelings. `Lambda2` takes its
/// joins in `p`.
pub fn verify_labeling(p: &Poset, labeling: Labeling) -> Result<ElVerdict> {
    let el = |i: usize| *p.element(i);
    match labeling {
        Labeling::Lambda => verify_el(p, |i, j| lambda_edge(&el(i), &el(j))),
        Labeling::Lambda1 => verify_el(p, |i, j| lambda1_edge(&el(i), &el(j))),
        Labeling::Lambda2 => verify_el(p, |i, j| lambda2_edge(&el(i), &el(j), p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{build_interval, translate_interval};
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> SignedPerm {
        parse_cycles(s, n).unwrap()
    }

    fn lower(top: &str, n: usize) -> Poset {
        build_interval(&SignedPerm::identity(n), &p(top, n), GroupKind::b(n)).unwrap().into_poset()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_edge(&SignedPerm::identity(2), &p("((1,2))", 2)).unwrap(), 2);
        assert_eq!(lambda_edge(&p("[1][3]", 7), &p("[1][3]((2,-5))", 7)).unwrap(), 5);
        assert_eq!(lambda_edge(&SignedPerm::identity(3), &p("[3]", 3)).unwrap(), 3);
        assert!(lambda_edge(&SignedPerm::identity(3), &p("[1,2]", 3)).is_err());
        assert_eq!(lambda1_edge(&SignedPerm::identity(3), &p("((1,-3))", 3)).unwrap(), Lambda1Label::Paired(1, 3));
    }

    #[test]
    fn c_sequence_examples() {
        assert_eq!(c_sequence(&p("[1,-7][3]((2,-6,-5))((4))", 7)), vec![1, 3, 5, 6, 7]);
        assert_eq!(c_sequence(&p("[3,-4]((1,2))", 4)), vec![2, 3, 4]);
        assert!(c_sequence(&SignedPerm::identity(3)).is_empty());
    }

    #[test]
    fn canonical_chain_examples() {
        let w = p("[1,-7][3]((2,-6,-5))((4))", 7);
        let chain = canonical_chain(&w);
        let want: Vec<SignedPerm> =
            ["e", "[1]", "[1][3]", "[1][3]((2,-5))", "[1][3]((2,-6,-5))"].iter().map(|s| p(s, 7)).chain([w]).collect();
        assert_eq!(chain.elements, want);
        assert_eq!(chain.labels, vec![1, 3, 5, 6, 7]);

        let w = p("[3,-4]((1,2))", 4);
        let chain = canonical_chain(&w);
        assert_eq!(chain.elements, vec![SignedPerm::identity(4), p("((1,2))", 4), p("((1,2))[3]", 4), w]);
        assert!(canonical_chain(&SignedPerm::identity(2)).labels.is_empty());
    }

    #[test]
    fn canonical_chain_matches_c_in_b3() {
        for w in GroupKind::b(3).elements() {
            let chain = canonical_chain(&w);
            assert_eq!(chain.labels, c_sequence(&w), "{w}");
            assert_eq!(*chain.elements.last().unwrap(), w);
        }
    }

    #[test]
    fn el_examples() {
        let iv = lower("[3,-4]((1,2))", 4);
        let el = |i: usize| *iv.element(i);
        let v = verify_el(&iv, |i, j| lambda_edge(&el(i), &el(j))).unwrap();
        assert!(v.holds && v.certificate.is_none());
        let chain = lower("[1]", 1);
        assert!(verify_el(&chain, |_, _| Ok(7)).unwrap().holds);
        let bad = verify_el(&lower("[1,2]", 2), |_, _| Ok(0)).unwrap();
        assert!(!bad.holds && bad.certificate.unwrap().increasing.is_empty());
    }

    #[test]
    fn el_on_all_b2_intervals() {
        let b2 = GroupKind::b(2);
        for u in b2.elements() {
            for v in b2.elements() {
                if let Ok(iv) = build_interval(&u, &v, b2) {
                    assert!(verify_labeling(iv.poset(), Labeling::Lambda).unwrap().holds, "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn auxiliary_labelings_on_l2() {
        let l2 = lower("[1][2]", 2);
        assert!(verify_labeling(&l2, Labeling::Lambda1).unwrap().holds);
        assert!(verify_labeling(&l2, Labeling::Lambda2).unwrap().holds);
        let l3 = lower("[1][2][3]", 3);
        assert!(verify_labeling(&l3, Labeling::Lambda2).unwrap().holds);
    }

    #[test]
    fn t_order_n3() {
        let t = GroupKind::b(3).reflections();
        let pos = |s: &str| t.iter().position(|x| *x == p(s, 3)).unwrap();
        assert!(pos("[3]") < pos("((1,2))"));
        assert!(pos("((1,2))") < pos("((2,3))"));
        assert!(pos("((2,3))") < pos("((1,-2))"));
    }

    #[test]
    fn label_translation_invariance() {
        let b3 = GroupKind::b(3);
        let t = translate_interval(&p("((1,2))", 3), &p("[1,2][3]", 3), b3).unwrap();
        let sp = t.source.poset();
        for (i, j) in sp.hasse_edges() {
            let (a, b) = (sp.element(i), sp.element(j));
            let u_inv = t.source.bottom.inverse();
            assert_eq!(lambda_edge(a, b).unwrap(), lambda_edge(&(u_inv * *a), &(u_inv * *b)).unwrap());
        }
    }
}

use alloc::{format, vec, vec::Vec};

use fixedbitset::FixedBitSet;
use hashbrown::HashMap;

use super::{leq, lower_covers};
use crate::error::{Error, Result};
use crate::perm::{Family, GroupKind, SignedPerm};

/// Where a poset came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetLabel {
    Interval {
        bottom: SignedPerm,
        top: SignedPerm,
    },
    Ideal,
    Full,
    /// Arbitrary subset with the induced order; may be ungraded.
    Induced,
}

/// A finite subposet of `Abs(kind)`.
///
/// Elements are stored sorted by `(absolute length, image array)`, so indices
/// are a linear extension. `rank` is the absolute length shifted so the
/// smallest length present is `0`.
#[derive(Clone, Debug)]
pub struct Poset {
    kind: GroupKind,
    label: PosetLabel,
    elements: Vec<SignedPerm>,
    rank: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<SignedPerm, usize>,
    above: Vec<FixedBitSet>,
}

impl Poset {
    fn skeleton(kind: GroupKind, label: PosetLabel, mut elements: Vec<SignedPerm>) -> Self {
        elements.sort_by_key(|w| (w.absolute_length(), *w));
        elements.dedup();
        let base = elements.first().map_or(0, |w| w.absolute_length());
        let rank = elements.iter().map(|w| w.absolute_length() - base).collect();
        let index = elements.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let len = elements.len();
        Poset {
            kind,
            label,
            elements,
            rank,
            up: vec![Vec::new(); len],
            down: vec![Vec::new(); len],
            index,
            above: Vec::new(),
        }
    }

    /// Builds the poset on a convex subset (closed under the intervals between
    /// its members, as intervals and ideals are). Hasse edges come from
    /// right multiplication by reflections of `kind`.
    pub(crate) fn from_convex(kind: GroupKind, label: PosetLabel, elements: Vec<SignedPerm>) -> Self {
        let mut p = Self::skeleton(kind, label, elements);
        let reflections = kind.reflections();
        for (i, w) in p.elements.iter().enumerate() {
            for z in lower_covers(w, &reflections) {
                if let Some(&j) = p.index.get(&z) {
                    p.up[j].push(i);
                    p.down[i].push(j);
                }
            }
        }
        for list in p.up.iter_mut() {
            list.sort_unstable();
        }
        p.close_upward();
        p
    }

    /// The induced subposet on an arbitrary set of elements of `kind`.
    pub fn induced(kind: GroupKind, elements: Vec<SignedPerm>) -> Result<Self> {
        for w in &elements {
            kind.check_member(w)?;
        }
        let mut p = Self::skeleton(kind, PosetLabel::Induced, elements);
        let len = p.elements.len();
        p.above = (0..len)
            .map(|i| {
                let mut set = FixedBitSet::with_capacity(len);
                for j in i..len {
                    if leq(&p.elements[i], &p.elements[j]) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        for i in 0..len {
            for j in p.above[i].ones().filter(|&j| j != i) {
                let covered = p.above[i].ones().any(|k| k != i && k != j && p.above[k].contains(j));
                if !covered {
                    p.up[i].push(j);
                    p.down[j].push(i);
                }
            }
        }
        Ok(p)
    }

    fn close_upward(&mut self) {
        let len = self.elements.len();
        let mut above = vec![FixedBitSet::with_capacity(len); len];
        for i in (0..len).rev() {
            let mut set = FixedBitSet::with_capacity(len);
            set.insert(i);
            for &j in &self.up[i] {
                set.union_with(&above[j]);
            }
            above[i] = set;
        }
        self.above = above;
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn label(&self) -> PosetLabel {
        self.label
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedPerm {
        &self.elements[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Length of the longest chain.
    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_rank() + 1];
        for &r in &self.rank {
            sizes[r] += 1;
        }
        sizes
    }

    /// Indices of the elements covering `i`.
    pub fn up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Indices of the elements covered by `i`.
    pub fn down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn hasse_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up.iter().enumerate().flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
    }

    pub fn index_of(&self, w: &SignedPerm) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &SignedPerm) -> bool {
        self.index.contains_key(w)
    }

    pub(crate) fn require(&self, w: &SignedPerm) -> Result<usize> {
        self.index_of(w).ok_or_else(|| Error::NotInPoset(format!("{w}")))
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Indices `j` with `i ≤ j`.
    pub fn upset(&self, i: usize) -> &FixedBitSet {
        &self.above[i]
    }

    /// Indices `j` with `j ≤ i`.
    pub fn downset(&self, i: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        for j in 0..=i {
            if self.above[j].contains(i) {
                set.insert(j);
            }
        }
        set
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Every maximal chain has the same length.
    pub fn is_graded(&self) -> bool {
        let top_rank = self.max_rank();
        self.hasse_edges().all(|(i, j)| self.rank[j] == self.rank[i] + 1)
            && self.maximal_elements().iter().all(|&i| self.rank[i] == top_rank)
            && self.minimal_elements().iter().all(|&i| self.rank[i] == 0)
    }

    /// The closed interval `[x, y]` of this poset as index list, ascending.
    pub fn interval_indices(&self, x: usize, y: usize) -> Vec<usize> {
        self.above[x].ones().filter(|&z| self.above[z].contains(y)).collect()
    }

    /// The subposet on a set of indices, re-indexed; order and covers are
    /// induced from this poset.
    pub fn subposet(&self, indices: &[usize]) -> Poset {
        let elements: Vec<SignedPerm> = indices.iter().map(|&i| self.elements[i]).collect();
        let mut p = Self::skeleton(self.kind, PosetLabel::Induced, elements);
        let len = p.len();
        let back: Vec<usize> = p.elements.iter().map(|w| self.index[w]).collect();
        p.above = (0..len)
            .map(|i| {
                let mut set = FixedBitSet::with_capacity(len);
                for j in i..len {
                    if self.leq(back[i], back[j]) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        for i in 0..len {
            for j in p.above[i].ones().filter(|&j| j != i) {
                let covered = p.above[i].ones().any(|k| k != i && k != j && p.above[k].contains(j));
                if !covered {
                    p.up[i].push(j);
                    p.down[j].push(i);
                }
            }
        }
        p
    }
}

/// A closed interval `[bottom, top]` of `Abs(kind)`.
#[derive(Clone, Debug)]
pub struct Interval {
    pub bottom: SignedPerm,
    pub top: SignedPerm,
    poset: Poset,
}

impl Interval {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.poset.max_rank()
    }

    /// Checks that `z ↦ bottom · z⁻¹ · top` is an order-reversing bijection
    /// of the interval onto itself.
    pub fn self_duality_witness(&self) -> bool {
        let p = &self.poset;
        let image: Option<Vec<usize>> =
            p.elements().iter().map(|z| p.index_of(&(self.bottom * z.inverse() * self.top))).collect();
        let Some(image) = image else { return false };
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != p.len() {
            return false;
        }
        (0..p.len()).all(|i| (0..p.len()).all(|j| p.leq(i, j) == p.leq(image[j], image[i])))
    }
}

/// `[u, v]` inside `Abs(kind)`, found by walking down from `v` along lower
/// covers and pruning anything not above `u`.
pub fn build_interval(u: &SignedPerm, v: &SignedPerm, kind: GroupKind) -> Result<Interval> {
    kind.check_member(u)?;
    kind.check_member(v)?;
    if !leq(u, v) {
        return Err(Error::NotBelow { lower: format!("{u}"), upper: format!("{v}") });
    }
    let elements = down_closure(&[*v], kind, |z| leq(u, z));
    let poset = Poset::from_convex(kind, PosetLabel::Interval { bottom: *u, top: *v }, elements);
    Ok(Interval { bottom: *u, top: *v, poset })
}

fn down_closure(tops: &[SignedPerm], kind: GroupKind, keep: impl Fn(&SignedPerm) -> bool) -> Vec<SignedPerm> {
    let reflections = kind.reflections();
    let mut seen: hashbrown::HashSet<SignedPerm> = hashbrown::HashSet::new();
    let mut frontier: Vec<SignedPerm> = Vec::new();
    for t in tops {
        if keep(t) && seen.insert(*t) {
            frontier.push(*t);
        }
    }
    while let Some(z) = frontier.pop() {
        for y in lower_covers(&z, &reflections) {
            if keep(&y) && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<SignedPerm> = seen.into_iter().collect();
    out.sort();
    out
}

/// The order ideal `⟨generators⟩` of `Abs(kind)`.
pub fn build_ideal(generators: &[SignedPerm], kind: GroupKind) -> Result<Poset> {
    for g in generators {
        kind.check_member(g)?;
    }
    let elements = if generators.is_empty() { Vec::new() } else { down_closure(generators, kind, |_| true) };
    Ok(Poset::from_convex(kind, PosetLabel::Ideal, elements))
}

/// `J_n`: the ideal of `Abs(B_n)` generated by the Coxeter elements.
pub fn coxeter_ideal(n: usize) -> Result<Poset> {
    let kind = GroupKind::new(Family::B, n)?;
    build_ideal(&kind.coxeter_elements(), kind)
}

/// The whole of `Abs(kind)`.
pub fn full_poset(kind: GroupKind) -> Poset {
    Poset::from_convex(kind, PosetLabel::Full, kind.elements())
}

/// The translation `z ↦ u⁻¹z` from `[u, v]` onto `[e, u⁻¹v]`.
#[derive(Clone, Debug)]
pub struct Translation {
    pub source: Interval,
    pub image: Interval,
    /// `(z, u⁻¹z)` for every `z` of the source.
    pub map: Vec<(SignedPerm, SignedPerm)>,
    /// The map is a bijection and it and its inverse preserve order.
    pub verified: bool,
}

pub fn translate_interval(u: &SignedPerm, v: &SignedPerm, kind: GroupKind) -> Result<Translation> {
    let source = build_interval(u, v, kind)?;
    let u_inv = u.inverse();
    let image_top = u_inv * *v;
    let image = build_interval(&SignedPerm::identity(u.n()), &image_top, GroupKind::b(u.n()))?;
    let map: Vec<(SignedPerm, SignedPerm)> = source.poset().elements().iter().map(|z| (*z, u_inv * *z)).collect();

    let sp = source.poset();
    let ip = image.poset();
    let targets: Option<Vec<usize>> = map.iter().map(|(_, z)| ip.index_of(z)).collect();
    let verified = match targets {
        Some(t) if sp.len() == ip.len() => {
            let mut sorted = t.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == ip.len() && (0..sp.len()).all(|i| (0..sp.len()).all(|j| sp.leq(i, j) == ip.leq(t[i], t[j])))
        }
        _ => false,
    };
    Ok(Translation { source, image, map, verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> SignedPerm {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn interval_examples() {
        let e4 = SignedPerm::identity(4);
        let iv = build_interval(&e4, &p("[3,-4]((1,2))", 4), GroupKind::b(4)).unwrap();
        assert_eq!(iv.rank(), 3);
        assert_eq!(iv.poset().rank_sizes(), vec![1, 5, 5, 1]);
        assert!(iv.poset().is_graded() && iv.poset().is_bounded());

        assert_eq!(build_interval(&e4, &e4, GroupKind::b(4)).unwrap().len(), 1);
        let e2 = SignedPerm::identity(2);
        assert_eq!(build_interval(&e2, &p("[1,2]", 2), GroupKind::b(2)).unwrap().len(), 6);
        assert!(matches!(
            build_interval(&p("[1][2]", 2), &p("[1,2]", 2), GroupKind::b(2)),
            Err(Error::NotBelow { .. })
        ));
    }

    #[test]
    fn ideal_examples() {
        let b2 = GroupKind::b(2);
        let j2 = build_ideal(&[p("[1,2]", 2), p("[1,-2]", 2)], b2).unwrap();
        assert_eq!(j2.len(), 7);
        assert_eq!(j2.maximal_elements().len(), 2);
        assert!(!j2.contains(&p("[1][2]", 2)));
        assert_eq!(coxeter_ideal(2).unwrap().len(), 7);

        let single = build_ideal(&[SignedPerm::identity(3)], GroupKind::b(3)).unwrap();
        assert_eq!(single.len(), 1);

        for n in 2..=4 {
            let s = GroupKind::s(n);
            let ideal = build_ideal(&s.coxeter_elements(), s).unwrap();
            assert_eq!(ideal.len(), s.order());
        }

        let j3 = coxeter_ideal(3).unwrap();
        for w in GroupKind::b(3).elements().iter().filter(|w| w.absolute_length() <= 1) {
            assert!(j3.contains(w), "{w}");
        }
    }

    #[test]
    fn translation_examples() {
        let b4 = GroupKind::b(4);
        let t = translate_interval(&p("((1,2))", 4), &p("[3,-4]((1,2))", 4), b4).unwrap();
        assert!(t.verified);
        assert_eq!(t.image.top, p("[3,-4]", 4));

        let w = p("[1,-3]((2,4))", 4);
        let t = translate_interval(&SignedPerm::identity(4), &w, b4).unwrap();
        assert!(t.verified && t.map.iter().all(|(a, b)| a == b));
        let t = translate_interval(&w, &w, b4).unwrap();
        assert!(t.verified);
        assert_eq!(t.map, vec![(w, SignedPerm::identity(4))]);
    }

    #[test]
    fn induced_subposet_covers() {
        let b2 = GroupKind::b(2);
        let q = Poset::induced(b2, vec![SignedPerm::identity(2), p("[1][2]", 2)]).unwrap();
        assert_eq!(q.up(0), &[1]);
        assert_eq!(q.rank_sizes(), vec![1, 0, 1]);
        assert!(!q.is_graded());
    }
}

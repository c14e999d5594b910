//! Signed permutations of `{±1, …, ±n}` and their cycle anatomy.
//!
//! `S_n` and `D_n` are handled as subsets of `B_n`: a [`SignedPerm`] is always
//! a hyperoctahedral element, and [`GroupKind`] decides membership and which
//! reflections generate the order.

use alloc::{format, string::String, vec, vec::Vec};
use core::{fmt, ops::Mul};

use crate::error::{Error, ParseErrorKind, Result};

/// Largest rank a [`SignedPerm`] can carry.
pub const MAX_RANK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::B => "B",
            Family::D => "D",
        })
    }
}

/// One of the classical groups `S_n`, `B_n`, `D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKind {
    pub family: Family,
    pub n: usize,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.n)
    }
}

impl GroupKind {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if n < min || n > MAX_RANK {
            return Err(Error::UnsupportedRank { n, max: MAX_RANK });
        }
        Ok(GroupKind { family, n })
    }

    /// Panics on an unsupported rank.
    pub fn s(n: usize) -> Self {
        Self::new(Family::S, n).expect("unsupported rank")
    }

    /// Panics on an unsupported rank.
    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).expect("unsupported rank")
    }

    /// Panics on an unsupported rank.
    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("unsupported rank")
    }

    /// Membership test: always true for `B_n`, an even number of balanced
    /// cycles for `D_n`, no sign changes at all for `S_n`.
    pub fn contains(&self, w: &SignedPerm) -> bool {
        if w.n() != self.n {
            return false;
        }
        match self.family {
            Family::B => true,
            Family::D => w.balanced_count().is_multiple_of(2),
            Family::S => w.is_sign_free(),
        }
    }

    pub fn check_member(&self, w: &SignedPerm) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotMember { element: format!("{w}"), group: format!("{self}") })
        }
    }

    /// Absolute length of a member of this group.
    pub fn absolute_length(&self, w: &SignedPerm) -> Result<usize> {
        self.check_member(w)?;
        Ok(w.absolute_length())
    }

    pub fn order(&self) -> usize {
        let fact: usize = (1..=self.n).product();
        match self.family {
            Family::S => fact,
            Family::B => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }

    /// All reflections, listed in the total order `[1] < … < [n] <
    /// ((1,2)) < … < ((n-1,n)) < ((1,-2)) < … < ((n-1,-n))` restricted to the
    /// reflections of this group.
    pub fn reflections(&self) -> Vec<SignedPerm> {
        let n = self.n;
        let mut out = Vec::new();
        if self.family == Family::B {
            for i in 1..=n {
                out.push(SignedPerm::balanced_reflection(n, i));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(SignedPerm::paired_reflection(n, i, j as i32));
            }
        }
        if self.family != Family::S {
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(SignedPerm::paired_reflection(n, i, -(j as i32)));
                }
            }
        }
        out
    }

    /// Every element of the group, in lexicographic order of image arrays.
    pub fn elements(&self) -> Vec<SignedPerm> {
        let signed = self.family != Family::S;
        let mut out = Vec::with_capacity(self.order());
        for perm in permutations(self.n) {
            let masks = if signed { 1u32 << self.n } else { 1 };
            for mask in 0..masks {
                let images: Vec<i32> = perm
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| if mask & (1 << k) != 0 { -(v as i32) } else { v as i32 })
                    .collect();
                let w = SignedPerm::from_images(&images).expect("valid by construction");
                if self.contains(&w) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }

    /// Coxeter elements: `n`-cycles for `S_n`, balanced `n`-cycles for `B_n`,
    /// and products `[a_1,…,a_{n-1}][a_n]` for `D_n`. Duplicate-free, sorted.
    pub fn coxeter_elements(&self) -> Vec<SignedPerm> {
        let n = self.n;
        let mut out = Vec::new();
        match self.family {
            Family::S => {
                for rest in permutations(n - 1) {
                    let mut entries = vec![1i32];
                    entries.extend(rest.iter().map(|&v| v as i32 + 1));
                    out.push(Cycle::new(CycleKind::Paired, entries).to_perm(n));
                }
            }
            Family::B => {
                for rest in permutations(n - 1) {
                    for mask in 0..(1u32 << (n - 1)) {
                        let mut entries = vec![1i32];
                        for (k, &v) in rest.iter().enumerate() {
                            let v = v as i32 + 1;
                            entries.push(if mask & (1 << k) != 0 { -v } else { v });
                        }
                        out.push(Cycle::new(CycleKind::Balanced, entries).to_perm(n));
                    }
                }
            }
            Family::D => {
                for last in 1..=n {
                    let others: Vec<i32> = (1..=n).filter(|&v| v != last).map(|v| v as i32).collect();
                    let lead = others[0];
                    for rest in permutations(others.len() - 1) {
                        for mask in 0..(1u32 << rest.len()) {
                            let mut entries = vec![lead];
                            for (k, &idx) in rest.iter().enumerate() {
                                let v = others[idx];
                                entries.push(if mask & (1 << k) != 0 { -v } else { v });
                            }
                            let mut w = Cycle::new(CycleKind::Balanced, entries).to_perm(n);
                            w.set_image(last as i32, -(last as i32));
                            out.push(w);
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Classical exponents, used for the rank generating polynomial.
    pub fn exponents(&self) -> Vec<usize> {
        let n = self.n;
        match self.family {
            Family::S => (1..n).collect(),
            Family::B => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<usize> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e
            }
        }
    }
}

/// All permutations of `1..=k` as 1-based value arrays, lexicographic.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// A bijection `w` of `{±1,…,±n}` with `w(-i) = -w(i)`, stored as the image
/// array of `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    n: u8,
    img: [i8; MAX_RANK],
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        let mut img = [0i8; MAX_RANK];
        for (k, slot) in img.iter_mut().enumerate().take(n) {
            *slot = (k + 1) as i8;
        }
        SignedPerm { n: n as u8, img }
    }

    /// Builds `w` from `[w(1), …, w(n)]`.
    pub fn from_images(images: &[i32]) -> Result<Self> {
        let n = images.len();
        if n > MAX_RANK {
            return Err(Error::UnsupportedRank { n, max: MAX_RANK });
        }
        let mut seen = [false; MAX_RANK];
        let mut img = [0i8; MAX_RANK];
        for (k, &v) in images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidImages(format!("{images:?}")));
            }
            seen[a - 1] = true;
            img[k] = v as i8;
        }
        Ok(SignedPerm { n: n as u8, img })
    }

    pub fn balanced_reflection(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.set_image(i as i32, -(i as i32));
        w
    }

    /// `((i, j))` for `j > 0`, `((i, -|j|))` for `j < 0`.
    pub fn paired_reflection(n: usize, i: usize, j: i32) -> Self {
        let mut w = Self::identity(n);
        w.set_image(i as i32, j);
        w.set_image(j, i as i32);
        w
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `w(i)` for any nonzero `i` with `|i| <= n`.
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.img[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn images(&self) -> &[i8] {
        &self.img[..self.n()]
    }

    /// Sets `w(a) = b` (and implicitly `w(-a) = -b`).
    #[inline]
    fn set_image(&mut self, a: i32, b: i32) {
        let v = if a < 0 { -b } else { b };
        self.img[a.unsigned_abs() as usize - 1] = v as i8;
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    fn compose_unchecked(&self, other: &SignedPerm) -> SignedPerm {
        let mut img = [0i8; MAX_RANK];
        for k in 0..self.n() {
            img[k] = self.apply(other.img[k] as i32) as i8;
        }
        SignedPerm { n: self.n, img }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = *self;
        for k in 0..self.n() {
            out.set_image(self.img[k] as i32, (k + 1) as i32);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// Whether `w(i) != i`.
    pub fn moves(&self, i: usize) -> bool {
        self.img[i - 1] as i32 != i as i32
    }

    pub fn is_sign_free(&self) -> bool {
        self.images().iter().all(|&v| v > 0)
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut visited = [false; MAX_RANK];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let s = start as i32;
            if self.apply(s) == s {
                visited[start - 1] = true;
                fixed_points.push(start);
                continue;
            }
            let mut entries = vec![s];
            visited[start - 1] = true;
            let mut x = self.apply(s);
            let mut kind = CycleKind::Paired;
            while x != s {
                if x == -s {
                    kind = CycleKind::Balanced;
                    break;
                }
                visited[x.unsigned_abs() as usize - 1] = true;
                entries.push(x);
                x = self.apply(x);
            }
            cycles.push(Cycle::new(kind, entries));
        }
        cycles.sort_by(|a, b| (a.kind, a.entries[0]).cmp(&(b.kind, b.entries[0])));
        CycleDecomposition { n, cycles, fixed_points }
    }

    /// Number of orbits of `⟨w⟩` on `{±1..±n}` that do not contain a pair
    /// `±i`, counted once per mirror pair; fixed points count.
    pub fn paired_count(&self) -> usize {
        let mut visited = [false; MAX_RANK];
        let mut count = 0;
        for start in 1..=self.n() {
            if visited[start - 1] {
                continue;
            }
            let s = start as i32;
            visited[start - 1] = true;
            let mut x = self.apply(s);
            let mut balanced = false;
            while x != s {
                if x == -s {
                    balanced = true;
                }
                visited[x.unsigned_abs() as usize - 1] = true;
                x = self.apply(x);
            }
            if !balanced {
                count += 1;
            }
        }
        count
    }

    pub fn balanced_count(&self) -> usize {
        self.cycles().balanced().count()
    }

    /// `n - γ(w)` with `γ` the number of paired cycles (fixed points
    /// included). For sign-free elements this is `n - #cycles`.
    pub fn absolute_length(&self) -> usize {
        self.n() - self.paired_count()
    }

    pub fn mu_partition(&self) -> HookProfile {
        let mut parts: Vec<usize> = self.cycles().balanced().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        HookProfile { parts }
    }

    /// Deletes `±i` from the cycle it belongs to; `i` becomes a fixed point.
    pub fn delete(&self, i: usize) -> Result<SignedPerm> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(self.delete_unchecked(i))
    }

    fn delete_unchecked(&self, i: usize) -> SignedPerm {
        let s = i as i32;
        let next = self.apply(s);
        if next == s {
            return *self;
        }
        let mut out = *self;
        if next != -s {
            let prev = self.inverse().apply(s);
            out.set_image(prev, next);
        }
        out.set_image(s, s);
        out
    }

    /// Keeps the absolute values for which `keep` holds, deleting all others
    /// from their cycles, preserving cyclic order and signs.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> SignedPerm {
        let mut out = *self;
        for i in 1..=self.n() {
            if !keep(i) {
                out = out.delete_unchecked(i);
            }
        }
        out
    }

    /// Same permutation viewed in a group of larger rank `m`, fixing
    /// `n+1..=m`.
    pub fn embed(&self, m: usize) -> SignedPerm {
        assert!(m >= self.n() && m <= MAX_RANK);
        let mut out = SignedPerm::identity(m);
        out.img[..self.n()].copy_from_slice(self.images());
        out
    }

    /// Drops the trailing ranks `m+1..=n`, which must all be fixed.
    pub fn truncate(&self, m: usize) -> Option<SignedPerm> {
        if (m + 1..=self.n()).any(|i| self.moves(i)) {
            return None;
        }
        let mut out = SignedPerm::identity(m);
        out.img[..m].copy_from_slice(&self.img[..m]);
        Some(out)
    }
}

impl Mul for SignedPerm {
    type Output = SignedPerm;

    /// Panics when the ranks differ; use [`SignedPerm::compose`] otherwise.
    fn mul(self, rhs: SignedPerm) -> SignedPerm {
        assert_eq!(self.n, rhs.n, "rank mismatch in product");
        self.compose_unchecked(&rhs)
    }
}

impl<'a> Mul<&'a SignedPerm> for &'a SignedPerm {
    type Output = SignedPerm;

    fn mul(self, rhs: &'a SignedPerm) -> SignedPerm {
        *self * *rhs
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dec = self.cycles();
        if dec.cycles.is_empty() {
            return f.write_str("e");
        }
        for c in &dec.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleKind {
    Balanced,
    Paired,
}

/// A balanced `[a_1,…,a_k]` or paired `((a_1,…,a_k))` cycle in canonical form:
/// rotated so the entry of least absolute value leads, and that entry is
/// positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub kind: CycleKind,
    entries: Vec<i32>,
}

impl Cycle {
    /// Canonicalizes `entries`. Panics if `entries` is empty.
    pub fn new(kind: CycleKind, entries: Vec<i32>) -> Self {
        assert!(!entries.is_empty(), "empty cycle");
        let k = entries.len();
        let lead = (0..k).min_by_key(|&p| entries[p].unsigned_abs()).unwrap();
        let mut out: Vec<i32> = match kind {
            // Rotating a balanced cycle past its end flips signs.
            CycleKind::Balanced => {
                (0..k).map(|p| if lead + p < k { entries[lead + p] } else { -entries[lead + p - k] }).collect()
            }
            CycleKind::Paired => (0..k).map(|p| entries[(lead + p) % k]).collect(),
        };
        if out[0] < 0 {
            out.iter_mut().for_each(|x| *x = -*x);
        }
        Cycle { kind, entries: out }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest absolute value in the support.
    pub fn anchor(&self) -> usize {
        self.entries[0] as usize
    }

    /// `k` for a balanced `k`-cycle, `k - 1` for a paired one.
    pub fn absolute_length(&self) -> usize {
        match self.kind {
            CycleKind::Balanced => self.len(),
            CycleKind::Paired => self.len() - 1,
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.entries.iter().any(|&x| x.unsigned_abs() as usize == i)
    }

    pub fn to_perm(&self, n: usize) -> SignedPerm {
        let mut w = SignedPerm::identity(n);
        self.apply_to(&mut w);
        w
    }

    fn apply_to(&self, w: &mut SignedPerm) {
        let k = self.entries.len();
        for p in 0..k {
            let a = self.entries[p];
            let b = if p + 1 < k {
                self.entries[p + 1]
            } else {
                match self.kind {
                    CycleKind::Balanced => -self.entries[0],
                    CycleKind::Paired => self.entries[0],
                }
            };
            w.set_image(a, b);
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.kind {
            CycleKind::Balanced => ("[", "]"),
            CycleKind::Paired => ("((", "))"),
        };
        f.write_str(open)?;
        for (p, x) in self.entries.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(close)
    }
}

/// Disjoint nontrivial cycles plus the fixed points of `1..=n`. Balanced
/// cycles come first, each group ordered by anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub n: usize,
    pub cycles: Vec<Cycle>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    pub fn balanced(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| c.kind == CycleKind::Balanced)
    }

    /// Nontrivial paired cycles (fixed points excluded).
    pub fn paired(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| c.kind == CycleKind::Paired)
    }

    /// Paired cycles with every fixed point included as a paired 1-cycle.
    pub fn paired_with_fixed(&self) -> Vec<Cycle> {
        let mut out: Vec<Cycle> = self.paired().cloned().collect();
        out.extend(self.fixed_points.iter().map(|&i| Cycle::new(CycleKind::Paired, vec![i as i32])));
        out.sort();
        out
    }

    pub fn recompose(&self) -> SignedPerm {
        let mut w = SignedPerm::identity(self.n);
        for c in &self.cycles {
            c.apply_to(&mut w);
        }
        w
    }

    /// The product of the balanced cycles and the product of the paired ones.
    pub fn split(&self) -> (SignedPerm, SignedPerm) {
        let mut b = SignedPerm::identity(self.n);
        let mut p = SignedPerm::identity(self.n);
        for c in &self.cycles {
            match c.kind {
                CycleKind::Balanced => c.apply_to(&mut b),
                CycleKind::Paired => c.apply_to(&mut p),
            }
        }
        (b, p)
    }

    /// The cycle containing `±i`, if `i` is not fixed.
    pub fn cycle_of(&self, i: usize) -> Option<&Cycle> {
        self.cycles.iter().find(|c| c.contains(i))
    }
}

/// Balanced-cycle lengths in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookProfile {
    pub parts: Vec<usize>,
}

impl HookProfile {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        HookProfile { parts }
    }

    /// Empty, or of the form `(k, 1, …, 1)`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }
}

impl fmt::Display for HookProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses cycle notation such as `[3,-4]((1,2))` into an element of rank `n`.
/// Whitespace is ignored; `e` or the empty string denote the identity.
pub fn parse_cycles(text: &str, n: usize) -> Result<SignedPerm> {
    if n > MAX_RANK {
        return Err(Error::UnsupportedRank { n, max: MAX_RANK });
    }
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.peek() == Some(b'e') {
        p.pos += 1;
        p.skip_ws();
        return match p.peek() {
            None => Ok(SignedPerm::identity(n)),
            Some(c) => Err(p.error(ParseErrorKind::UnexpectedChar(c as char))),
        };
    }
    let mut w = SignedPerm::identity(n);
    let mut seen = [false; MAX_RANK];
    loop {
        p.skip_ws();
        let kind = match p.peek() {
            None => break,
            Some(b'[') => {
                p.pos += 1;
                CycleKind::Balanced
            }
            Some(b'(') => {
                p.pos += 1;
                p.expect(b'(')?;
                CycleKind::Paired
            }
            Some(c) => return Err(p.error(ParseErrorKind::UnexpectedChar(c as char))),
        };
        let mut entries = Vec::new();
        loop {
            p.skip_ws();
            let start = p.pos;
            let v = p.integer()?;
            if v == 0 {
                return Err(Parser::error_at(start, ParseErrorKind::ZeroEntry));
            }
            if v.unsigned_abs() as usize > n {
                return Err(Parser::error_at(start, ParseErrorKind::OutOfRange { value: v, n }));
            }
            let a = v.unsigned_abs() as usize;
            if seen[a - 1] {
                return Err(Parser::error_at(start, ParseErrorKind::RepeatedValue(a as u64)));
            }
            seen[a - 1] = true;
            entries.push(v as i32);
            p.skip_ws();
            match p.peek() {
                Some(b',') => p.pos += 1,
                _ => break,
            }
        }
        p.skip_ws();
        match kind {
            CycleKind::Balanced => p.expect(b']')?,
            CycleKind::Paired => {
                p.expect(b')')?;
                p.expect(b')')?;
            }
        }
        Cycle::new(kind, entries).apply_to(&mut w);
    }
    Ok(w)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, kind: ParseErrorKind) -> Error {
        Self::error_at(self.pos, kind)
    }

    fn error_at(position: usize, kind: ParseErrorKind) -> Error {
        Error::Parse { position, kind }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.error(ParseErrorKind::UnexpectedChar(x as char))),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
            self.skip_ws();
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(match self.peek() {
                None => self.error(ParseErrorKind::UnexpectedEnd),
                Some(b']') | Some(b')') if !negative => self.error(ParseErrorKind::EmptyCycle),
                Some(_) => Self::error_at(start, ParseErrorKind::BadInteger),
            });
        }
        let text = core::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap_or("");
        let v: i64 = text.parse().map_err(|_| Self::error_at(start, ParseErrorKind::BadInteger))?;
        Ok(if negative { -v } else { v })
    }
}

/// Formats in canonical cycle notation (`e` for the identity).
pub fn format_cycles(w: &SignedPerm) -> String {
    format!("{w}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> SignedPerm {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn parses_mixed_notation() {
        let w = p("[3,-4]((1,2))", 4);
        // [3,-4] = (3 -4 -3 4), so 4 -> 3.
        assert_eq!(w.images(), &[2, 1, -4, 3]);
        assert_eq!(format_cycles(&w), "[3,-4]((1,2))");
    }

    #[test]
    fn empty_and_e_are_identity() {
        assert!(p("", 3).is_identity());
        assert!(p("  e ", 3).is_identity());
        assert_eq!(format_cycles(&SignedPerm::identity(3)), "e");
    }

    #[test]
    fn rotated_balanced_cycle() {
        let a = p("[2,1]", 2);
        let b = p("[1,2]", 2);
        assert_ne!(a, b);
        // [2,1] = (2 1 -2 -1): 1 -> -2, 2 -> 1
        assert_eq!(a.images(), &[-2, 1]);
        assert_eq!(format_cycles(&a), "[1,-2]");
        assert_eq!(a, p("[1,-2]", 2));
        assert_eq!(a, p("[-1,2]", 2));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_cycles("[1,2][2]", 3).unwrap_err();
        assert_eq!(err, Error::Parse { position: 6, kind: ParseErrorKind::RepeatedValue(2) });
        let err = parse_cycles("((1,5))", 4).unwrap_err();
        assert_eq!(err, Error::Parse { position: 4, kind: ParseErrorKind::OutOfRange { value: 5, n: 4 } });
        let err = parse_cycles("[1,0]", 4).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 3, kind: ParseErrorKind::ZeroEntry }));
        assert!(matches!(parse_cycles("[1,2", 4), Err(Error::Parse { kind: ParseErrorKind::UnexpectedEnd, .. })));
        assert!(matches!(parse_cycles("(1,2)", 4), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse_cycles("[]", 4), Err(Error::Parse { kind: ParseErrorKind::EmptyCycle, .. })));
        assert!(matches!(parse_cycles("[1,x]", 4), Err(Error::Parse { position: 3, .. })));
    }

    #[test]
    fn compose_and_inverse() {
        let t = p("((1,2))", 2);
        assert_eq!(t.inverse(), t);
        assert_eq!(t * p("[1]", 2), p("[1,-2]", 2));
        let w = p("[1,-3]((2,4))", 4);
        assert!((w * w.inverse()).is_identity());
        assert!((w.inverse() * w).is_identity());
        assert_eq!(
            SignedPerm::identity(2).compose(&SignedPerm::identity(3)),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn cycle_anatomy_of_worked_examples() {
        let w = p("[1,-7][3]((2,-6,-5))((4))", 7);
        let dec = w.cycles();
        assert_eq!(dec.balanced().count(), 2);
        assert_eq!(dec.paired().count(), 1);
        assert_eq!(dec.fixed_points, vec![4]);
        assert_eq!(w.absolute_length(), 5);
        assert_eq!(dec.recompose(), w);

        let w = p("[1,-5][2,7][6]((3,4))", 8);
        assert_eq!(w.mu_partition().parts, vec![2, 2, 1]);
        assert!(!w.mu_partition().is_hook());

        assert_eq!(p("[3,-4]((1,2))", 4).absolute_length(), 3);
        assert!(p("((1,2,3))", 3).mu_partition().parts.is_empty());
        assert_eq!(p("[1][2][3][4]", 4).mu_partition().parts, vec![1, 1, 1, 1]);
        assert!(p("[1][2][3][4]", 4).mu_partition().is_hook());
        assert_eq!(SignedPerm::identity(3).cycles().fixed_points, vec![1, 2, 3]);
    }

    #[test]
    fn membership() {
        let u = p("[1][2][3][4]", 4);
        assert!(GroupKind::d(4).contains(&u));
        assert!(!GroupKind::d(4).contains(&p("[1]", 4)));
        assert!(!GroupKind::s(4).contains(&p("((1,-2))", 4)));
        assert!(GroupKind::s(4).contains(&p("((1,2,3))", 4)));
        for kind in [GroupKind::s(3), GroupKind::b(3), GroupKind::d(3)] {
            assert!(kind.contains(&SignedPerm::identity(3)));
        }
        assert!(GroupKind::d(4).absolute_length(&p("[1]", 4)).is_err());
    }

    #[test]
    fn reflection_sets() {
        let b2: Vec<String> = GroupKind::b(2).reflections().iter().map(format_cycles).collect();
        assert_eq!(b2, ["[1]", "[2]", "((1,2))", "((1,-2))"]);
        assert_eq!(GroupKind::s(3).reflections().len(), 3);
        assert_eq!(GroupKind::d(3).reflections().len(), 6);
        for n in 1..=5 {
            assert_eq!(GroupKind::b(n).reflections().len(), n * n);
            assert_eq!(GroupKind::s(n).reflections().len(), n * (n - 1) / 2);
            if n >= 2 {
                assert_eq!(GroupKind::d(n).reflections().len(), n * (n - 1));
            }
            assert!(GroupKind::b(n).reflections().iter().all(|t| t.absolute_length() == 1));
        }
    }

    #[test]
    fn reflection_order_for_rank_three() {
        let names: Vec<String> = GroupKind::b(3).reflections().iter().map(format_cycles).collect();
        assert_eq!(names, ["[1]", "[2]", "[3]", "((1,2))", "((1,3))", "((2,3))", "((1,-2))", "((1,-3))", "((2,-3))"]);
    }

    #[test]
    fn coxeter_element_counts() {
        let b2: Vec<String> = GroupKind::b(2).coxeter_elements().iter().map(format_cycles).collect();
        assert_eq!(b2.len(), 2);
        assert!(b2.contains(&"[1,2]".into()) && b2.contains(&"[1,-2]".into()));
        assert_eq!(GroupKind::s(3).coxeter_elements().len(), 2);
        assert_eq!(GroupKind::b(3).coxeter_elements().len(), 8);
        assert_eq!(GroupKind::b(4).coxeter_elements().len(), 48);
        assert_eq!(GroupKind::s(5).coxeter_elements().len(), 24);
        // [a,b][c] shapes in D_3: 3 choices of c times 2 balanced 2-cycles.
        assert_eq!(GroupKind::d(3).coxeter_elements().len(), 6);
        assert_eq!(GroupKind::d(2).coxeter_elements(), vec![p("[1][2]", 2)]);
        for kind in [GroupKind::b(4), GroupKind::d(4), GroupKind::s(4)] {
            for c in kind.coxeter_elements() {
                assert!(kind.contains(&c));
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(GroupKind::b(3).elements().len(), 48);
        assert_eq!(GroupKind::d(4).elements().len(), 192);
        assert_eq!(GroupKind::s(4).elements().len(), 24);
        assert_eq!(GroupKind::d(4).order(), 192);
    }

    #[test]
    fn deletion() {
        let w = p("[1,-5,2]((3,-4))", 5);
        assert_eq!(w.delete(5).unwrap(), p("[1,2]((3,-4))", 5));
        assert_eq!(p("[1,2]", 2).delete(2).unwrap(), p("[1]", 2));
        assert_eq!(p("[1]", 2).delete(1).unwrap(), SignedPerm::identity(2));
        assert_eq!(p("((1,-2))", 2).delete(2).unwrap(), SignedPerm::identity(2));
        assert!(SignedPerm::identity(3).delete(4).is_err());
        assert_eq!(p("[1,-7][3]((2,-6,-5))", 7).restrict(|i| i != 6), p("[1,-7][3]((2,-5))", 7));
    }
}

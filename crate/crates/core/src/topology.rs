//! Order complexes, reduced homology and the Cohen-Macaulay link test.

use alloc::{format, string::String, vec, vec::Vec};

use fixedbitset::FixedBitSet;
use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::{build_ideal, fiber_ideal_m, Ambient, AmbientKind, Poset};
use crate::perm::{Family, GroupKind, SignedPerm};

/// Refuse complexes with more faces than this.
pub const FACE_GUARD: usize = 5_000_000;

/// Which endpoints to drop before taking chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strip {
    None,
    /// Remove the minimum, if any.
    Bottom,
    /// Remove the minimum and the maximum, whichever exist.
    Endpoints,
}

/// The order complex of a finite poset: its faces are the chains.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<SignedPerm>,
    /// `j ∈ above[i]` iff vertex `i` lies strictly below vertex `j`; `i < j`.
    above: Vec<FixedBitSet>,
    /// `faces[k]`: the `k`-dimensional faces as ascending vertex lists.
    faces: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    fn from_relation(vertices: Vec<SignedPerm>, above: Vec<FixedBitSet>, guard: usize) -> Result<Self> {
        let mut faces: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut total = 0usize;
        let mut chain = Vec::new();
        for v in 0..vertices.len() {
            chain.push(v as u32);
            extend_chains(&mut chain, &above, &mut faces, &mut total, guard)?;
            chain.pop();
        }
        Ok(SimplicialComplex { vertices, above, faces })
    }

    pub fn vertices(&self) -> &[SignedPerm] {
        &self.vertices
    }

    /// `-1` for the complex whose only face is the empty one.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Face counts `f_0, f_1, …`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn faces(&self, k: usize) -> &[Vec<u32>] {
        self.faces.get(k).map_or(&[], |f| f.as_slice())
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// `χ̃ = -1 + f_0 - f_1 + …`.
    pub fn euler(&self) -> i64 {
        self.faces.iter().enumerate().fold(
            -1,
            |acc, (k, f)| {
                if k % 2 == 0 {
                    acc + f.len() as i64
                } else {
                    acc - f.len() as i64
                }
            },
        )
    }

    /// All maximal faces have the same dimension.
    pub fn is_pure(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        // Longest and shortest maximal chains through the cover graph.
        let covers: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                self.above[i]
                    .ones()
                    .filter(|&j| !self.above[i].ones().any(|k| k != j && self.above[k].contains(j)))
                    .collect()
            })
            .collect();
        let mut has_below = vec![false; n];
        for c in &covers {
            for &j in c {
                has_below[j] = true;
            }
        }
        let mut shortest = vec![0usize; n];
        let mut longest = vec![0usize; n];
        for i in (0..n).rev() {
            if !covers[i].is_empty() {
                shortest[i] = 1 + covers[i].iter().map(|&j| shortest[j]).min().unwrap();
                longest[i] = 1 + covers[i].iter().map(|&j| longest[j]).max().unwrap();
            }
        }
        let d = self.dim() as usize;
        (0..n).filter(|&i| !has_below[i]).all(|i| shortest[i] == d && longest[i] == d)
    }

    /// The link of a face: chains of the elements comparable with every
    /// vertex of `face` and not in it.
    pub fn link(&self, face: &[u32]) -> Result<SimplicialComplex> {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| {
                face.iter().all(|&f| {
                    let f = f as usize;
                    v != f && (self.above[f].contains(v) || self.above[v].contains(f))
                })
            })
            .collect();
        self.restrict(&keep, FACE_GUARD)
    }

    fn restrict(&self, keep: &[usize], guard: usize) -> Result<SimplicialComplex> {
        let mut back = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in keep.iter().enumerate() {
            back[old] = new;
        }
        let above = keep
            .iter()
            .map(|&old| {
                let mut set = FixedBitSet::with_capacity(keep.len());
                for j in self.above[old].ones() {
                    if back[j] != usize::MAX {
                        set.insert(back[j]);
                    }
                }
                set
            })
            .collect();
        Self::from_relation(keep.iter().map(|&v| self.vertices[v]).collect(), above, guard)
    }

    pub fn face_elements(&self, face: &[u32]) -> Vec<SignedPerm> {
        face.iter().map(|&v| self.vertices[v as usize]).collect()
    }
}

/// Records `chain` and every chain extending it upward. The relation is
/// transitive, so the elements above the last vertex are the candidates.
fn extend_chains(
    chain: &mut Vec<u32>,
    above: &[FixedBitSet],
    faces: &mut Vec<Vec<Vec<u32>>>,
    total: &mut usize,
    guard: usize,
) -> Result<()> {
    *total += 1;
    if *total > guard {
        return Err(Error::GuardExceeded { what: "faces", count: *total, limit: guard });
    }
    let k = chain.len() - 1;
    if faces.len() <= k {
        faces.resize(k + 1, Vec::new());
    }
    faces[k].push(chain.clone());
    let last = *chain.last().unwrap() as usize;
    for w in above[last].ones() {
        chain.push(w as u32);
        extend_chains(chain, above, faces, total, guard)?;
        chain.pop();
    }
    Ok(())
}

/// `Δ(p)` or `Δ` of `p` without its endpoints.
pub fn order_complex(p: &Poset, strip: Strip) -> Result<SimplicialComplex> {
    order_complex_guarded(p, strip, FACE_GUARD)
}

pub fn order_complex_guarded(p: &Poset, strip: Strip, guard: usize) -> Result<SimplicialComplex> {
    let (bottom, top) = match strip {
        Strip::None => (None, None),
        Strip::Bottom => (p.bottom(), None),
        Strip::Endpoints => (p.bottom(), p.top()),
    };
    let keep: Vec<usize> = (0..p.len()).filter(|&i| Some(i) != bottom && Some(i) != top).collect();
    let mut back = vec![usize::MAX; p.len()];
    for (new, &old) in keep.iter().enumerate() {
        back[old] = new;
    }
    let above = keep
        .iter()
        .map(|&old| {
            let mut set = FixedBitSet::with_capacity(keep.len());
            for j in p.upset(old).ones() {
                if j != old && back[j] != usize::MAX {
                    set.insert(back[j]);
                }
            }
            set
        })
        .collect();
    SimplicialComplex::from_relation(keep.iter().map(|&i| *p.element(i)).collect(), above, guard)
}

/// How the ranks behind a [`HomologyProfile`] were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Ranks modulo a large prime with all but one Betti number zero; since
    /// Betti numbers over `F_p` bound those over `Q` from above and both
    /// have the same alternating sum, these are the rational values.
    ModularCertified,
    /// Exact integer elimination.
    Exact,
}

/// Reduced homology with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub dim: isize,
    pub f_vector: Vec<usize>,
    /// `b̃_0, …, b̃_dim`.
    pub reduced_betti: Vec<usize>,
    /// `b̃_{-1}`: `1` exactly for the complex `{∅}`.
    pub betti_minus_one: usize,
    pub euler: i64,
    /// Invariant factors `> 1` of `H̃_k(Δ; Z)` for each `k`, when requested.
    pub torsion: Option<Vec<Vec<BigInt>>>,
    pub method: RankMethod,
}

impl HomologyProfile {
    /// Reduced homology vanishes below the top dimension.
    pub fn concentrated_in_top(&self) -> bool {
        self.vanishes_below(self.dim)
    }

    pub fn vanishes_below(&self, d: isize) -> bool {
        (d <= -1 || self.betti_minus_one == 0)
            && self.reduced_betti.iter().enumerate().all(|(k, &b)| k as isize >= d || b == 0)
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.as_ref().is_some_and(|t| t.iter().any(|f| !f.is_empty()))
    }
}

const PRIME: u64 = 2_147_483_647;

fn boundary_rows(c: &SimplicialComplex, k: usize) -> Vec<Vec<(u32, i64)>> {
    let index: HashMap<&[u32], u32> =
        c.faces(k - 1).iter().enumerate().map(|(i, f)| (f.as_slice(), i as u32)).collect();
    let mut scratch = Vec::with_capacity(k);
    c.faces(k)
        .iter()
        .map(|face| {
            let mut row: Vec<(u32, i64)> = (0..face.len())
                .map(|drop| {
                    scratch.clear();
                    scratch.extend(face.iter().enumerate().filter(|(p, _)| *p != drop).map(|(_, &v)| v));
                    let col = index[scratch.as_slice()];
                    (col, if drop % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

fn rank_mod_p(rows: &[Vec<(u32, i64)>], ncols: usize) -> usize {
    let p = PRIME;
    let inv = |a: u64| {
        let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut pivots: Vec<Option<Vec<(u32, u64)>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut v: Vec<(u32, u64)> = row.iter().map(|&(c, x)| (c, x.rem_euclid(p as i64) as u64)).collect();
        while let Some(&(c, lead)) = v.first() {
            match &pivots[c as usize] {
                Some(piv) => {
                    let factor = lead;
                    let mut out = Vec::with_capacity(v.len() + piv.len());
                    let (mut a, mut b) = (0, 0);
                    while a < v.len() || b < piv.len() {
                        let ca = v.get(a).map_or(u32::MAX, |e| e.0);
                        let cb = piv.get(b).map_or(u32::MAX, |e| e.0);
                        if ca < cb {
                            out.push(v[a]);
                            a += 1;
                        } else if cb < ca {
                            out.push((cb, (p - factor * piv[b].1 % p) % p));
                            b += 1;
                        } else {
                            let x = (v[a].1 + p - factor * piv[b].1 % p) % p;
                            if x != 0 {
                                out.push((ca, x));
                            }
                            a += 1;
                            b += 1;
                        }
                    }
                    v = out;
                }
                None => {
                    let s = inv(lead);
                    for e in v.iter_mut() {
                        e.1 = e.1 * s % p;
                    }
                    pivots[c as usize] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

type IntRow = Vec<(u32, BigInt)>;

fn combine(x: &IntRow, a: &BigInt, y: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(u32::MAX, |e| e.0);
        let cy = y.get(j).map_or(u32::MAX, |e| e.0);
        let (col, val) = if cx < cy {
            i += 1;
            (cx, a * &x[i - 1].1)
        } else if cy < cx {
            j += 1;
            (cy, b * &y[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (cx, a * &x[i - 1].1 + b * &y[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// Row echelon form over `Z` by unimodular row operations. Returns the
/// pivot rows; their number is the rank.
fn integer_echelon(rows: &[Vec<(u32, i64)>], ncols: usize) -> Vec<IntRow> {
    let mut pivot_of: Vec<Option<usize>> = vec![None; ncols];
    let mut echelon: Vec<IntRow> = Vec::new();
    for row in rows {
        let mut v: IntRow = row.iter().map(|&(c, x)| (c, BigInt::from(x))).collect();
        while let Some((c, lead)) = v.first().cloned() {
            let Some(k) = pivot_of[c as usize] else {
                pivot_of[c as usize] = Some(echelon.len());
                echelon.push(v);
                break;
            };
            let p = echelon[k][0].1.clone();
            let (q, r) = lead.div_rem(&p);
            if r.is_zero() {
                v = combine(&v, &BigInt::one(), &echelon[k], &-q);
            } else {
                let e = p.extended_gcd(&lead);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let new_pivot = combine(&echelon[k], &s, &v, &t);
                let rest = combine(&echelon[k], &(&lead / &g), &v, &-(&p / &g));
                echelon[k] = new_pivot;
                v = rest;
            }
        }
    }
    echelon
}

/// Invariant factors `> 1` of the matrix with the given rows.
fn torsion_factors(rows: &[Vec<(u32, i64)>], ncols: usize) -> Vec<BigInt> {
    let mut echelon = integer_echelon(rows, ncols);
    let unit: Vec<bool> = echelon.iter().map(|r| r[0].1.abs().is_one()).collect();
    if unit.iter().all(|&u| u) {
        return Vec::new();
    }
    let mut unit_row_of: HashMap<u32, usize> = HashMap::new();
    for (k, r) in echelon.iter().enumerate() {
        if unit[k] {
            unit_row_of.insert(r[0].0, k);
        }
    }
    // Clear unit pivot columns from the remaining rows; what is left splits
    // off as a direct summand.
    let mut residual: Vec<IntRow> = Vec::new();
    for k in 0..echelon.len() {
        if unit[k] {
            continue;
        }
        let mut v = core::mem::take(&mut echelon[k]);
        loop {
            let hit = v.iter().find_map(|(c, x)| unit_row_of.get(c).map(|&u| (u, x.clone())));
            let Some((u, x)) = hit else { break };
            let pivot = echelon[u][0].1.clone();
            v = combine(&v, &BigInt::one(), &echelon[u], &-(x * pivot));
        }
        residual.push(v);
    }
    let mut cols: Vec<u32> = residual.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let pos: HashMap<u32, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = residual
        .iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); cols.len()];
            for (c, x) in r {
                d[pos[c]] = x.clone();
            }
            d
        })
        .collect();
    smith_diagonal(&mut dense).into_iter().filter(|d| !d.is_one()).collect()
}

/// Nonzero diagonal of the Smith normal form, as absolute values.
fn smith_diagonal(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((i, j)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
            else {
                return out;
            };
            a.swap(t, i);
            for row in a.iter_mut() {
                row.swap(t, j);
            }
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&p);
                    for j in t..cols {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&p);
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

/// Reduced homology of `c` over `Q`, and optionally the torsion of the
/// integral homology.
pub fn homology(c: &SimplicialComplex, torsion: bool) -> Result<HomologyProfile> {
    let f = c.f_vector();
    let d = f.len();
    let rows: Vec<Vec<Vec<(u32, i64)>>> = (1..d).map(|k| boundary_rows(c, k)).collect();
    let betti_from = |ranks: &[usize]| -> (usize, Vec<usize>) {
        // ranks[k] = rank of ∂_k, k = 0..=d, with ∂_0 the augmentation.
        let minus_one = 1 - ranks[0];
        let betti = (0..d).map(|k| f[k] - ranks[k] - ranks[k + 1]).collect();
        (minus_one, betti)
    };
    let augmentation = usize::from(d > 0);

    let mut ranks = vec![augmentation];
    ranks.extend((1..d).map(|k| rank_mod_p(&rows[k - 1], f[k - 1])));
    ranks.push(0);
    let (mut minus_one, mut betti) = betti_from(&ranks);
    let nonzero = betti.iter().filter(|&&b| b > 0).count() + usize::from(minus_one > 0);
    let mut method = RankMethod::ModularCertified;
    if nonzero > 1 {
        method = RankMethod::Exact;
        let mut exact = vec![augmentation];
        exact.extend((1..d).map(|k| integer_echelon(&rows[k - 1], f[k - 1]).len()));
        exact.push(0);
        (minus_one, betti) = betti_from(&exact);
    }
    let euler = c.euler();
    let alternating: i64 =
        betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum::<i64>()
            - minus_one as i64;
    assert_eq!(alternating, euler, "Euler characteristic must match the Betti numbers");

    let torsion =
        torsion.then(|| (0..d).map(|k| if k + 1 < d { torsion_factors(&rows[k], f[k]) } else { Vec::new() }).collect());
    Ok(HomologyProfile {
        dim: c.dim(),
        f_vector: f,
        reduced_betti: betti,
        betti_minus_one: minus_one,
        euler,
        torsion,
        method,
    })
}

/// Outcome of the Cohen-Macaulay test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub pure: bool,
    pub faces_checked: usize,
    /// Some links were skipped because of sampling.
    pub sampled: bool,
    pub failing_face: Option<Vec<SignedPerm>>,
    pub failing_profile: Option<HomologyProfile>,
}

/// Which faces to test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CmOptions {
    /// Test at most this many evenly spaced faces of each dimension.
    pub per_dimension: Option<usize>,
}

/// Cohen-Macaulayness over `Q`: `Δ` is pure and for every face `F`,
/// including `∅`, `b̃_i(lk F) = 0` for `i < dim lk F`.
pub fn cm_check(c: &SimplicialComplex) -> Result<CmVerdict> {
    cm_check_with(c, CmOptions::default())
}

pub fn cm_check_with(c: &SimplicialComplex, options: CmOptions) -> Result<CmVerdict> {
    let pure = c.is_pure();
    let mut verdict =
        CmVerdict { is_cm: pure, pure, faces_checked: 0, sampled: false, failing_face: None, failing_profile: None };
    if !pure {
        return Ok(verdict);
    }
    let dim = c.dim();
    let whole = homology(c, false)?;
    verdict.faces_checked += 1;
    if !whole.vanishes_below(dim) {
        verdict.is_cm = false;
        verdict.failing_face = Some(Vec::new());
        verdict.failing_profile = Some(whole);
        return Ok(verdict);
    }
    // Links of faces with at most dim - 1 vertices have dimension >= 1;
    // smaller links impose nothing beyond purity.
    for k in 0..(dim - 1).max(0) as usize {
        let faces = c.faces(k);
        let step = match options.per_dimension {
            Some(limit) if limit < faces.len() => {
                verdict.sampled = true;
                faces.len().div_ceil(limit.max(1))
            }
            _ => 1,
        };
        for face in faces.iter().step_by(step) {
            let link = c.link(face)?;
            let profile = homology(&link, false)?;
            verdict.faces_checked += 1;
            if !profile.vanishes_below(dim - face.len() as isize) {
                verdict.is_cm = false;
                verdict.failing_face = Some(c.face_elements(face));
                verdict.failing_profile = Some(profile);
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}

/// A cycle-lift or fiber ideal with its expected rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCheck {
    pub name: String,
    pub n: usize,
    pub size: usize,
    pub expected_rank: usize,
    pub rank: usize,
    pub graded: bool,
    pub cm: bool,
}

impl IdealCheck {
    pub fn passes(&self) -> bool {
        self.rank == self.expected_rank && self.graded && self.cm
    }
}

fn check_ideal(name: String, n: usize, ideal: &Poset, expected_rank: usize) -> Result<IdealCheck> {
    let complex = order_complex(ideal, Strip::Endpoints)?;
    let graded = ideal.is_graded();
    Ok(IdealCheck {
        name,
        n,
        size: ideal.len(),
        expected_rank,
        rank: ideal.max_rank(),
        graded,
        cm: cm_check(&complex)?.is_cm,
    })
}

/// Ideals generated by the single cycles `u` of `kind` moving `n` with
/// `π_n(u) = target`.
pub fn cycle_lift_ideal(target: &SignedPerm, kind: GroupKind) -> Result<Poset> {
    let n = kind.n;
    let generators: Vec<SignedPerm> = kind
        .elements()
        .into_iter()
        .filter(|u| u.moves(n) && u.cycles().cycles.len() == 1 && u.delete(n).ok().as_ref() == Some(target))
        .collect();
    build_ideal(&generators, kind)
}

/// The ideals of single-cycle lifts at rank `n` for `family` (S or B), and
/// all fiber ideals `M(u)`.
pub fn lifting_ideal_checks(family: Family, n: usize) -> Result<Vec<IdealCheck>> {
    let kind = GroupKind::new(family, n)?;
    let mut out = Vec::new();
    let cycle = |kind: crate::perm::CycleKind| crate::perm::Cycle::new(kind, (1..n as i32).collect()).to_perm(n);
    match family {
        Family::S => {
            let target = cycle(crate::perm::CycleKind::Paired);
            out.push(check_ideal(format!("lifts of {target}"), n, &cycle_lift_ideal(&target, kind)?, n - 1)?);
        }
        Family::B => {
            let paired = cycle(crate::perm::CycleKind::Paired);
            out.push(check_ideal(format!("lifts of {paired}"), n, &cycle_lift_ideal(&paired, kind)?, n - 1)?);
            let balanced = cycle(crate::perm::CycleKind::Balanced);
            out.push(check_ideal(format!("lifts of {balanced}"), n, &cycle_lift_ideal(&balanced, kind)?, n)?);
        }
        Family::D => return Err(Error::NotMember { element: format!("{family}"), group: "S or B".into() }),
    }
    let ambient =
        Ambient::new(if family == Family::S { AmbientKind::Symmetric } else { AmbientKind::CoxeterIdeal }, n)?;
    for u in ambient.lower.elements() {
        let m = fiber_ideal_m(u, &ambient)?;
        out.push(check_ideal(format!("M({u})"), n, &m, u.absolute_length() + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::mobius_with_top;
    use crate::order::{build_interval, coxeter_ideal, full_poset};
    use crate::perm::parse_cycles;

    #[test]
    fn complexes_of_small_posets() {
        let j2 = coxeter_ideal(2).unwrap();
        let c = order_complex(&j2, Strip::Endpoints).unwrap();
        assert_eq!(c.f_vector(), vec![6, 8]);
        let s3 = full_poset(GroupKind::s(3));
        let c = order_complex(&s3, Strip::Endpoints).unwrap();
        assert_eq!(c.f_vector(), vec![5, 6]);
        let chain =
            build_interval(&SignedPerm::identity(2), &parse_cycles("[1][2]", 2).unwrap(), GroupKind::b(2)).unwrap();
        let sub = chain.poset().subposet(&[0, 1, 5]);
        assert_eq!(order_complex(&sub, Strip::None).unwrap().f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn homology_examples() {
        let j2 = coxeter_ideal(2).unwrap();
        let h = homology(&order_complex(&j2, Strip::Endpoints).unwrap(), true).unwrap();
        assert_eq!((h.reduced_betti.clone(), h.euler), (vec![0, 3], -3));
        assert!(!h.has_torsion());
        assert_eq!(mobius_with_top(&j2).unwrap(), BigInt::from(-3));

        let s3 = full_poset(GroupKind::s(3));
        let h = homology(&order_complex(&s3, Strip::Endpoints).unwrap(), false).unwrap();
        assert_eq!((h.reduced_betti, h.euler), (vec![0, 2], -2));

        let simplex =
            build_interval(&SignedPerm::identity(3), &parse_cycles("[1][2][3]", 3).unwrap(), GroupKind::b(3)).unwrap();
        let chain: Vec<usize> = vec![0, 1, 7, simplex.len() - 1];
        let sub = simplex.poset().subposet(&chain);
        let h = homology(&order_complex(&sub, Strip::None).unwrap(), false).unwrap();
        assert!(h.reduced_betti.iter().all(|&b| b == 0));
    }

    #[test]
    fn cm_examples() {
        let j2 = coxeter_ideal(2).unwrap();
        assert!(cm_check(&order_complex(&j2, Strip::Endpoints).unwrap()).unwrap().is_cm);
        let s3 = full_poset(GroupKind::s(3));
        assert!(cm_check(&order_complex(&s3, Strip::Endpoints).unwrap()).unwrap().is_cm);

        let d4 = GroupKind::d(4);
        let u = parse_cycles("[1][2][3][4]", 4).unwrap();
        let iv = build_interval(&SignedPerm::identity(4), &u, d4).unwrap();
        let v = cm_check(&order_complex(iv.poset(), Strip::Endpoints).unwrap()).unwrap();
        assert!(!v.is_cm);
        assert_eq!(v.failing_face, Some(Vec::new()));
        assert!(v.failing_profile.unwrap().reduced_betti[0] > 0);
    }

    #[test]
    fn exact_ranks_agree_with_modular() {
        let l3 =
            build_interval(&SignedPerm::identity(3), &parse_cycles("[1][2][3]", 3).unwrap(), GroupKind::b(3)).unwrap();
        let c = order_complex(l3.poset(), Strip::Endpoints).unwrap();
        for k in 1..c.f_vector().len() {
            let rows = boundary_rows(&c, k);
            assert_eq!(rank_mod_p(&rows, c.f_vector()[k - 1]), integer_echelon(&rows, c.f_vector()[k - 1]).len());
        }
    }

    #[test]
    fn smith_form_finds_torsion() {
        let mut m = vec![vec![BigInt::from(2), BigInt::from(4)], vec![BigInt::from(6), BigInt::from(8)]];
        assert_eq!(smith_diagonal(&mut m), vec![BigInt::from(2), BigInt::from(4)]);
        let rows = vec![vec![(0u32, 2i64), (1, 4)], vec![(0, 6), (1, 8)]];
        assert_eq!(torsion_factors(&rows, 2), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn lifting_ideals_small() {
        for check in lifting_ideal_checks(Family::S, 3).unwrap() {
            assert!(check.passes(), "{check:?}");
        }
        for check in lifting_ideal_checks(Family::B, 3).unwrap() {
            assert!(check.passes(), "{check:?}");
        }
    }
}

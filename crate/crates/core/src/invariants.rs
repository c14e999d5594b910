//! Möbius functions, zeta polynomials, chain counts and the closed-form
//! invariant suites.

use alloc::{vec, vec::Vec};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::order::{build_interval, Poset};
use crate::perm::{CycleKind, GroupKind, SignedPerm};

/// A polynomial with exact rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![BigRational::from_integer(c.into())])
    }

    /// `a·m + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::new(vec![BigRational::from_integer(b.into()), BigRational::from_integer(a.into())])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Self::new(
            (0..len).map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    /// The unique polynomial of degree `< points.len()` through `points`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let mut out = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::constant(1);
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Self::new(vec![-xj.clone(), BigRational::one()]));
                    denom *= xi - xj;
                }
            }
            out = out.add(&basis.scale(&(yi / denom)));
        }
        out
    }

    /// `binom(a·m, k)` as a polynomial in `m`.
    pub fn binomial_in_m(a: i64, k: usize) -> Self {
        let mut out = Self::constant(1);
        for j in 0..k {
            out = out.mul(&Self::linear(a, -(j as i64)));
        }
        out.scale(&BigRational::new(BigInt::one(), factorial(k)))
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("m")?,
                _ => write!(f, "m^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Cardinality, rank sizes, maximal chains, `μ(0̂, 1̂)` and zeta polynomial.
/// Fields a source does not provide are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub cardinality: BigInt,
    pub rank_sizes: Option<Vec<BigInt>>,
    pub max_chains: Option<BigInt>,
    pub mobius: Option<BigInt>,
    pub zeta: Option<RationalPolynomial>,
}

impl InvariantReport {
    /// `Z(2) = #P`, `Z(-1) = μ(0̂, 1̂)` and `lead(Z)·d! = #maximal chains`,
    /// for whichever fields are present.
    pub fn identities_hold(&self) -> bool {
        let Some(z) = &self.zeta else { return true };
        let card_ok = z.eval_int(2) == BigRational::from_integer(self.cardinality.clone());
        let mu_ok = self.mobius.as_ref().is_none_or(|mu| z.eval_int(-1) == BigRational::from_integer(mu.clone()));
        let chains_ok = self.max_chains.as_ref().is_none_or(|c| {
            let d = z.degree().unwrap_or(0);
            z.leading() * BigRational::from_integer(factorial(d)) == BigRational::from_integer(c.clone())
        });
        card_ok && mu_ok && chains_ok
    }

    /// Names of the fields present in both reports that disagree.
    pub fn mismatches(&self, other: &InvariantReport) -> Vec<&'static str> {
        fn differs<T: PartialEq>(a: &Option<T>, b: &Option<T>) -> bool {
            matches!((a, b), (Some(x), Some(y)) if x != y)
        }
        let mut out = Vec::new();
        if self.cardinality != other.cardinality {
            out.push("cardinality");
        }
        if differs(&self.rank_sizes, &other.rank_sizes) {
            out.push("rank_sizes");
        }
        if differs(&self.max_chains, &other.max_chains) {
            out.push("max_chains");
        }
        if differs(&self.mobius, &other.mobius) {
            out.push("mobius");
        }
        if differs(&self.zeta, &other.zeta) {
            out.push("zeta");
        }
        out
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `binom(n, k)` for any integer `n` and `k ≥ 0` (so `binom(-1, 0) = 1`);
/// zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for j in 0..k {
        num *= n - j;
    }
    num / factorial(k as usize)
}

/// `(2k-1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * (2 * j - 1))
}

/// `μ(x, z)` for every `z`, `None` where `x ⋠ z`.
pub fn mobius_from(p: &Poset, x: usize) -> Vec<Option<BigInt>> {
    let mut mu: Vec<Option<BigInt>> = vec![None; p.len()];
    let ups: Vec<usize> = p.upset(x).ones().collect();
    for (a, &z) in ups.iter().enumerate() {
        if z == x {
            mu[z] = Some(BigInt::one());
            continue;
        }
        let mut sum = BigInt::zero();
        for &w in &ups[..a] {
            if p.leq(w, z) {
                sum += mu[w].as_ref().expect("linear extension order");
            }
        }
        mu[z] = Some(-sum);
    }
    mu
}

pub fn mobius(p: &Poset, x: usize, y: usize) -> Result<BigInt> {
    if !p.leq(x, y) {
        return Err(Error::Incomparable);
    }
    Ok(mobius_from(p, x)[y].clone().expect("x ≤ y"))
}

/// `μ(0̂, 1̂)` of `p` with a new top adjoined; `p` needs a unique minimum.
/// This is the reduced Euler characteristic of `Δ(p ∖ {0̂})`.
pub fn mobius_with_top(p: &Poset) -> Result<BigInt> {
    let bottom = p.bottom().ok_or(Error::Unbounded("minimum"))?;
    let total: BigInt = mobius_from(p, bottom).into_iter().flatten().sum();
    Ok(-total)
}

/// `μ(e, w)` as the product over cycles: `(-1)^m binom(2m-1, m)` for a
/// balanced `m`-cycle, `(-1)^(m-1) C_(m-1)` for a paired `m`-cycle. Only
/// defined when `w` has at most one balanced cycle (as in `J_n`); `[1][2]`
/// already has `μ = 3`.
pub fn mobius_cycle_formula(w: &SignedPerm) -> Option<BigInt> {
    if w.balanced_count() > 1 {
        return None;
    }
    Some(w.cycles().cycles.iter().fold(BigInt::one(), |acc, c| {
        let m = c.len() as i64;
        let factor = match c.kind {
            CycleKind::Balanced => binomial(2 * m - 1, m) * if m % 2 == 0 { 1 } else { -1 },
            CycleKind::Paired => catalan(m as usize - 1) * if m % 2 == 1 { 1 } else { -1 },
        };
        acc * factor
    }))
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// `v[y]` = number of multichains `x_1 ≤ … ≤ x_len = y`, for `len = 1..=max`.
fn multichain_tables(p: &Poset, max: usize) -> Vec<Vec<BigInt>> {
    multichain_tables_within(p, &vec![true; p.len()], max)
}

/// As [`multichain_tables`], counting only multichains inside `mask`.
fn multichain_tables_within(p: &Poset, mask: &[bool], max: usize) -> Vec<Vec<BigInt>> {
    let downs: Vec<Vec<usize>> = (0..p.len())
        .map(|y| if mask[y] { p.downset(y).ones().filter(|&x| mask[x]).collect() } else { Vec::new() })
        .collect();
    let mut tables: Vec<Vec<BigInt>> =
        vec![mask.iter().map(|&b| if b { BigInt::one() } else { BigInt::zero() }).collect()];
    for _ in 1..max {
        let prev = tables.last().unwrap();
        let next = downs.iter().map(|d| d.iter().map(|&x| &prev[x]).sum()).collect();
        tables.push(next);
    }
    tables
}

/// `Z(p, m)`, the number of multichains `x_1 ≤ … ≤ x_(m-1)`, computed by
/// counting at `m = 1..=d+2` and interpolating.
pub fn zeta_polynomial(p: &Poset) -> Result<RationalPolynomial> {
    if !p.is_bounded() {
        return Err(Error::Unbounded("minimum and maximum"));
    }
    let d = p.max_rank();
    let tables = multichain_tables(p, d + 1);
    let mut points = vec![(BigRational::one(), BigRational::one())];
    for m in 2..=d + 2 {
        let count: BigInt = tables[m - 2].iter().sum();
        points.push((BigRational::from_integer((m as i64).into()), BigRational::from_integer(count)));
    }
    let z = RationalPolynomial::interpolate(&points);
    assert_eq!(z.degree(), Some(d), "zeta polynomial degree must equal the rank");
    Ok(z)
}

/// Maximal chains: Hasse paths from a minimal to a maximal element.
pub fn max_chains(p: &Poset) -> BigInt {
    let mut paths = vec![BigInt::zero(); p.len()];
    for i in 0..p.len() {
        if p.down(i).is_empty() {
            paths[i] = BigInt::one();
        }
        let here = paths[i].clone();
        for &j in p.up(i) {
            paths[j] += &here;
        }
    }
    p.maximal_elements().iter().map(|&i| &paths[i]).sum()
}

/// Measures every invariant of `p` by enumeration; Möbius and zeta only
/// when `p` is bounded.
pub fn census(p: &Poset) -> InvariantReport {
    let bounded = p.is_bounded();
    let report = InvariantReport {
        cardinality: p.len().into(),
        rank_sizes: Some(p.rank_sizes().into_iter().map(BigInt::from).collect()),
        max_chains: Some(max_chains(p)),
        mobius: bounded.then(|| mobius(p, p.bottom().unwrap(), p.top().unwrap()).unwrap()),
        zeta: bounded.then(|| zeta_polynomial(p).unwrap()),
    };
    debug_assert!(report.identities_hold());
    report
}

/// `NC^B(n)`: `binom(2n,n)` elements, `binom(n,k)²` of rank `k`, zeta
/// `binom(mn,n)`, `n^n` maximal chains, `μ = (-1)^n binom(2n-1,n)`.
pub fn closed_form_ncb(n: usize) -> InvariantReport {
    let ni = n as i64;
    InvariantReport {
        cardinality: binomial(2 * ni, ni),
        rank_sizes: Some((0..=ni).map(|k| binomial(ni, k).pow(2)).collect()),
        max_chains: Some(BigInt::from(n).pow(n as u32)),
        mobius: Some(binomial(2 * ni - 1, ni) * sign(n)),
        zeta: Some(RationalPolynomial::binomial_in_m(ni, n)),
    }
}

fn sign(n: usize) -> i32 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn ln_zeta(n: usize) -> RationalPolynomial {
    let m = RationalPolynomial::linear(1, 0);
    let m1 = RationalPolynomial::linear(1, -1);
    (0..=n / 2).fold(RationalPolynomial::zero(), |acc, k| {
        let c = binomial(n as i64, 2 * k as i64) * double_factorial_odd(k);
        acc.add(&m.pow(n - k).mul(&m1.pow(k)).scale(&BigRational::from_integer(c)))
    })
}

/// `L_n = [e, [1][2]…[n]]` in `Abs(B_n)`.
pub fn closed_form_ln(n: usize) -> InvariantReport {
    let ni = n as i64;
    let ks = || (0..=n / 2).map(|k| (k, binomial(ni, 2 * k as i64) * double_factorial_odd(k)));
    let rank_sizes = (0..=n)
        .map(|r| {
            (0..=r.min(n - r)).map(|k| factorial(n) / (factorial(k) * factorial(r - k) * factorial(n - r - k))).sum()
        })
        .collect();
    InvariantReport {
        cardinality: ks().map(|(k, c)| c * BigInt::from(2).pow((n - k) as u32)).sum(),
        rank_sizes: Some(rank_sizes),
        max_chains: Some(factorial(n) * ks().map(|(_, c)| c).sum::<BigInt>()),
        mobius: Some(ks().map(|(k, c)| c * BigInt::from(2).pow(k as u32)).sum::<BigInt>() * sign(n)),
        zeta: Some(ln_zeta(n)),
    }
}

/// How `α_r = #L_r`, `β_r(m) = Z(L_r, m)` and `|μ_r|` are read at `r = 0, 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryConvention {
    /// The values of the actual posets: `α_1 = 2`, `β_1 = m`.
    Enumerated,
    /// Everything equal to `1` at `r = 0, 1`.
    Literal,
}

/// `L(k, r) = [e, [1,…,k][k+1]…[k+r]]` in `Abs(B_(k+r))`. Gives cardinality,
/// zeta polynomial and Möbius value.
pub fn closed_form_lkr(k: usize, r: usize, convention: BoundaryConvention) -> InvariantReport {
    let literal = convention == BoundaryConvention::Literal;
    let alpha = |r: usize| match r {
        0 => BigInt::one(),
        1 if literal => BigInt::one(),
        _ => closed_form_ln(r).cardinality,
    };
    let beta = |r: usize| match r {
        0 => RationalPolynomial::constant(1),
        1 if literal => RationalPolynomial::constant(1),
        _ => ln_zeta(r),
    };
    let mu = |r: usize| closed_form_ln(r).mobius.unwrap().abs();
    let (ki, ri) = (k as i64, r as i64);
    let ratio = |a: i64| BigRational::new((a * ri * ki).into(), (ki + 1).into());
    let as_int = |q: BigRational| {
        assert!(q.is_integer(), "non-integral closed form");
        q.to_integer()
    };

    let cardinality = if r == 0 {
        binomial(2 * ki, ki)
    } else {
        as_int(
            BigRational::from_integer(binomial(2 * ki, ki))
                * (ratio(2) * BigRational::from_integer(alpha(r - 1)) + BigRational::from_integer(alpha(r))),
        )
    };
    let inner = if r == 0 {
        beta(0)
    } else {
        RationalPolynomial::linear(1, -1).mul(&beta(r - 1)).scale(&ratio(2)).add(&beta(r))
    };
    let zeta = RationalPolynomial::binomial_in_m(ki, k).mul(&inner);
    let mu_inner = if r == 0 {
        BigRational::from_integer(mu(0))
    } else {
        ratio(4) * BigRational::from_integer(mu(r - 1)) + BigRational::from_integer(mu(r))
    };
    let mobius = as_int(BigRational::from_integer(binomial(2 * ki - 1, ki)) * mu_inner) * sign(k + r);
    InvariantReport { cardinality, rank_sizes: None, max_chains: None, mobius: Some(mobius), zeta: Some(zeta) }
}

/// The top element `[1,…,k][k+1]…[k+r]` of `L(k, r)`.
pub fn lkr_top(k: usize, r: usize) -> SignedPerm {
    let n = k + r;
    let mut images: Vec<i32> = (1..=n as i32).collect();
    if k > 0 {
        for i in 0..k - 1 {
            images[i] = i as i32 + 2;
        }
        images[k - 1] = -1;
    }
    for i in k..n {
        images[i] = -(i as i32 + 1);
    }
    SignedPerm::from_images(&images).expect("valid images")
}

/// Enumerated and predicted facts about the annular piece
/// `E = {x ∈ L(k,1) : some cycle of x meets both {±1..±k} and ±(k+1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnularFacts {
    pub k: usize,
    pub size: BigInt,
    pub size_formula: BigInt,
    /// `(m, multichains x_1 ≤ … ≤ x_(m-1) of L(k,1) meeting E,
    /// 2·binom(mk, k+1))`.
    pub zeta: Vec<(usize, BigInt, BigInt)>,
}

impl AnnularFacts {
    pub fn holds(&self) -> bool {
        self.size == self.size_formula && self.zeta.iter().all(|(_, a, b)| a == b)
    }
}

pub fn annular_facts(k: usize, max_m: usize) -> Result<AnnularFacts> {
    if k == 0 {
        return Err(Error::IndexOutOfRange { index: k, n: 1 });
    }
    let top = lkr_top(k, 1);
    let kind = GroupKind::new(crate::perm::Family::B, k + 1)?;
    let interval = build_interval(&SignedPerm::identity(k + 1), &top, kind)?;
    let p = interval.poset();
    let in_e: Vec<bool> = p
        .elements()
        .iter()
        .map(|x| x.cycles().cycles.iter().any(|c| c.contains(k + 1) && (1..=k).any(|i| c.contains(i))))
        .collect();
    let ki = k as i64;
    let len = max_m.saturating_sub(1).max(1);
    let all = multichain_tables(p, len);
    let outside: Vec<bool> = in_e.iter().map(|e| !e).collect();
    let avoiding = multichain_tables_within(p, &outside, len);
    let zeta = (1..=max_m)
        .map(|m| {
            let count = if m == 1 {
                BigInt::zero()
            } else {
                all[m - 2].iter().sum::<BigInt>() - avoiding[m - 2].iter().sum::<BigInt>()
            };
            (m, count, binomial(m as i64 * ki, ki + 1) * 2)
        })
        .collect();
    Ok(AnnularFacts {
        k,
        size: in_e.iter().filter(|e| **e).count().into(),
        size_formula: binomial(2 * ki, ki - 1) * 2,
        zeta,
    })
}

/// Turns a small exact value into `i64` where it fits.
pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

//! Truncated power series over the rationals and the Euler characteristic
//! generating functions of `Abs(S_n) ∖ {e}` and `J_n ∖ {e}`.

use alloc::{vec, vec::Vec};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invariants::{binomial, catalan, factorial};

/// `c_0 + c_1 t + … + c_N t^N + O(t^(N+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalPowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

impl FormalPowerSeries {
    /// Known up to and including `t^order`; missing coefficients are zero.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        FormalPowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> BigRational) -> Self {
        FormalPowerSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn constant(c: i64, order: usize) -> Self {
        Self::from_integers(&[c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        FormalPowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `f(c·t)`.
    pub fn compose_with_ct(&self, c: i64) -> Self {
        let mut power = BigRational::one();
        let c = rat(c);
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power *= &c;
                out
            })
            .collect();
        FormalPowerSeries { coeffs }
    }

    /// `f / t`; needs `c_0 = 0` and lowers the order by one.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::Series("division by t needs a zero constant term and positive order"));
        }
        Ok(FormalPowerSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// `exp(f)` for `c_0 = 0`, from `h' = f'·h`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term"));
        }
        let n = self.order();
        let mut h = vec![BigRational::zero(); n + 1];
        h[0] = BigRational::one();
        for k in 1..=n {
            let mut sum = BigRational::zero();
            for j in 1..=k {
                sum += rat(j as i64) * &self.coeffs[j] * &h[k - j];
            }
            h[k] = sum / rat(k as i64);
        }
        Ok(FormalPowerSeries { coeffs: h })
    }

    /// The square root with constant term `1`; needs `c_0 = 1`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("sqrt needs constant term 1"));
        }
        let n = self.order();
        let mut s = vec![BigRational::zero(); n + 1];
        s[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &s[j] * &s[k - j];
            }
            s[k] = acc / rat(2);
        }
        Ok(FormalPowerSeries { coeffs: s })
    }

    /// `k!·c_k`, the coefficient of `t^k/k!`; must be an integer.
    pub fn egf_coefficient(&self, k: usize) -> Result<BigInt> {
        let v = &self.coeffs[k] * rat(factorial(k));
        if !v.is_integer() {
            return Err(Error::Series("non-integral exponential coefficient"));
        }
        Ok(v.to_integer())
    }
}

impl Add for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn add(self, rhs: &FormalPowerSeries) -> FormalPowerSeries {
        let n = self.order().min(rhs.order());
        FormalPowerSeries::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn sub(self, rhs: &FormalPowerSeries) -> FormalPowerSeries {
        let n = self.order().min(rhs.order());
        FormalPowerSeries::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Neg for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn neg(self) -> FormalPowerSeries {
        self.scale(&rat(-1))
    }
}

impl Mul for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn mul(self, rhs: &FormalPowerSeries) -> FormalPowerSeries {
        let n = self.order().min(rhs.order());
        FormalPowerSeries::from_fn(n, |k| (0..=k).map(|j| &self.coeffs[j] * &rhs.coeffs[k - j]).sum())
    }
}

/// `C(t) = Σ C_n t^n`.
pub fn catalan_series(order: usize) -> FormalPowerSeries {
    FormalPowerSeries::from_fn(order, |k| rat(catalan(k)))
}

/// `t`, to the given order.
fn t(order: usize) -> FormalPowerSeries {
    FormalPowerSeries::from_integers(&[0, 1], order)
}

/// `χ̃(Δ(Abs(S_n) ∖ {e}))` for `n = 1..=max`, read off
/// `Σ (-1)^n χ̃_n t^n/n! = 1 - C(t) exp(-2t C(t))`.
pub fn predicted_chi_sn(max: usize) -> Result<Vec<(usize, BigInt)>> {
    guard(max)?;
    let c = catalan_series(max);
    let inner = (&t(max) * &c).scale(&rat(-2)).exp()?;
    let rhs = &FormalPowerSeries::constant(1, max) - &(&c * &inner);
    read_off(&rhs, 1, max)
}

/// `χ̃(Δ(J_n ∖ {e}))` for `n = 2..=max`, read off
/// `Σ (-1)^n χ̃_n t^n/n! = 1 - √C(2t) exp(-2t C(2t)) (1 + Σ 2^(n-1) binom(2n-1,n) t^n/n)`.
pub fn predicted_chi_jn(max: usize) -> Result<Vec<(usize, BigInt)>> {
    guard(max)?;
    let c2 = catalan_series(max).compose_with_ct(2);
    let root = c2.sqrt()?;
    let damp = (&t(max) * &c2).scale(&rat(-2)).exp()?;
    let tail = FormalPowerSeries::from_fn(max, |n| {
        if n == 0 {
            BigRational::one()
        } else {
            BigRational::new(BigInt::from(2).pow(n as u32 - 1) * binomial(2 * n as i64 - 1, n as i64), BigInt::from(n))
        }
    });
    let rhs = &FormalPowerSeries::constant(1, max) - &(&(&root * &damp) * &tail);
    read_off(&rhs, 2, max)
}

fn guard(max: usize) -> Result<()> {
    if max > 20 {
        return Err(Error::GuardExceeded { what: "series order", count: max, limit: 20 });
    }
    Ok(())
}

fn read_off(rhs: &FormalPowerSeries, from: usize, max: usize) -> Result<Vec<(usize, BigInt)>> {
    (from..=max)
        .map(|n| {
            let v = rhs.egf_coefficient(n)?;
            Ok((n, if n % 2 == 0 { v } else { -v }))
        })
        .collect()
}

/// Both sides of `exp Σ β_n t^n/n = ((√(1+4t) - 1)/2t) exp(√(1+4t) - 1)`
/// with `β_n = (-1)^(n-1) C_(n-1)`, to the given order.
pub fn paired_cycle_identity(order: usize) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    let sum = FormalPowerSeries::from_fn(order, |n| {
        if n == 0 {
            BigRational::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            BigRational::new(catalan(n - 1) * sign, BigInt::from(n))
        }
    });
    let lhs = sum.exp()?;
    let root = FormalPowerSeries::from_integers(&[1, 4], order + 1).sqrt()?;
    let shifted = &root - &FormalPowerSeries::constant(1, order + 1);
    let ratio = shifted.div_t()?.scale(&BigRational::new(1.into(), 2.into()));
    let expo = shifted.exp()?;
    let rhs = &ratio * &expo;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let sq = FormalPowerSeries::from_integers(&[1, 2, 1], 6).sqrt().unwrap();
        assert_eq!(sq, FormalPowerSeries::from_integers(&[1, 1], 6));
        assert_eq!(FormalPowerSeries::constant(0, 5).exp().unwrap(), FormalPowerSeries::constant(1, 5));
        assert_eq!(catalan_series(4), FormalPowerSeries::from_integers(&[1, 1, 2, 5, 14], 4));
        assert!(FormalPowerSeries::constant(1, 3).exp().is_err());
        assert!(FormalPowerSeries::constant(2, 3).sqrt().is_err());
        let e = FormalPowerSeries::from_integers(&[0, 1], 5).exp().unwrap();
        assert_eq!(e.egf_coefficient(5).unwrap(), BigInt::one());
    }

    #[test]
    fn catalan_from_closed_form() {
        let root = FormalPowerSeries::from_integers(&[1, -4], 9).sqrt().unwrap();
        let c =
            (&FormalPowerSeries::constant(1, 9) - &root).div_t().unwrap().scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(c, catalan_series(8));
    }

    #[test]
    fn known_values() {
        let s = predicted_chi_sn(5).unwrap();
        assert_eq!(s[0], (1, BigInt::from(-1)));
        assert_eq!(s[2], (3, BigInt::from(-2)));
        let j = predicted_chi_jn(4).unwrap();
        assert_eq!(j[0], (2, BigInt::from(-3)));
    }

    #[test]
    fn intermediate_identity() {
        let (lhs, rhs) = paired_cycle_identity(10).unwrap();
        assert_eq!(lhs, rhs);
    }
}

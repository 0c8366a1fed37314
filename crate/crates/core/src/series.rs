//! Truncated formal power series in one variable `t` over an exact ring.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`PowerSeries`]. Zero and one are produced from an
/// existing value so that rings carrying shape data (label counts, groups)
/// can take part.
pub trait SeriesCoeff: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, q: &BigRational) -> Self;

    fn negated(&self) -> Self {
        self.scaled(&-BigRational::one())
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl SeriesCoeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self * q
    }
}

/// `c_0 + c_1 t + ... + c_N t^N  (mod t^{N+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C = BigRational> {
    coeffs: Vec<C>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl<C: SeriesCoeff> PowerSeries<C> {
    /// Pads with zeros or truncates to degree `n`.
    pub fn from_coeffs(mut coeffs: Vec<C>, n: usize) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        let zero = coeffs[0].zero_like();
        coeffs.resize(n + 1, zero);
        PowerSeries { coeffs }
    }

    pub fn constant(c: C, n: usize) -> Self {
        Self::from_coeffs(vec![c], n)
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), n)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::Series(format!(
                "truncation mismatch: {} vs {}",
                self.truncation(),
                other.truncation()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c.scaled(q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.truncation();
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.vanishes() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `f(-t)`.
    pub fn negate_variable(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    /// `exp(f)` for `f` with zero constant term, via `n E_n = sum_k k f_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].vanishes() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        let n = self.truncation();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].one_like());
        for m in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=m {
                let fk = &self.coeffs[k];
                if fk.vanishes() {
                    continue;
                }
                acc = acc.plus(&fk.times(&out[m - k]).scaled(&rat(k as i64)));
            }
            out.push(acc.scaled(&BigRational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `log(f)` for `f` with constant term one, via `f L' = f'`.
    pub fn log(&self) -> Result<Self> {
        let one = self.coeffs[0].one_like();
        if self.coeffs[0] != one {
            return Err(Error::Series("log needs constant term one".into()));
        }
        let n = self.truncation();
        // m L_m = m f_m - sum_{k=1}^{m-1} k L_k f_{m-k}
        let mut out: Vec<C> = vec![self.coeffs[0].zero_like()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scaled(&rat(m as i64));
            for k in 1..m {
                acc = acc.minus(&out[k].times(&self.coeffs[m - k]).scaled(&rat(k as i64)));
            }
            out.push(acc.scaled(&BigRational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `1/f` for `f` with constant term one.
    pub fn inverse(&self) -> Result<Self> {
        let one = self.coeffs[0].one_like();
        if self.coeffs[0] != one {
            return Err(Error::Series("inverse needs constant term one".into()));
        }
        let n = self.truncation();
        let mut out = vec![one];
        for m in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=m {
                acc = acc.minus(&self.coeffs[k].times(&out[m - k]));
            }
            out.push(acc);
        }
        Ok(PowerSeries { coeffs: out })
    }
}

impl PowerSeries<BigRational> {
    pub fn one(n: usize) -> Self {
        Self::constant(BigRational::one(), n)
    }

    /// `(1 + sign * t^k)^e` for any integer `e`, by the generalized binomial theorem.
    pub fn binomial_factor(k: usize, sign: i64, e: i64, n: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = vec![BigRational::zero(); n + 1];
        let mut binom = BigRational::one();
        let s = rat(sign);
        let mut s_pow = BigRational::one();
        let mut j = 0i64;
        while (j as usize) * k <= n {
            coeffs[j as usize * k] = &binom * &s_pow;
            // C(e, j+1) = C(e, j) (e - j) / (j + 1)
            binom = binom * rat(e - j) / rat(j + 1);
            s_pow *= &s;
            j += 1;
        }
        PowerSeries { coeffs }
    }

    /// `prod_{r >= 1} (1 + sign * t^{step*r - offset})^e`, truncated at `n`.
    pub fn product_over(step: usize, offset: usize, sign: i64, e: i64, n: usize) -> Self {
        let mut acc = Self::one(n);
        let mut r = 1;
        while step * r > offset && step * r - offset <= n {
            let f = Self::binomial_factor(step * r - offset, sign, e, n);
            acc = acc.mul(&f).expect("same truncation");
            r += 1;
        }
        acc
    }

    /// `prod_{r >= 1} (1 - t^{2r-1})^{-e}`.
    pub fn odd_euler_product(e: i64, n: usize) -> Self {
        Self::product_over(2, 1, -1, -e, n)
    }

    /// Integer coefficients, panicking on a non-integral value.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coefficient {}", c);
                c.to_integer()
            })
            .collect()
    }
}

impl fmt::Display for PowerSeries<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn geometric_and_binomial() {
        assert_eq!(ints(&PowerSeries::binomial_factor(1, -1, -1, 4)), vec![1, 1, 1, 1, 1]);
        assert_eq!(ints(&PowerSeries::binomial_factor(2, 1, 2, 5)), vec![1, 0, 2, 0, 1, 0]);
        assert_eq!(ints(&PowerSeries::binomial_factor(1, -1, -2, 3)), vec![1, 2, 3, 4]);
    }

    #[test]
    fn odd_product_counts_strict_partitions() {
        assert_eq!(ints(&PowerSeries::odd_euler_product(1, 6)), vec![1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(ints(&PowerSeries::odd_euler_product(0, 3)), vec![1, 0, 0, 0]);
    }

    #[test]
    fn exp_log_inverse() {
        // exp(t) = sum t^n / n!
        let t = PowerSeries::from_coeffs(vec![rat(0), rat(1)], 5);
        let e = t.exp().unwrap();
        assert_eq!(e.coeff(4), &BigRational::new(1.into(), 24.into()));
        assert_eq!(e.log().unwrap(), t);
        let g = PowerSeries::binomial_factor(1, -1, 1, 5);
        assert_eq!(g.inverse().unwrap(), PowerSeries::binomial_factor(1, -1, -1, 5));
        assert!(g.exp().is_err());
        assert!(t.log().is_err());
    }

    #[test]
    fn truncation_mismatch_is_error() {
        assert!(PowerSeries::one(3).mul(&PowerSeries::one(4)).is_err());
    }
}

//! Exact arithmetic in cyclotomic fields `Q(E(k))`.
//!
//! An element is stored in the power basis `1, E(k), ..., E(k)^(phi(k)-1)`
//! reduced modulo the k-th cyclotomic polynomial, so two values of the same
//! order are equal iff their coefficient vectors are equal. Values of
//! different orders are lifted to the lcm before any binary operation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn cyclotomic_poly(k: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    // x^k - 1 divided by every Phi_d with d a proper divisor of k
    let mut poly = vec![BigInt::zero(); k as usize + 1];
    poly[0] = -BigInt::one();
    poly[k as usize] = BigInt::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            poly = exact_div_monic(&poly, &cyclotomic_poly(d));
        }
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(k, poly.clone());
    poly
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn phi(k: u32) -> usize {
    cyclotomic_poly(k).len() - 1
}

/// An element of the cyclotomic field of order `order`.
#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(order: u32) -> Self {
        Cyclo {
            order,
            coeffs: vec![BigRational::zero(); phi(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = q;
        c
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(n.into()))
    }

    /// `E(order)^power`.
    pub fn root_of_unity(order: u32, power: u32) -> Self {
        let mut raw = vec![BigRational::zero(); order as usize];
        raw[(power % order) as usize] = BigRational::one();
        Self::reduce(order, raw)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn reduce(order: u32, mut raw: Vec<BigRational>) -> Self {
        let poly = cyclotomic_poly(order);
        let d = poly.len() - 1;
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - d;
            for (j, pj) in poly.iter().enumerate().take(d) {
                raw[shift + j] -= &top * BigRational::from_integer(pj.clone());
            }
        }
        raw.resize(d, BigRational::zero());
        Cyclo { order, coeffs: raw }
    }

    /// Re-express in the field of order `target` (which must be a multiple of `self.order`).
    pub fn lift(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(target.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, target);
        let step = (target / self.order) as usize;
        let mut raw = vec![BigRational::zero(); target as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(j * step) % target as usize] += c;
        }
        Self::reduce(target, raw)
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (self.lift(l), other.lift(l))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclo { order: a.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        Self::reduce(a.order, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Complex conjugation, `E(k)^j -> E(k)^(k-j)`.
    pub fn conj(&self) -> Self {
        let k = self.order as usize;
        let mut raw = vec![BigRational::zero(); k];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(k - j) % k] += c;
        }
        Self::reduce(self.order, raw)
    }

    /// Parses `"1"`, `"-1/2"`, `"E(3)"`, `"E(3)^2"`, `"-1-E(3)"`, `"2*E(5)^3 + 1/3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::ParseCyclo(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut depth = 0i32;
        for (i, ch) in compact.chars().enumerate() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch)
                }
                ')' => {
                    depth -= 1;
                    cur.push(ch)
                }
                '+' | '-' if depth == 0 && !cur.ends_with('^') => {
                    if i > 0 {
                        if cur.is_empty() {
                            return Err(bad());
                        }
                        terms.push((neg, std::mem::take(&mut cur)));
                    }
                    neg = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if cur.is_empty() {
            return Err(bad());
        }
        terms.push((neg, cur));

        let mut parsed: Vec<(BigRational, u32, u32)> = Vec::new();
        for (neg, term) in terms {
            let (coef, root) = match term.find("E(") {
                None => (term.as_str(), None),
                Some(pos) => {
                    let (c, r) = term.split_at(pos);
                    let c = c.strip_suffix('*').unwrap_or(c);
                    (c, Some(r))
                }
            };
            let mut q = if coef.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coef).ok_or_else(bad)?
            };
            if neg {
                q = -q;
            }
            let (order, power) = match root {
                None => (1, 0),
                Some(r) => {
                    let close = r.find(')').ok_or_else(bad)?;
                    let order: u32 = r[2..close].parse().map_err(|_| bad())?;
                    if order == 0 {
                        return Err(bad());
                    }
                    let rest = &r[close + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|p| p.parse::<u32>().ok())
                            .ok_or_else(bad)?
                    };
                    (order, power)
                }
            };
            parsed.push((q, order, power));
        }
        let order = parsed.iter().fold(1u32, |acc, (_, k, _)| acc.lcm(k));
        let mut out = Cyclo::zero(order);
        for (q, k, p) in parsed {
            out = out.add(&Cyclo::root_of_unity(k, p).lift(order).scale(&q));
        }
        Ok(out)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    write!(f, "E({})", self.order)?;
                    if j > 1 {
                        write!(f, "^{}", j)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |k| -> Vec<i64> {
            cyclotomic_poly(k)
                .iter()
                .map(|c| c.try_into().unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let w = Cyclo::root_of_unity(3, 1);
        let w2 = w.mul(&w);
        assert_eq!(w2, Cyclo::root_of_unity(3, 2));
        assert!(Cyclo::one(3).add(&w).add(&w2).is_zero());
        assert_eq!(w.pow(3), Cyclo::one(3));
        assert_eq!(w.conj(), w2);
        assert_eq!(w.mul(&w.conj()), Cyclo::one(1));
    }

    #[test]
    fn lifting_preserves_value() {
        let minus_one = Cyclo::root_of_unity(2, 1);
        assert_eq!(minus_one, Cyclo::from_int(1, -1));
        // E(6)^3 = -1
        assert_eq!(Cyclo::root_of_unity(6, 3), minus_one);
        assert_eq!(Cyclo::root_of_unity(3, 1).lift(6), Cyclo::root_of_unity(6, 2));
    }

    #[test]
    fn parse_and_display() {
        let v = Cyclo::parse("-1-E(3)").unwrap();
        assert_eq!(v, Cyclo::root_of_unity(3, 2));
        assert_eq!(Cyclo::parse("1/2").unwrap().to_rational(), Some(q(1, 2)));
        assert_eq!(Cyclo::parse("E(3)^2").unwrap(), Cyclo::root_of_unity(3, 2));
        assert_eq!(
            Cyclo::parse("2*E(4) + 1/3").unwrap(),
            Cyclo::root_of_unity(4, 1)
                .scale(&q(2, 1))
                .add(&Cyclo::from_rational(1, q(1, 3)))
        );
        assert!(Cyclo::parse("E(0)").is_err());
        assert!(Cyclo::parse("1+").is_err());
        assert!(Cyclo::parse("x").is_err());
        let shown = Cyclo::parse("1/3 - 2*E(5)^2").unwrap().to_string();
        assert_eq!(Cyclo::parse(&shown).unwrap(), Cyclo::parse("1/3 - 2*E(5)^2").unwrap());
    }
}

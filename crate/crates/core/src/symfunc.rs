//! The ring `Omega = Q[p_1, p_3, p_5, ...]` and its colored tensor powers.
//!
//! Elements are stored in the odd power-sum basis, where multiplication is
//! concatenation of keys. A key is a [`LabeledPartitionFn`] with odd parts;
//! the uncolored ring is the one-label case. The functions `q_n` and the
//! Schur Q-functions `Q_lambda` are derived expansions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{labeled_partitions, z_of, LabeledPartitionFn, Partition, PartitionKind};
use crate::series::{PowerSeries, SeriesCoeff};

/// Sparse rational combination of odd power-sum monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaElem {
    num_labels: usize,
    coeffs: BTreeMap<LabeledPartitionFn, BigRational>,
}

impl OmegaElem {
    pub fn zero(num_labels: usize) -> Self {
        OmegaElem {
            num_labels,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(num_labels: usize) -> Self {
        Self::from_key(LabeledPartitionFn::empty(num_labels)).expect("empty key is odd")
    }

    pub fn from_key(key: LabeledPartitionFn) -> Result<Self> {
        key.require_odd()?;
        let mut e = Self::zero(key.num_labels());
        e.coeffs.insert(key, BigRational::one());
        Ok(e)
    }

    /// `p_mu` in the uncolored ring.
    pub fn p(mu: &Partition) -> Result<Self> {
        Self::from_key(LabeledPartitionFn::single(mu.clone()))
    }

    /// `p_mu` at color `label` in the ring with `num_labels` colors.
    pub fn p_colored(mu: &Partition, label: usize, num_labels: usize) -> Result<Self> {
        if label >= num_labels {
            return Err(Error::UnknownLabel(format!("#{}", label)));
        }
        Self::from_key(LabeledPartitionFn::at(num_labels, label, mu.clone()))
    }

    pub fn num_labels(&self) -> usize {
        self.num_labels
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LabeledPartitionFn, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, key: &LabeledPartitionFn) -> BigRational {
        self.coeffs.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Uncolored shorthand for [`coeff`](Self::coeff).
    pub fn coeff_of(&self, mu: &[u32]) -> BigRational {
        self.coeff(&LabeledPartitionFn::single(Partition::from_unsorted(mu.to_vec())))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree if the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.coeffs.keys().map(LabeledPartitionFn::total_weight);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.num_labels != other.num_labels {
            return Err(Error::LabelMismatch(self.num_labels, other.num_labels));
        }
        Ok(())
    }

    fn insert_add(&mut self, key: LabeledPartitionFn, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.insert_add(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale_by(&-BigRational::one()))
    }

    pub fn scale_by(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.num_labels);
        }
        OmegaElem {
            num_labels: self.num_labels,
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), c * q)).collect(),
        }
    }

    /// Product in the free polynomial ring on the odd power sums.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.num_labels);
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                out.insert_add(ka.union(kb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.num_labels);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same labels");
        }
        acc
    }

    /// Keeps only the terms of degree `n`.
    pub fn component(&self, n: u32) -> Self {
        OmegaElem {
            num_labels: self.num_labels,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.total_weight() == n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates of the degree-`n` part on the basis `basis`.
    pub fn coordinates(&self, basis: &[LabeledPartitionFn]) -> Vec<BigRational> {
        basis.iter().map(|k| self.coeff(k)).collect()
    }

    pub fn from_coordinates(num_labels: usize, basis: &[LabeledPartitionFn], xs: &[BigRational]) -> Self {
        let mut out = Self::zero(num_labels);
        for (k, x) in basis.iter().zip(xs) {
            out.insert_add(k.clone(), x.clone());
        }
        out
    }

    /// Serializes with the given label names (defaults to `c0, c1, ...`).
    pub fn to_json(&self, labels: Option<&[String]>) -> serde_json::Value {
        let names: Vec<String> = match labels {
            Some(l) => l.to_vec(),
            None => (0..self.num_labels).map(|i| format!("c{}", i)).collect(),
        };
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, c)| OmegaTermJson {
                key: k
                    .entries()
                    .filter(|(_, p)| !p.is_empty())
                    .map(|(i, p)| (names[i].clone(), p.parts().to_vec()))
                    .collect(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        serde_json::to_value(OmegaJson { coeffs }).expect("omega element serializes")
    }

    pub fn from_json(v: &serde_json::Value, labels: Option<&[String]>) -> Result<Self> {
        let raw: OmegaJson = serde_json::from_value(v.clone())?;
        let names: Vec<String> = match labels {
            Some(l) => l.to_vec(),
            None => {
                let max = raw
                    .coeffs
                    .iter()
                    .flat_map(|t| t.key.iter())
                    .map(|(name, _)| {
                        name.strip_prefix('c')
                            .and_then(|i| i.parse::<usize>().ok())
                            .ok_or_else(|| Error::UnknownLabel(name.clone()))
                    })
                    .try_fold(0usize, |acc, i| i.map(|i| acc.max(i + 1)))?;
                (0..max.max(1)).map(|i| format!("c{}", i)).collect()
            }
        };
        let mut out = Self::zero(names.len());
        for t in raw.coeffs {
            let mut key = LabeledPartitionFn::empty(names.len());
            for (name, parts) in t.key {
                let i = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::UnknownLabel(name.clone()))?;
                let p = Partition::new(parts)?;
                key = key.union(&LabeledPartitionFn::at(names.len(), i, p))?;
            }
            key.require_odd()?;
            let num: BigInt = t.num.parse().map_err(|_| Error::NotRational(t.num.clone()))?;
            let den: BigInt = t.den.parse().map_err(|_| Error::NotRational(t.den.clone()))?;
            if den.is_zero() {
                return Err(Error::NotRational(format!("{}/0", num)));
            }
            out.insert_add(key, BigRational::new(num, den));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct OmegaTermJson {
    key: Vec<(String, Vec<u32>)>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct OmegaJson {
    coeffs: Vec<OmegaTermJson>,
}

impl SeriesCoeff for OmegaElem {
    fn zero_like(&self) -> Self {
        Self::zero(self.num_labels)
    }
    fn one_like(&self) -> Self {
        Self::one(self.num_labels)
    }
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("label sets agree")
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("label sets agree")
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self.scale_by(q)
    }
}

impl fmt::Display for OmegaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // highest degree first, then reverse-lex on keys
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.total_weight().cmp(&a.total_weight()).then(b.cmp(a)));
        for (i, (k, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if k.is_empty() {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            write!(f, "p{}", k)?;
        }
        Ok(())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `sum_{r odd} 2 p_r(c) t^r / (r zeta_c)` summed over colors; the argument of
/// the exponential generating `q_n`. Uncolored when `zetas == [1]`.
pub fn q_exponent(zetas: &[u64], n: usize) -> PowerSeries<OmegaElem> {
    let k = zetas.len();
    let mut coeffs = vec![OmegaElem::zero(k); n + 1];
    for r in (1..=n).step_by(2) {
        for (c, &zeta) in zetas.iter().enumerate() {
            let pr = OmegaElem::p_colored(&Partition::from_unsorted(vec![r as u32]), c, k)
                .expect("odd part");
            let w = BigRational::new(BigInt::from(2), BigInt::from(r as u64 * zeta));
            coeffs[r] = coeffs[r].try_add(&pr.scale_by(&w)).expect("same labels");
        }
    }
    PowerSeries::from_coeffs(coeffs, n)
}

/// `sum_n q_n t^n = exp(sum_{r odd} 2 p_r t^r / r)` up to `t^n`.
pub fn q_series(n: usize) -> PowerSeries<OmegaElem> {
    q_exponent(&[1], n).exp().expect("zero constant term")
}

/// Colored analogue with weights `1/zeta_c`.
pub fn q_series_colored(zetas: &[u64], n: usize) -> PowerSeries<OmegaElem> {
    q_exponent(zetas, n).exp().expect("zero constant term")
}

pub fn q_in_p(n: u32) -> OmegaElem {
    q_series(n as usize).coeff(n as usize).clone()
}

/// `Q_(a,b) = q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}` given `qs[k] = q_k`.
fn two_row(a: u32, b: u32, qs: &[OmegaElem]) -> OmegaElem {
    let mut acc = qs[a as usize].try_mul(&qs[b as usize]).expect("same labels");
    for i in 1..=b {
        let term = qs[(a + i) as usize]
            .try_mul(&qs[(b - i) as usize])
            .expect("same labels");
        let sign = if i % 2 == 0 { 2 } else { -2 };
        acc = acc.try_add(&term.scale_by(&rat(sign))).expect("same labels");
    }
    acc
}

fn pfaffian(m: &[Vec<OmegaElem>], idx: &[usize]) -> OmegaElem {
    if idx.is_empty() {
        return OmegaElem::one(1);
    }
    let first = idx[0];
    let mut acc = OmegaElem::zero(1);
    for (j, &other) in idx.iter().enumerate().skip(1) {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != other).collect();
        let term = m[first][other].try_mul(&pfaffian(m, &rest)).expect("same labels");
        acc = if j % 2 == 1 {
            acc.try_add(&term)
        } else {
            acc.try_sub(&term)
        }
        .expect("same labels");
    }
    acc
}

/// Schur Q-function `Q_lambda` in the power-sum basis, as the Pfaffian of the
/// matrix of two-row functions (a zero part is appended for odd length).
#[allow(non_snake_case)]
pub fn Q_in_p(lambda: &Partition) -> Result<OmegaElem> {
    lambda.require_strict()?;
    if lambda.is_empty() {
        return Ok(OmegaElem::one(1));
    }
    let n = lambda.weight();
    let qs = q_series(n as usize).into_coeffs();
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let k = parts.len();
    let mut m = vec![vec![OmegaElem::zero(1); k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            let q = two_row(parts[i], parts[j], &qs);
            m[j][i] = q.scale_by(&rat(-1));
            m[i][j] = q;
        }
    }
    let idx: Vec<usize> = (0..k).collect();
    Ok(pfaffian(&m, &idx))
}

/// Coordinates of the odd power sum `p_mu` in the basis `Q_lambda`, `lambda`
/// strict of the same weight. Zero coordinates are omitted.
#[allow(non_snake_case)]
pub fn p_in_Q(mu: &Partition) -> Result<Vec<(Partition, BigRational)>> {
    mu.require_odd()?;
    let n = mu.weight();
    let basis = p_basis(n);
    let strict = crate::partitions::partitions(n, PartitionKind::Strict);
    let columns = strict
        .iter()
        .map(|l| Ok(Q_in_p(l)?.coordinates(&basis)))
        .collect::<Result<Vec<_>>>()?;
    let target = OmegaElem::p(mu)?.coordinates(&basis);
    let xs = crate::linalg::solve(&columns, &target)
        .ok_or_else(|| Error::Series(format!("p_{} is not in the span of the Q basis", mu)))?;
    Ok(strict.into_iter().zip(xs).filter(|(_, x)| !x.is_zero()).collect())
}

/// `<p_rho, p_tau> = delta prod_c z_{rho(c)} (zeta_c / 2)^{l(rho(c))}`.
pub fn inner_weighted(f: &OmegaElem, g: &OmegaElem, zetas: &[u64]) -> Result<BigRational> {
    f.check(g)?;
    if zetas.len() != f.num_labels {
        return Err(Error::LabelMismatch(f.num_labels, zetas.len()));
    }
    let mut acc = BigRational::zero();
    for (k, a) in &f.coeffs {
        if let Some(b) = g.coeffs.get(k) {
            acc += a * b * power_sum_norm(k, zetas);
        }
    }
    Ok(acc)
}

pub(crate) fn power_sum_norm(k: &LabeledPartitionFn, zetas: &[u64]) -> BigRational {
    let mut w = BigRational::one();
    for (c, p) in k.entries() {
        let l = p.length() as i32;
        let z = BigRational::from_integer(BigInt::from(z_of(p)));
        w *= z * BigRational::new(BigInt::from(zetas[c]), BigInt::from(2)).pow(l);
    }
    w
}

/// The inner product with all `zeta_c = 1`, i.e. `<p_mu, p_nu> = delta z_mu 2^{-l(mu)}`.
pub fn inner(f: &OmegaElem, g: &OmegaElem) -> Result<BigRational> {
    let ones = vec![1; f.num_labels];
    inner_weighted(f, g, &ones)
}

/// `prod_{i >= 1} 1/(1 - t^{2i-1})` up to `t^n`.
pub fn omega_dim_series(n: usize) -> PowerSeries {
    PowerSeries::odd_euler_product(1, n)
}

/// The odd power-sum basis of the degree-`n` piece, uncolored.
pub fn p_basis(n: u32) -> Vec<LabeledPartitionFn> {
    labeled_partitions(n, 1, PartitionKind::Odd)
}

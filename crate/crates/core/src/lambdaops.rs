//! Q-λ operations on virtual bundles in a splitting-principle model.
//!
//! An element is a polynomial in line variables `x_1..x_m`; each monomial is a
//! line and integer coefficients give (virtual) multiplicities. The Adams
//! operation `psi^r` sends every line `L` to `L^r`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partitions::{partitions, Partition, PartitionKind};
use crate::series::{PowerSeries, SeriesCoeff};
use crate::spinchar::irreducible_char;
use crate::symfunc::{OmegaElem, Q_in_p};

/// A polynomial in `m` line variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitElement {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// Power series in `t` with [`SplitElement`] coefficients.
pub type OperationSeries = PowerSeries<SplitElement>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl SplitElement {
    pub fn zero(vars: usize) -> Self {
        SplitElement {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vars, vec![0; vars], rat(1))
    }

    pub fn monomial(vars: usize, exps: Vec<u32>, c: BigRational) -> Self {
        assert_eq!(exps.len(), vars);
        let mut e = Self::zero(vars);
        e.add_term(exps, c);
        e
    }

    /// The line `x_i`.
    pub fn line(vars: usize, i: usize) -> Self {
        let mut exps = vec![0; vars];
        exps[i] = 1;
        Self::monomial(vars, exps, rat(1))
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.get(&exps).cloned().unwrap_or_default() + c;
        if s.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, s);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch(other.vars, self.vars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * q);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Whether every coefficient is an integer (a genuine virtual bundle).
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Value at `x_i = 1`.
    pub fn rank(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// Value at `x_i = values[i]`.
    pub fn evaluate(&self, values: &[BigRational]) -> Result<BigRational> {
        if values.len() != self.vars {
            return Err(Error::DimensionMismatch(values.len(), self.vars));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in values.iter().zip(e) {
                v *= num_traits::pow(x.clone(), k as usize);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// `x^alpha -> x^{r alpha}` for any `r >= 1`.
    fn adams_any(&self, r: u32) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|k| k * r).collect(), c.clone());
        }
        out
    }
}

impl fmt::Display for SplitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    vars.join("*")
                } else {
                    format!("{}*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", items.join(" + "))
    }
}

impl SeriesCoeff for SplitElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.vars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.vars)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("same variables")
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("same variables")
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self.scale(q)
    }
}

/// The odd Adams operation `psi^r`.
pub fn adams(r: u32, e: &SplitElement) -> Result<SplitElement> {
    if r.is_multiple_of(2) {
        return Err(Error::EvenIndex(r));
    }
    Ok(e.adams_any(r))
}

/// `exp(sum_{r in rs} w(r) psi^r(E) t^r)`.
fn adams_exponential(e: &SplitElement, n: usize, weight: impl Fn(u32) -> Option<BigRational>) -> OperationSeries {
    let mut coeffs = vec![SplitElement::zero(e.vars); n + 1];
    for r in 1..=n as u32 {
        if let Some(w) = weight(r) {
            coeffs[r as usize] = e.adams_any(r).scale(&w);
        }
    }
    PowerSeries::from_coeffs(coeffs, n).exp().expect("zero constant term")
}

/// `sigma_t(E) = exp(sum_r psi^r(E) t^r / r)`.
pub fn sym_series(e: &SplitElement, n: usize) -> OperationSeries {
    adams_exponential(e, n, |r| Some(BigRational::new(BigInt::one(), BigInt::from(r))))
}

/// `lambda_t(E) = exp(sum_r (-1)^{r-1} psi^r(E) t^r / r)`.
pub fn ext_series(e: &SplitElement, n: usize) -> OperationSeries {
    adams_exponential(e, n, |r| {
        let s = if r % 2 == 1 { 1 } else { -1 };
        Some(BigRational::new(BigInt::from(s), BigInt::from(r)))
    })
}

/// `Q_t(E) = exp(sum_{r odd} 2 psi^r(E) t^r / r)`.
pub fn q_series(e: &SplitElement, n: usize) -> OperationSeries {
    adams_exponential(e, n, |r| (r % 2 == 1).then(|| BigRational::new(BigInt::from(2), BigInt::from(r))))
}

/// `Q^n(E|E) = sum_i S^i(E) Lambda^{n-i}(E)`.
pub fn qsusy(n: usize, e: &SplitElement) -> SplitElement {
    let s = sym_series(e, n);
    let l = ext_series(e, n);
    let mut acc = SplitElement::zero(e.vars);
    for i in 0..=n {
        acc = acc.add(&s.coeff(i).mul(l.coeff(n - i)).expect("same variables")).expect("same variables");
    }
    acc
}

/// `prod_L (1 - L t)^{-m_L}` over the lines `L` of `E` with multiplicities
/// `m_L`; agrees with [`sym_series`] and needs integral coefficients.
pub fn sym_series_by_lines(e: &SplitElement, n: usize) -> Result<OperationSeries> {
    line_product(e, n, -1, -1)
}

/// `prod_L (1 + L t)^{m_L}`.
pub fn ext_series_by_lines(e: &SplitElement, n: usize) -> Result<OperationSeries> {
    line_product(e, n, 1, 1)
}

fn line_product(e: &SplitElement, n: usize, sign: i64, dir: i64) -> Result<OperationSeries> {
    if !e.is_integral() {
        return Err(Error::Series("line products need integral multiplicities".into()));
    }
    let mut acc = PowerSeries::constant(SplitElement::one(e.vars), n);
    for (exps, c) in &e.terms {
        let mult: i64 = c.to_integer().try_into().map_err(|_| Error::Series("multiplicity too large".into()))?;
        let line = SplitElement::monomial(e.vars, exps.clone(), rat(sign));
        let factor = PowerSeries::from_coeffs(vec![SplitElement::one(e.vars), line], n);
        let e_mult = dir * mult;
        let f = if e_mult >= 0 { factor } else { factor.inverse()? };
        for _ in 0..e_mult.unsigned_abs() {
            acc = acc.mul(&f)?;
        }
    }
    Ok(acc)
}

/// Outcome of [`q_identities_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QIdentityReport {
    /// `Q^n(E|E)` from the convolution equals the exponential coefficient, for `E`, `F`, `E+F`, `E-F`.
    pub susy_matches_exp: bool,
    /// `Q_t(E+F) = Q_t(E) Q_t(F)`.
    pub sum_identity: bool,
    /// `Q_t(E-F) = Q_t(E) Q_{-t}(F)`.
    pub difference_identity: bool,
}

impl QIdentityReport {
    pub fn passed(&self) -> bool {
        self.susy_matches_exp && self.sum_identity && self.difference_identity
    }
}

pub fn q_identities_check(e: &SplitElement, f: &SplitElement, n: usize) -> Result<QIdentityReport> {
    let sum = e.add(f)?;
    let diff = e.sub(f)?;
    let qe = q_series(e, n);
    let qf = q_series(f, n);
    let susy_matches_exp = [e, f, &sum, &diff].iter().all(|x| {
        let q = q_series(x, n);
        (0..=n).all(|k| &qsusy(k, x) == q.coeff(k))
    });
    Ok(QIdentityReport {
        susy_matches_exp,
        sum_identity: q_series(&sum, n) == qe.mul(&qf)?,
        difference_identity: q_series(&diff, n) == qe.mul(&qf.negate_variable())?,
    })
}

/// `f(p_r -> x_1^r + ... + x_m^r)` for an uncolored `f`.
pub fn evaluate_at_lines(f: &OmegaElem, vars: usize) -> Result<SplitElement> {
    if f.num_labels() != 1 {
        return Err(Error::LabelMismatch(f.num_labels(), 1));
    }
    let total = (0..vars).try_fold(SplitElement::zero(vars), |acc, i| acc.add(&SplitElement::line(vars, i)))?;
    let mut out = SplitElement::zero(vars);
    for (key, c) in f.terms() {
        let mut term = SplitElement::one(vars).scale(c);
        for &r in key.get(0).parts() {
            term = term.mul(&total.adams_any(r))?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

fn delta(l: usize) -> usize {
    l % 2
}

/// `2^{(delta(l) - l)/2} Q_lambda(x_1, ..., x_m)`.
pub fn trace_of_op(lambda: &Partition, vars: usize) -> Result<SplitElement> {
    lambda.require_strict()?;
    let l = lambda.length();
    let scale = BigRational::new(BigInt::one(), BigInt::one() << ((l - delta(l)) / 2));
    evaluate_at_lines(&Q_in_p(lambda)?.scale_by(&scale), vars)
}

/// `sum_lambda 2^{-delta(l)} trace_lambda(1, ..., 1) dim T^lambda`, which
/// should equal `(2m)^n`.
pub fn trace_dimension_sum(n: u32, vars: usize) -> Result<BigRational> {
    let group = std::sync::Arc::new(crate::partitions::GroupData::trivial());
    let ones = vec![BigRational::one(); vars];
    let identity_class = crate::partitions::LabeledPartitionFn::single(
        Partition::new(vec![1; n as usize])?,
    );
    let mut acc = BigRational::zero();
    for lambda in partitions(n, PartitionKind::Strict) {
        let tr = trace_of_op(&lambda, vars)?.evaluate(&ones)?;
        let dim = irreducible_char(&lambda, group.clone())?
            .value(&identity_class)
            .to_rational()
            .expect("rational character");
        let w = BigRational::new(BigInt::one(), BigInt::from(1u32 << delta(lambda.length())));
        acc += tr * dim * w;
    }
    Ok(acc)
}

/// A virtual element with between one and `max_pos` positive lines and up to
/// `max_neg` negative lines, each line a nonconstant squarefree monomial.
pub fn random_virtual(vars: usize, max_pos: usize, max_neg: usize, rng: &mut ChaCha8Rng) -> SplitElement {
    let line = |rng: &mut ChaCha8Rng| {
        let mut exps: Vec<u32> = (0..vars).map(|_| rng.gen_range(0..=1)).collect();
        if exps.iter().all(|&k| k == 0) {
            exps[rng.gen_range(0..vars)] = 1;
        }
        exps
    };
    let mut e = SplitElement::zero(vars);
    for _ in 0..rng.gen_range(1..=max_pos) {
        let l = line(rng);
        e.add_term(l, rat(1));
    }
    for _ in 0..rng.gen_range(0..=max_neg) {
        let l = line(rng);
        e.add_term(l, rat(-1));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn x(i: usize) -> SplitElement {
        SplitElement::line(3, i)
    }

    fn pow(i: usize, k: u32) -> SplitElement {
        let mut e = vec![0; 3];
        e[i] = k;
        SplitElement::monomial(3, e, rat(1))
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn adams_examples() {
        let e = x(0).add(&x(1)).unwrap();
        assert_eq!(adams(3, &e).unwrap(), pow(0, 3).add(&pow(1, 3)).unwrap());
        assert_eq!(adams(1, &e).unwrap(), e);
        let f = x(2).add(&x(1)).unwrap();
        let d = e.sub(&f).unwrap();
        assert_eq!(adams(3, &d).unwrap(), adams(3, &e).unwrap().sub(&adams(3, &f).unwrap()).unwrap());
        assert!(adams(2, &e).is_err());
        assert_eq!(adams(3, &adams(5, &e).unwrap()).unwrap(), adams(15, &e).unwrap());
    }

    #[test]
    fn sym_and_ext() {
        let s = sym_series(&x(0), 4);
        for k in 0..=4 {
            assert_eq!(s.coeff(k), &pow(0, k as u32));
        }
        let e = x(0).add(&x(1)).unwrap();
        let l = ext_series(&e, 3);
        assert_eq!(l.coeff(2), &x(0).mul(&x(1)).unwrap());
        assert!(l.coeff(3).is_zero());
        let cancel = l.mul(&sym_series(&e, 3).negate_variable()).unwrap();
        assert_eq!(cancel, PowerSeries::constant(SplitElement::one(3), 3));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let v = random_virtual(3, 4, 2, &mut rng);
            assert_eq!(sym_series(&v, 5), sym_series_by_lines(&v, 5).unwrap());
            assert_eq!(ext_series(&v, 5), ext_series_by_lines(&v, 5).unwrap());
        }
    }

    #[test]
    fn qsusy_examples() {
        assert_eq!(qsusy(0, &x(0)), SplitElement::one(3));
        for n in 1..=5 {
            assert_eq!(qsusy(n, &x(0)), pow(0, n as u32).scale(&rat(2)));
        }
        let e = x(0).add(&x(1)).unwrap();
        assert_eq!(qsusy(1, &e), e.scale(&rat(2)));
        let q = q_series(&e, 6);
        for n in 0..=6 {
            assert_eq!(&qsusy(n, &e), q.coeff(n));
        }
    }

    #[test]
    fn identities() {
        let r = q_identities_check(&x(0), &x(1), 8).unwrap();
        assert!(r.passed());
        let r = q_identities_check(&x(0), &SplitElement::zero(3), 4).unwrap();
        assert!(r.passed());
        let e = x(0).add(&x(1)).unwrap();
        assert!(q_identities_check(&e, &x(2), 8).unwrap().passed());
    }

    #[test]
    fn trace_examples() {
        for n in 1..=5u32 {
            let t = trace_of_op(&p(&[n]), 1).unwrap();
            assert_eq!(t, SplitElement::monomial(1, vec![n], rat(2)));
        }
        assert!(trace_of_op(&p(&[2, 1]), 1).unwrap().is_zero());
        assert_eq!(trace_of_op(&Partition::empty(), 2).unwrap(), SplitElement::one(2));
        // Q_t(x1 + x2) coefficient agrees with the one-row trace
        let e = SplitElement::line(2, 0).add(&SplitElement::line(2, 1)).unwrap();
        assert_eq!(trace_of_op(&p(&[3]), 2).unwrap(), qsusy(3, &e));
    }

    #[test]
    fn trace_sums_to_tensor_power() {
        for m in 1..=3usize {
            for n in 0..=4u32 {
                assert_eq!(trace_dimension_sum(n, m).unwrap(), rat((2 * m as i64).pow(n)));
            }
        }
    }
}

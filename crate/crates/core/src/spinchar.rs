//! Spin class functions of the twisted wreath products, supported on the
//! even split classes `OP_n(Gamma_*)`.
//!
//! Two views are kept in step:
//!
//! * [`ClassFunction`]: values at the classes `rho`, one degree at a time.
//! * [`SigmaExpansion`]: coordinates on the basis `sigma^rho`, where
//!   `sigma^rho` takes value `Z_rho` at `rho`. In this basis the induction
//!   product is `sigma^rho sigma^tau = sigma^(rho u tau)` and the coproduct
//!   deconcatenates the multiset of labeled parts.
//!
//! `sigma_r(c)` takes value `r zeta_c` at the one-cycle class `c_r`, which is
//! half of `sigma^{(r) at c}`. With this normalization `ch'(sigma_r(c)) = p_r(c)`
//! and `ch'` is multiplicative.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::partitions::{
    big_z_of, labeled_partitions, GroupData, LabeledPartitionFn, Partition, PartitionKind,
};
use crate::series::{PowerSeries, SeriesCoeff};
use crate::symfunc::{OmegaElem, Q_in_p};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn big(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Z_rho` for a key that is already known to match the group.
fn zz(rho: &LabeledPartitionFn, group: &GroupData) -> BigRational {
    big(big_z_of(rho, group).expect("key matches group"))
}

fn check_group(a: &GroupData, b: &GroupData) -> Result<()> {
    if a != b {
        return Err(Error::GroupMismatch(a.name.clone(), b.name.clone()));
    }
    Ok(())
}

/// Even and odd split classes in degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitClasses {
    /// `OP_n(Gamma_*)`.
    pub even: Vec<LabeledPartitionFn>,
    /// `SP_n^-(Gamma_*)`: strict functions of odd total length.
    pub odd: Vec<LabeledPartitionFn>,
}

pub fn split_classes(n: u32, group: &GroupData) -> SplitClasses {
    let k = group.num_classes();
    SplitClasses {
        even: labeled_partitions(n, k, PartitionKind::Odd),
        odd: labeled_partitions(n, k, PartitionKind::Strict)
            .into_iter()
            .filter(|r| r.total_length() % 2 == 1)
            .collect(),
    }
}

/// A degree-`n` spin class function.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    degree: u32,
    group: Arc<GroupData>,
    values: BTreeMap<LabeledPartitionFn, Cyclo>,
}

impl ClassFunction {
    pub fn zero(degree: u32, group: Arc<GroupData>) -> Self {
        ClassFunction {
            degree,
            group,
            values: BTreeMap::new(),
        }
    }

    /// Builds from explicit class values; keys must be odd of weight `degree`.
    pub fn from_values(
        degree: u32,
        group: Arc<GroupData>,
        values: impl IntoIterator<Item = (LabeledPartitionFn, Cyclo)>,
    ) -> Result<Self> {
        let mut f = Self::zero(degree, group);
        for (rho, v) in values {
            f.check_key(&rho)?;
            if !v.is_zero() {
                f.values.insert(rho, v);
            }
        }
        Ok(f)
    }

    fn check_key(&self, rho: &LabeledPartitionFn) -> Result<()> {
        if rho.num_labels() != self.group.num_classes() {
            return Err(Error::LabelMismatch(rho.num_labels(), self.group.num_classes()));
        }
        rho.require_odd()?;
        if rho.total_weight() != self.degree {
            return Err(Error::DegreeMismatch(rho.total_weight() as usize, self.degree as usize));
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    /// Value at the even split class `rho` (zero off the support).
    pub fn value(&self, rho: &LabeledPartitionFn) -> Cyclo {
        self.values.get(rho).cloned().unwrap_or_else(|| Cyclo::zero(1))
    }

    pub fn values(&self) -> impl Iterator<Item = (&LabeledPartitionFn, &Cyclo)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_group(&self.group, &other.group)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree as usize, other.degree as usize));
        }
        let mut out = self.clone();
        for (k, v) in &other.values {
            let s = out.value(k).add(v);
            if s.is_zero() {
                out.values.remove(k);
            } else {
                out.values.insert(k.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = Self::zero(self.degree, self.group.clone());
        for (k, v) in &self.values {
            let s = v.mul(c);
            if !s.is_zero() {
                out.values.insert(k.clone(), s);
            }
        }
        out
    }

    pub fn to_sigma(&self) -> SigmaExpansion {
        let mut out = SigmaExpansion::zero(self.group.clone());
        for (rho, v) in &self.values {
            let z = zz(rho, &self.group);
            out.insert_add(rho.clone(), v.scale(&z.recip()));
        }
        out
    }

    /// Induction product of degrees `n` and `m` into degree `n + m`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        check_group(&self.group, &other.group)?;
        let prod = self.to_sigma().product(&other.to_sigma())?;
        Ok(prod.component(self.degree + other.degree))
    }

    /// The characteristic map into the colored ring `Omega(Gamma_*)`:
    /// `ch'(f) = sum_rho 2^{l(rho)} Z_rho^{-1} f(rho) p_rho`.
    pub fn ch_prime(&self) -> Result<OmegaElem> {
        let k = self.group.num_classes();
        let mut out = OmegaElem::zero(k);
        for (rho, v) in &self.values {
            let q = v.to_rational().ok_or_else(|| Error::NotRational(v.to_string()))?;
            let w = rat(1i64 << rho.total_length()) / zz(rho, &self.group);
            let term = OmegaElem::from_key(rho.clone())?.scale_by(&(q * w));
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Inner product `sum_rho Z_rho^{-1} f(rho) conj(g(rho))`.
    pub fn inner(&self, other: &Self) -> Result<Cyclo> {
        check_group(&self.group, &other.group)?;
        let mut acc = Cyclo::zero(1);
        for (rho, v) in &self.values {
            if let Some(w) = other.values.get(rho) {
                acc = acc.add(&v.mul(&w.conj()).scale(&zz(rho, &self.group).recip()));
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.group.labels();
        let items: Vec<String> = self
            .values
            .iter()
            .map(|(k, v)| format!("{} -> {}", k.display_with(&labels), v))
            .collect();
        write!(f, "[deg {}] {}", self.degree, items.join(", "))
    }
}

/// Inverse of [`ClassFunction::ch_prime`] on a homogeneous element of degree `n`.
pub fn ch_prime_inverse(f: &OmegaElem, n: u32, group: Arc<GroupData>) -> Result<ClassFunction> {
    if f.num_labels() != group.num_classes() {
        return Err(Error::LabelMismatch(f.num_labels(), group.num_classes()));
    }
    let mut out = ClassFunction::zero(n, group.clone());
    for (rho, c) in f.terms() {
        if rho.total_weight() != n {
            return Err(Error::DegreeMismatch(rho.total_weight() as usize, n as usize));
        }
        let v = c * zz(rho, &group) / rat(1i64 << rho.total_length());
        out.values.insert(rho.clone(), Cyclo::from_rational(1, v));
    }
    Ok(out)
}

/// A finite combination of the `sigma^rho` across all degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaExpansion {
    group: Arc<GroupData>,
    coeffs: BTreeMap<LabeledPartitionFn, Cyclo>,
}

impl SigmaExpansion {
    pub fn zero(group: Arc<GroupData>) -> Self {
        SigmaExpansion {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: Arc<GroupData>) -> Self {
        let k = group.num_classes();
        Self::basis(group, LabeledPartitionFn::empty(k))
    }

    /// The basis element `sigma^rho`.
    pub fn basis(group: Arc<GroupData>, rho: LabeledPartitionFn) -> Self {
        let mut e = Self::zero(group);
        e.coeffs.insert(rho, Cyclo::one(1));
        e
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn coeff(&self, rho: &LabeledPartitionFn) -> Cyclo {
        self.coeffs.get(rho).cloned().unwrap_or_else(|| Cyclo::zero(1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LabeledPartitionFn, &Cyclo)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert_add(&mut self, key: LabeledPartitionFn, c: Cyclo) {
        let s = self.coeff(&key).add(&c);
        if s.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, s);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_group(&self.group, &other.group)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.insert_add(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = Self::zero(self.group.clone());
        for (k, v) in &self.coeffs {
            out.insert_add(k.clone(), v.mul(c));
        }
        out
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        check_group(&self.group, &other.group)?;
        let mut out = Self::zero(self.group.clone());
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                out.insert_add(a.union(b)?, ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// The degree-`n` part as a class function.
    pub fn component(&self, n: u32) -> ClassFunction {
        let mut f = ClassFunction::zero(n, self.group.clone());
        for (rho, c) in &self.coeffs {
            if rho.total_weight() == n {
                f.values.insert(rho.clone(), c.scale(&zz(rho, &self.group)));
            }
        }
        f
    }

    /// `Delta sigma^rho = sum_{alpha u beta = rho} sigma^alpha (x) sigma^beta`, the
    /// sum running over sub-multisets with binomial multiplicities.
    pub fn coproduct(&self) -> SigmaTensor {
        let mut out = SigmaTensor::zero(self.group.clone(), 2);
        for (rho, c) in &self.coeffs {
            for (alpha, beta, mult) in splittings(rho) {
                out.insert_add(vec![alpha, beta], c.scale(&mult));
            }
        }
        out
    }

    /// `S(sigma^rho) = (-1)^{l(rho)} sigma^rho`.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(self.group.clone());
        for (rho, c) in &self.coeffs {
            let c = if rho.total_length() % 2 == 1 { c.neg() } else { c.clone() };
            out.insert_add(rho.clone(), c);
        }
        out
    }

    /// Projection onto degree zero.
    pub fn counit(&self) -> Cyclo {
        let k = self.group.num_classes();
        self.coeff(&LabeledPartitionFn::empty(k))
    }
}

impl SeriesCoeff for SigmaExpansion {
    fn zero_like(&self) -> Self {
        Self::zero(self.group.clone())
    }
    fn one_like(&self) -> Self {
        Self::one(self.group.clone())
    }
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("same group")
    }
    fn times(&self, other: &Self) -> Self {
        self.product(other).expect("same group")
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self.scale(&Cyclo::from_rational(1, q.clone()))
    }
}

fn binomial(n: u32, k: u32) -> BigRational {
    let mut b = BigRational::one();
    for i in 0..k {
        b = b * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    b
}

/// All ways to split the labeled parts of `rho` into two sub-multisets, with
/// the number of position choices giving each split.
fn splittings(rho: &LabeledPartitionFn) -> Vec<(LabeledPartitionFn, LabeledPartitionFn, BigRational)> {
    let k = rho.num_labels();
    let mults: Vec<((usize, u32), u32)> = rho.multiplicities().into_iter().collect();
    let mut out = Vec::new();
    let mut choice = vec![0u32; mults.len()];
    loop {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        let mut w = BigRational::one();
        for (i, &(key, m)) in mults.iter().enumerate() {
            left.insert(key, choice[i]);
            right.insert(key, m - choice[i]);
            w *= binomial(m, choice[i]);
        }
        out.push((
            LabeledPartitionFn::from_multiplicities(k, &left),
            LabeledPartitionFn::from_multiplicities(k, &right),
            w,
        ));
        // odometer over choice[i] in 0..=m_i
        let mut i = 0;
        loop {
            if i == mults.len() {
                return out;
            }
            if choice[i] < mults[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// An element of the `factors`-fold tensor power, on the basis
/// `sigma^{rho_1} (x) ... (x) sigma^{rho_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaTensor {
    group: Arc<GroupData>,
    factors: usize,
    coeffs: BTreeMap<Vec<LabeledPartitionFn>, Cyclo>,
}

impl SigmaTensor {
    pub fn zero(group: Arc<GroupData>, factors: usize) -> Self {
        SigmaTensor {
            group,
            factors,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<LabeledPartitionFn>, &Cyclo)> {
        self.coeffs.iter()
    }

    fn insert_add(&mut self, key: Vec<LabeledPartitionFn>, c: Cyclo) {
        let s = self.coeffs.get(&key).cloned().unwrap_or_else(|| Cyclo::zero(1)).add(&c);
        if s.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, s);
        }
    }

    /// Applies the coproduct to tensor slot `slot`.
    pub fn coproduct_at(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.group.clone(), self.factors + 1);
        for (key, c) in &self.coeffs {
            for (a, b, mult) in splittings(&key[slot]) {
                let mut nk = key[..slot].to_vec();
                nk.push(a);
                nk.push(b);
                nk.extend_from_slice(&key[slot + 1..]);
                out.insert_add(nk, c.scale(&mult));
            }
        }
        out
    }

    /// Applies the counit to tensor slot `slot`.
    pub fn counit_at(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.group.clone(), self.factors - 1);
        for (key, c) in &self.coeffs {
            if key[slot].is_empty() {
                let mut nk = key.clone();
                nk.remove(slot);
                out.insert_add(nk, c.clone());
            }
        }
        out
    }

    /// Applies the antipode to tensor slot `slot`.
    pub fn antipode_at(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.group.clone(), self.factors);
        for (key, c) in &self.coeffs {
            let c = if key[slot].total_length() % 2 == 1 { c.neg() } else { c.clone() };
            out.insert_add(key.clone(), c);
        }
        out
    }

    /// Multiplies all factors together.
    pub fn multiply_out(&self) -> SigmaExpansion {
        let k = self.group.num_classes();
        let mut out = SigmaExpansion::zero(self.group.clone());
        for (key, c) in &self.coeffs {
            let rho = key
                .iter()
                .try_fold(LabeledPartitionFn::empty(k), |acc, r| acc.union(r))
                .expect("same labels");
            out.insert_add(rho, c.clone());
        }
        out
    }

    /// Factorwise product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        check_group(&self.group, &other.group)?;
        if self.factors != other.factors {
            return Err(Error::DegreeMismatch(self.factors, other.factors));
        }
        let mut out = Self::zero(self.group.clone(), self.factors);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let key = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| x.union(y))
                    .collect::<Result<Vec<_>>>()?;
                out.insert_add(key, ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// The single-factor tensor wrapping `e`.
    pub fn from_expansion(e: &SigmaExpansion) -> Self {
        let mut out = Self::zero(e.group.clone(), 1);
        for (k, c) in &e.coeffs {
            out.insert_add(vec![k.clone()], c.clone());
        }
        out
    }
}

pub fn sigma(r: u32, class: usize, group: Arc<GroupData>) -> Result<ClassFunction> {
    if r.is_multiple_of(2) {
        return Err(Error::EvenIndex(r));
    }
    if class >= group.num_classes() {
        return Err(Error::UnknownLabel(format!("#{}", class)));
    }
    let k = group.num_classes();
    let rho = LabeledPartitionFn::at(k, class, Partition::from_unsorted(vec![r]));
    let v = Cyclo::from_int(1, r as i64 * group.centralizer(class) as i64);
    ClassFunction::from_values(r, group, [(rho, v)])
}

pub fn sigma_rho(rho: &LabeledPartitionFn, group: Arc<GroupData>) -> Result<ClassFunction> {
    let z = big_z_of(rho, &group)?;
    let v = Cyclo::from_rational(1, big(z));
    ClassFunction::from_values(rho.total_weight(), group, [(rho.clone(), v)])
}

/// The basic spin character: value `2^{l(rho)}` on every even split class.
pub fn xi(n: u32, group: Arc<GroupData>) -> ClassFunction {
    let classes = labeled_partitions(n, group.num_classes(), PartitionKind::Odd);
    let vals = classes
        .into_iter()
        .map(|rho| {
            let v = Cyclo::from_int(1, 1i64 << rho.total_length());
            (rho, v)
        })
        .collect::<Vec<_>>();
    ClassFunction::from_values(n, group, vals).expect("odd keys of weight n")
}

fn delta(l: usize) -> usize {
    l % 2
}

/// The class function of the irreducible spin supermodule `T^lambda` of the
/// trivial-group case: `ch'(T^lambda) = 2^{(delta(l) - l)/2} Q_lambda`.
pub fn irreducible_char(lambda: &Partition, group: Arc<GroupData>) -> Result<ClassFunction> {
    lambda.require_strict()?;
    if group.num_classes() != 1 || group.order != 1 {
        return Err(Error::InvalidGroup(format!(
            "irreducible characters are only available for the trivial group, not `{}`",
            group.name
        )));
    }
    let l = lambda.length();
    // (delta - l) is even and <= 0
    let shift = (l - delta(l)) / 2;
    let f = Q_in_p(lambda)?.scale_by(&BigRational::new(BigInt::one(), BigInt::one() << shift));
    ch_prime_inverse(&f, lambda.weight(), group)
}

/// `V^{(x) n} * chi`: value `chi(rho) prod_{c, r} gamma_V(c)^{m_r(c)}`.
pub fn star_values(v: &[Cyclo], chi: &ClassFunction) -> Result<ClassFunction> {
    if v.len() != chi.group.num_classes() {
        return Err(Error::DimensionMismatch(v.len(), chi.group.num_classes()));
    }
    let mut out = ClassFunction::zero(chi.degree, chi.group.clone());
    for (rho, val) in &chi.values {
        let mut w = val.clone();
        for (c, p) in rho.entries() {
            w = w.mul(&v[c].pow(p.length() as u32));
        }
        if !w.is_zero() {
            out.values.insert(rho.clone(), w);
        }
    }
    Ok(out)
}

/// [`star_values`] with the `index`-th irreducible character of the group.
pub fn star(index: usize, chi: &ClassFunction) -> Result<ClassFunction> {
    let v = chi.group.character(index)?.to_vec();
    star_values(&v, chi)
}

/// Components `f_0, ..., f_N` of an element of the completed graded algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebraElem {
    pub components: Vec<ClassFunction>,
}

impl GradedAlgebraElem {
    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, n: usize) -> &ClassFunction {
        &self.components[n]
    }
}

/// `Q(V, t) = sum_n t^n V^{(x) n} * xi^n`.
pub fn vertex_q(v: &[Cyclo], group: Arc<GroupData>, n: usize) -> Result<GradedAlgebraElem> {
    let components = (0..=n as u32)
        .map(|d| star_values(v, &xi(d, group.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedAlgebraElem { components })
}

/// `exp(sum_{r odd} (2/r) t^r sum_c zeta_c^{-1} V^{(x) r} * sigma_r(c))`.
pub fn vertex_q_exponential(v: &[Cyclo], group: Arc<GroupData>, n: usize) -> Result<GradedAlgebraElem> {
    if v.len() != group.num_classes() {
        return Err(Error::DimensionMismatch(v.len(), group.num_classes()));
    }
    let mut gen = vec![SigmaExpansion::zero(group.clone()); n + 1];
    for r in (1..=n as u32).step_by(2) {
        for c in 0..group.num_classes() {
            let lifted = star_values(v, &sigma(r, c, group.clone())?)?;
            let w = BigRational::new(BigInt::from(2), BigInt::from(r as u64 * group.centralizer(c)));
            gen[r as usize] = gen[r as usize].add(&lifted.to_sigma().scaled(&w))?;
        }
    }
    let series = PowerSeries::from_coeffs(gen, n).exp()?;
    let components = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, e)| e.component(d as u32))
        .collect();
    Ok(GradedAlgebraElem { components })
}

/// `prod_r (1 - t^{2r-1})^{-|Gamma_*|}`.
pub fn dim_series_point(group: &GroupData, n: usize) -> PowerSeries {
    PowerSeries::odd_euler_product(group.num_classes() as i64, n)
}

/// One row of a rendered character table.
#[derive(Clone, Debug, PartialEq)]
pub struct CharTableRow {
    pub name: String,
    pub values: Vec<Cyclo>,
}

/// Columns (even split classes with `Z_rho`) and rows (`sigma^rho`, `xi^n`,
/// and `T^lambda` when the group is trivial).
#[derive(Clone, Debug, PartialEq)]
pub struct CharTable {
    pub degree: u32,
    pub columns: Vec<LabeledPartitionFn>,
    pub centralizers: Vec<BigUint>,
    pub rows: Vec<CharTableRow>,
    pub warnings: Vec<String>,
}

pub fn char_table(group: Arc<GroupData>, n: u32) -> Result<CharTable> {
    let columns = split_classes(n, &group).even;
    let centralizers = columns
        .iter()
        .map(|r| big_z_of(r, &group))
        .collect::<Result<Vec<_>>>()?;
    let labels = group.labels();
    let row = |name: String, f: &ClassFunction| CharTableRow {
        name,
        values: columns.iter().map(|c| f.value(c)).collect(),
    };
    let mut rows = Vec::new();
    for rho in &columns {
        let f = sigma_rho(rho, group.clone())?;
        let name = if rho.num_labels() == 1 {
            rho.to_string()
        } else {
            rho.display_with(&labels)
        };
        rows.push(row(format!("sigma^{}", name), &f));
    }
    rows.push(row(format!("xi^{}", n), &xi(n, group.clone())));
    let mut warnings = Vec::new();
    if group.num_classes() == 1 && group.order == 1 {
        for lambda in crate::partitions::partitions(n, PartitionKind::Strict) {
            let f = irreducible_char(&lambda, group.clone())?;
            rows.push(row(format!("T^{}", lambda), &f));
        }
    } else {
        warnings.push(format!(
            "irreducible rows T^lambda are only tabulated for the trivial group; omitted for `{}`",
            group.name
        ));
    }
    Ok(CharTable {
        degree: n,
        columns,
        centralizers,
        rows,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions;
    use crate::symfunc::{inner, q_in_p};
    use num_traits::Zero;

    fn triv() -> Arc<GroupData> {
        Arc::new(GroupData::trivial())
    }

    fn z2() -> Arc<GroupData> {
        Arc::new(GroupData::cyclic(2))
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(parts: &[u32]) -> LabeledPartitionFn {
        LabeledPartitionFn::single(p(parts))
    }

    fn c(n: i64) -> Cyclo {
        Cyclo::from_int(1, n)
    }

    #[test]
    fn split_class_examples() {
        let s = split_classes(3, &GroupData::trivial());
        assert_eq!(s.even, vec![single(&[3]), single(&[1, 1, 1])]);
        assert_eq!(s.odd, vec![single(&[3])]);
        let s = split_classes(1, &GroupData::trivial());
        assert_eq!((s.even, s.odd), (vec![single(&[1])], vec![single(&[1])]));
        let s = split_classes(0, &GroupData::cyclic(3));
        assert_eq!(s.even.len(), 1);
        assert!(s.odd.is_empty());
    }

    #[test]
    fn sigma_examples() {
        let s = sigma(1, 0, triv()).unwrap();
        assert_eq!(s.value(&single(&[1])), c(1));
        let s = sigma(3, 1, z2()).unwrap();
        let key = LabeledPartitionFn::at(2, 1, p(&[3]));
        assert_eq!(s.value(&key), c(6));
        let s = sigma_rho(&single(&[1, 1, 1]), triv()).unwrap();
        assert_eq!(s.value(&single(&[1, 1, 1])), c(48));
        assert!(sigma(2, 0, triv()).is_err());
    }

    #[test]
    fn xi_examples() {
        let x = xi(3, triv());
        assert_eq!(x.value(&single(&[3])), c(2));
        assert_eq!(x.value(&single(&[1, 1, 1])), c(8));
        let x0 = xi(0, triv());
        assert_eq!(x0.value(&LabeledPartitionFn::empty(1)), c(1));
        let x2 = xi(2, triv());
        assert_eq!(x2.values().count(), 1);
        assert_eq!(x2.value(&single(&[1, 1])), c(4));
    }

    #[test]
    fn products() {
        let g = triv();
        let s1 = sigma(1, 0, g.clone()).unwrap();
        // sigma_1 is half of sigma^{(1)}, so sigma_1^2 is a quarter of sigma^{(1,1)}
        let sq = s1.product(&s1).unwrap();
        let s11 = sigma_rho(&single(&[1, 1]), g.clone()).unwrap();
        assert_eq!(sq, s11.scale(&Cyclo::from_rational(1, BigRational::new(1.into(), 4.into()))));
        let s1r = sigma_rho(&single(&[1]), g.clone()).unwrap();
        assert_eq!(s1r.product(&s1r).unwrap(), s11);

        let x1 = xi(1, g.clone());
        let x1x1 = x1.product(&x1).unwrap();
        assert_eq!(x1x1.value(&single(&[1, 1])), c(8));
        assert_eq!(xi(2, g.clone()).value(&single(&[1, 1])), c(4));
        // ch'(xi^1)^2 = q_1^2 = 2 q_2
        assert_eq!(
            x1x1.ch_prime().unwrap(),
            q_in_p(2).scale_by(&BigRational::from_integer(2.into()))
        );
        assert!(x1.product(&xi(1, z2())).is_err());
    }

    #[test]
    fn coproduct_of_single_part_is_primitive() {
        let g = z2();
        let rho = LabeledPartitionFn::at(2, 1, p(&[3]));
        let d = SigmaExpansion::basis(g.clone(), rho.clone()).coproduct();
        let e = LabeledPartitionFn::empty(2);
        let terms: Vec<_> = d.terms().map(|(k, v)| (k.clone(), v.clone())).collect();
        assert_eq!(
            terms,
            vec![(vec![e.clone(), rho.clone()], c(1)), (vec![rho, e], c(1))]
        );
    }

    #[test]
    fn ch_prime_examples() {
        let g = triv();
        assert_eq!(
            xi(2, g.clone()).ch_prime().unwrap(),
            OmegaElem::p(&p(&[1, 1])).unwrap().scale_by(&BigRational::from_integer(2.into()))
        );
        for n in 0..=8 {
            assert_eq!(xi(n, g.clone()).ch_prime().unwrap(), q_in_p(n));
        }
        let zg = z2();
        let s = sigma(3, 1, zg).unwrap().ch_prime().unwrap();
        assert_eq!(s, OmegaElem::p_colored(&p(&[3]), 1, 2).unwrap());
    }

    #[test]
    fn irreducible_examples() {
        let g = triv();
        for n in 1..=5 {
            assert_eq!(irreducible_char(&p(&[n]), g.clone()).unwrap(), xi(n, g.clone()));
        }
        let t2 = irreducible_char(&p(&[2]), g.clone()).unwrap().ch_prime().unwrap();
        assert_eq!(inner(&t2, &t2).unwrap(), BigRational::from_integer(2.into()));
        let t21 = irreducible_char(&p(&[2, 1]), g.clone()).unwrap();
        let t3 = irreducible_char(&p(&[3]), g.clone()).unwrap();
        assert_eq!(inner(&t21.ch_prime().unwrap(), &t3.ch_prime().unwrap()).unwrap(), BigRational::zero());
        assert_eq!(t21.value(&single(&[3])), c(-2));
        assert_eq!(t21.value(&single(&[1, 1, 1])), c(4));
        assert!(irreducible_char(&p(&[1, 1]), g).is_err());
        assert!(irreducible_char(&p(&[1]), z2()).is_err());
    }

    #[test]
    fn star_examples() {
        let g = z2();
        let chi = xi(2, g.clone());
        assert_eq!(star(0, &chi).unwrap(), chi);
        let twisted = star(1, &chi).unwrap();
        let key = LabeledPartitionFn::at(2, 1, p(&[1, 1]));
        assert_eq!(twisted.value(&key), c(4));
        let mixed = LabeledPartitionFn::from_parts(vec![p(&[1]), p(&[1])]);
        assert_eq!(twisted.value(&mixed), c(-4));
        let one = star(1, &xi(1, g.clone())).unwrap();
        assert_eq!(one.value(&LabeledPartitionFn::at(2, 1, p(&[1]))), c(-2));

        let mut bare = GroupData::cyclic(2);
        bare.character_table = None;
        assert!(star(1, &xi(1, Arc::new(bare))).is_err());
    }

    #[test]
    fn vertex_operator_two_routes() {
        for g in [triv(), z2(), Arc::new(GroupData::cyclic(3))] {
            for idx in g.linear_characters().unwrap() {
                let v = g.character(idx).unwrap().to_vec();
                let a = vertex_q(&v, g.clone(), 5).unwrap();
                let b = vertex_q_exponential(&v, g.clone(), 5).unwrap();
                assert_eq!(a, b, "{} character {}", g.name, idx);
            }
        }
        let g = triv();
        let a = vertex_q(&[Cyclo::one(1)], g.clone(), 4).unwrap();
        for n in 0..=4 {
            assert_eq!(a.component(n), &xi(n as u32, g.clone()));
        }
    }

    #[test]
    fn point_dimension_series() {
        let s = dim_series_point(&GroupData::trivial(), 6);
        let got: Vec<i64> = s.integer_coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 1, 1, 2, 2, 3, 4]);
        let s = dim_series_point(&GroupData::cyclic(2), 2);
        assert_eq!(s.coeff(2), &BigRational::from_integer(3.into()));
    }

    #[test]
    fn hopf_axioms_small() {
        let g = z2();
        for n in 0..=4 {
            for rho in labeled_partitions(n, 2, PartitionKind::Odd) {
                let a = SigmaExpansion::basis(g.clone(), rho.clone());
                let d = a.coproduct();
                assert_eq!(d.coproduct_at(0), d.coproduct_at(1));
                assert_eq!(d.counit_at(0), SigmaTensor::from_expansion(&a));
                assert_eq!(d.counit_at(1), SigmaTensor::from_expansion(&a));
                let conv = d.antipode_at(0).multiply_out();
                let want = SigmaExpansion::one(g.clone()).scale(&a.counit());
                assert_eq!(conv, want);
            }
        }
    }

    #[test]
    fn char_table_trivial_degree_three() {
        let t = char_table(triv(), 3).unwrap();
        assert_eq!(t.columns, vec![single(&[3]), single(&[1, 1, 1])]);
        let xi_row = t.rows.iter().find(|r| r.name == "xi^3").unwrap();
        assert_eq!(xi_row.values, vec![c(2), c(8)]);
        let t21 = t.rows.iter().find(|r| r.name == "T^(2,1)").unwrap();
        assert_eq!(t21.values, vec![c(-2), c(4)]);
        let t0 = char_table(triv(), 0).unwrap();
        assert_eq!(t0.rows.iter().find(|r| r.name == "xi^0").unwrap().values, vec![c(1)]);
        assert_eq!(partitions(3, PartitionKind::Strict).len() + 3, t.rows.len());
        assert!(char_table(z2(), 2).unwrap().warnings.len() == 1);
    }
}

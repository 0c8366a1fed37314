//! The supersymmetric Fock space over an orbifold sector model and the
//! twisted Heisenberg superalgebra acting on it.
//!
//! The space is the free supersymmetric algebra on generators `(r, b)` with
//! `r` odd and `b` running over a graded basis of the sector space. Even
//! generators commute, odd generators anticommute and square to zero.
//! States keep their odd generators in increasing order, so every monomial has
//! one canonical form.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_rational::{BigRational, Rational64};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::partitions::{partitions, GroupData, PartitionKind};
use crate::series::PowerSeries;

/// Coefficient field for Fock space computations. Arithmetic is checked and
/// reports [`Error::Overflow`] instead of wrapping.
pub type Coeff = Rational64;

fn c_add(a: &Coeff, b: &Coeff) -> Result<Coeff> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

fn c_sub(a: &Coeff, b: &Coeff) -> Result<Coeff> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

fn c_mul(a: &Coeff, b: &Coeff) -> Result<Coeff> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

/// One basis vector of the sector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorBasisElem {
    pub class: usize,
    pub odd: bool,
    pub name: String,
}

/// Per-class graded dimensions `(d0_c, d1_c)` over a group.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorModel {
    group: Arc<GroupData>,
    dims: Vec<(u32, u32)>,
    basis: Vec<SectorBasisElem>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupRef {
    Path(String),
    Inline(serde_json::Value),
}

#[derive(Deserialize)]
struct SectorJson {
    class: String,
    d0: u32,
    d1: u32,
}

#[derive(Deserialize)]
struct ModelJson {
    group: GroupRef,
    sectors: Vec<SectorJson>,
}

impl SectorModel {
    /// Classes without an entry get `(0, 0)`.
    pub fn new(group: Arc<GroupData>, sectors: &[(usize, u32, u32)]) -> Result<Self> {
        let mut dims = vec![(0, 0); group.num_classes()];
        let mut seen = vec![false; group.num_classes()];
        for &(c, d0, d1) in sectors {
            if c >= dims.len() {
                return Err(Error::InvalidModel(format!("class index {} out of range", c)));
            }
            if seen[c] {
                return Err(Error::InvalidModel(format!(
                    "class `{}` listed twice",
                    group.classes[c].label
                )));
            }
            seen[c] = true;
            dims[c] = (d0, d1);
        }
        let mut basis = Vec::new();
        for (c, &(d0, d1)) in dims.iter().enumerate() {
            let label = &group.classes[c].label;
            for i in 0..d0 {
                basis.push(SectorBasisElem {
                    class: c,
                    odd: false,
                    name: format!("{}:e{}", label, i),
                });
            }
            for i in 0..d1 {
                basis.push(SectorBasisElem {
                    class: c,
                    odd: true,
                    name: format!("{}:o{}", label, i),
                });
            }
        }
        Ok(SectorModel { group, dims, basis })
    }

    /// A model over the trivial group with a single sector.
    pub fn point(d0: u32, d1: u32) -> Self {
        Self::new(Arc::new(GroupData::trivial()), &[(0, d0, d1)]).expect("one class")
    }

    /// Parses a model; a string `group` is a path resolved against `base`.
    pub fn from_json_str(s: &str, base: Option<&Path>) -> Result<Self> {
        let raw: ModelJson = serde_json::from_str(s)?;
        Self::from_raw(raw, base)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let raw: ModelJson = serde_json::from_str(&text).map_err(|e| Error::json_at(path, e))?;
        Self::from_raw(raw, path.parent())
    }

    fn from_raw(raw: ModelJson, base: Option<&Path>) -> Result<Self> {
        let group = match raw.group {
            GroupRef::Path(p) => {
                let p = Path::new(&p);
                match base {
                    Some(b) if p.is_relative() => GroupData::load(b.join(p))?,
                    _ => GroupData::load(p)?,
                }
            }
            GroupRef::Inline(v) => GroupData::from_json_value(v)?,
        };
        let mut sectors = Vec::new();
        for s in raw.sectors {
            sectors.push((group.class_index(&s.class)?, s.d0, s.d1));
        }
        Self::new(Arc::new(group), &sectors)
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn basis(&self) -> &[SectorBasisElem] {
        &self.basis
    }

    pub fn dims(&self) -> &[(u32, u32)] {
        &self.dims
    }

    /// `(sum_c d0_c, sum_c d1_c)`.
    pub fn total_dims(&self) -> (u32, u32) {
        self.dims
            .iter()
            .fold((0, 0), |(a, b), &(d0, d1)| (a + d0, b + d1))
    }

    pub fn sector_dim(&self) -> usize {
        self.basis.len()
    }

    fn is_odd(&self, b: usize) -> bool {
        self.basis[b].odd
    }
}

/// A generator `(r, b)`: odd degree `r`, sector basis index `b`.
pub type Generator = (u32, usize);

/// A monomial: a multiset of even generators and a strictly increasing list
/// of odd ones.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockBasisState {
    pub even: Vec<Generator>,
    pub odd: Vec<Generator>,
}

impl FockBasisState {
    pub fn vacuum() -> Self {
        Self::default()
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().chain(&self.odd).map(|g| g.0).sum()
    }

    /// `0` for even, `1` for odd.
    pub fn parity(&self) -> usize {
        self.odd.len() % 2
    }

    pub fn is_vacuum(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn display_with(&self, model: &SectorModel) -> String {
        if self.is_vacuum() {
            return "|0>".into();
        }
        let gens: Vec<String> = self
            .even
            .iter()
            .chain(&self.odd)
            .map(|&(r, b)| format!("({},{})", r, model.basis[b].name))
            .collect();
        gens.join("")
    }
}

/// Coordinates on the sector basis; also used for dual vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorVector(pub Vec<Coeff>);

/// A functional on the sector space: `<eta, b>` for each basis element `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualVector(pub Vec<Coeff>);

impl SectorVector {
    pub fn zero(dim: usize) -> Self {
        SectorVector(vec![Coeff::zero(); dim])
    }

    pub fn basis(dim: usize, b: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[b] = Coeff::one();
        v
    }
}

impl DualVector {
    pub fn pair(&self, v: &SectorVector) -> Result<Coeff> {
        if self.0.len() != v.0.len() {
            return Err(Error::DimensionMismatch(v.0.len(), self.0.len()));
        }
        self.0.iter().zip(&v.0).try_fold(Coeff::zero(), |acc, (a, b)| c_add(&acc, &c_mul(a, b)?))
    }

    /// The dual basis functional of `b`.
    pub fn basis(dim: usize, b: usize) -> Self {
        DualVector(SectorVector::basis(dim, b).0)
    }
}

/// A finitely supported combination of basis states.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<FockBasisState, Coeff>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::state(FockBasisState::vacuum())
    }

    pub fn state(s: FockBasisState) -> Self {
        let mut v = Self::zero();
        v.terms.insert(s, Coeff::one());
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockBasisState, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &FockBasisState) -> Coeff {
        self.terms.get(s).copied().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, s: FockBasisState, c: Coeff) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = c_add(o.get(), &c)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), *c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c_sub(&Coeff::zero(), c)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Coeff) -> Result<Self> {
        let mut out = Self::zero();
        if q.is_zero() {
            return Ok(out);
        }
        for (s, c) in &self.terms {
            out.terms.insert(s.clone(), c_mul(c, q)?);
        }
        Ok(out)
    }

    /// Degree of every term, if all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(FockBasisState::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn display_with(&self, model: &SectorModel) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("{}*{}", c, s.display_with(model)))
            .collect();
        items.join(" + ")
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.terms.iter().map(|(s, c)| format!("{}*{:?}", c, s)).collect();
        write!(f, "{}", items.join(" + "))
    }
}

fn require_odd(r: u32) -> Result<()> {
    if r.is_multiple_of(2) {
        return Err(Error::EvenIndex(r));
    }
    Ok(())
}

/// All generators of degree at most `n`, in canonical order.
fn generators(model: &SectorModel, n: u32, odd: bool) -> Vec<Generator> {
    let mut out = Vec::new();
    for r in (1..=n).step_by(2) {
        for b in 0..model.sector_dim() {
            if model.is_odd(b) == odd {
                out.push((r, b));
            }
        }
    }
    out
}

/// Sorted selections from `gens[from..]` of total degree `n`.
fn selections(gens: &[Generator], from: usize, n: u32, repeat: bool, cur: &mut Vec<Generator>, out: &mut Vec<Vec<Generator>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for i in from..gens.len() {
        let g = gens[i];
        if g.0 > n {
            continue;
        }
        cur.push(g);
        selections(gens, if repeat { i } else { i + 1 }, n - g.0, repeat, cur, out);
        cur.pop();
    }
}

/// Every basis state of degree `n`.
pub fn fock_basis(model: &SectorModel, n: u32) -> Vec<FockBasisState> {
    let evens = generators(model, n, false);
    let odds = generators(model, n, true);
    let mut out = Vec::new();
    for w in 0..=n {
        let mut e_sel = Vec::new();
        selections(&evens, 0, w, true, &mut Vec::new(), &mut e_sel);
        if e_sel.is_empty() {
            continue;
        }
        let mut o_sel = Vec::new();
        selections(&odds, 0, n - w, false, &mut Vec::new(), &mut o_sel);
        for e in &e_sel {
            for o in &o_sel {
                out.push(FockBasisState {
                    even: e.clone(),
                    odd: o.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// `prod_r (1 + t^{2r-1})^{d1} / (1 - t^{2r-1})^{d0}`.
pub fn dim_series(model: &SectorModel, n: usize) -> PowerSeries {
    let (d0, d1) = model.total_dims();
    PowerSeries::odd_euler_product(d0 as i64, n)
        .mul(&PowerSeries::product_over(2, 1, 1, d1 as i64, n))
        .expect("same truncation")
}

/// Left multiplication by the generator `g`, with the reordering sign.
fn multiply_generator(model: &SectorModel, g: Generator, s: &FockBasisState) -> Option<(FockBasisState, bool)> {
    let mut out = s.clone();
    if model.is_odd(g.1) {
        match out.odd.binary_search(&g) {
            Ok(_) => None,
            Err(pos) => {
                out.odd.insert(pos, g);
                Some((out, pos % 2 == 1))
            }
        }
    } else {
        let pos = out.even.partition_point(|x| *x <= g);
        out.even.insert(pos, g);
        Some((out, false))
    }
}

fn check_dim(model: &SectorModel, len: usize) -> Result<()> {
    if len != model.sector_dim() {
        return Err(Error::DimensionMismatch(len, model.sector_dim()));
    }
    Ok(())
}

/// `a_r(V)`: `(r/2)` times left multiplication by `sum_b V_b (r, b)`.
pub fn a_create(model: &SectorModel, r: u32, v: &SectorVector, x: &FockVector) -> Result<FockVector> {
    require_odd(r)?;
    check_dim(model, v.0.len())?;
    let half_r = Coeff::new(r as i64, 2);
    let mut out = FockVector::zero();
    for (b, vb) in v.0.iter().enumerate() {
        if vb.is_zero() {
            continue;
        }
        let w = c_mul(vb, &half_r)?;
        for (s, c) in &x.terms {
            if let Some((t, neg)) = multiply_generator(model, (r, b), s) {
                let c = c_mul(c, &w)?;
                out.add_term(t, if neg { -c } else { c })?;
            }
        }
    }
    Ok(out)
}

/// `a_{-r}(eta)`: the superderivation sending `(r, b)` to `<eta, b>` and every
/// other generator to zero.
pub fn a_annihilate(model: &SectorModel, r: u32, eta: &DualVector, x: &FockVector) -> Result<FockVector> {
    require_odd(r)?;
    check_dim(model, eta.0.len())?;
    let mut out = FockVector::zero();
    for (s, c) in &x.terms {
        // even generators: derivative of a monomial power, no sign
        let mut i = 0;
        while i < s.even.len() {
            let g = s.even[i];
            let mult = s.even[i..].iter().take_while(|&&h| h == g).count();
            if g.0 == r && !eta.0[g.1].is_zero() {
                let mut t = s.clone();
                t.even.remove(i);
                out.add_term(t, c_mul(&c_mul(c, &eta.0[g.1])?, &Coeff::from_integer(mult as i64))?)?;
            }
            i += mult;
        }
        // odd generators: sign from the odd generators passed over
        for (pos, &g) in s.odd.iter().enumerate() {
            if g.0 == r && !eta.0[g.1].is_zero() {
                let mut t = s.clone();
                t.odd.remove(pos);
                let v = c_mul(c, &eta.0[g.1])?;
                out.add_term(t, if pos % 2 == 1 { -v } else { v })?;
            }
        }
    }
    Ok(out)
}

/// `varpi_n(V) = sum_b V_b (n, b)`.
pub fn varpi(model: &SectorModel, n: u32, v: &SectorVector) -> Result<FockVector> {
    require_odd(n)?;
    check_dim(model, v.0.len())?;
    let mut out = FockVector::zero();
    for (b, vb) in v.0.iter().enumerate() {
        let s = if model.is_odd(b) {
            FockBasisState { even: vec![], odd: vec![(n, b)] }
        } else {
            FockBasisState { even: vec![(n, b)], odd: vec![] }
        };
        out.add_term(s, *vb)?;
    }
    Ok(out)
}

/// Coefficients of the single-generator states `(n, b)`; products are dropped.
pub fn ch_n(model: &SectorModel, n: u32, x: &FockVector) -> Result<SectorVector> {
    require_odd(n)?;
    let mut out = SectorVector::zero(model.sector_dim());
    for (s, c) in &x.terms {
        let single = match (s.even.as_slice(), s.odd.as_slice()) {
            ([g], []) | ([], [g]) => Some(*g),
            _ => None,
        };
        if let Some((r, b)) = single {
            if r == n {
                out.0[b] = *c;
            }
        }
    }
    Ok(out)
}

/// `prod_r (1 - t^{2r-1})^{-e}`.
pub fn euler_series(e: i64, n: usize) -> PowerSeries {
    PowerSeries::odd_euler_product(e, n)
}

/// `prod_r (1 - t^{2r-1})^{-e} + prod_r (1 + t^{2r-1})^e * (prod_r (1 + t^{2r})^e - prod_r (1 - t^{2r})^e) / 2`.
pub fn euler_s_series(e: i64, n: usize) -> PowerSeries {
    let even_plus = PowerSeries::product_over(2, 0, 1, e, n);
    let even_minus = PowerSeries::product_over(2, 0, -1, e, n);
    let half = BigRational::new(1.into(), 2.into());
    let correction = PowerSeries::product_over(2, 1, 1, e, n)
        .mul(&even_plus.sub(&even_minus).expect("same truncation").scale(&half))
        .expect("same truncation");
    euler_series(e, n).add(&correction).expect("same truncation")
}

/// `sum_n (dim even - dim odd) t^n` by enumeration.
pub fn signed_dims(model: &SectorModel, n: usize) -> Vec<i64> {
    (0..=n as u32)
        .map(|d| {
            fock_basis(model, d)
                .iter()
                .map(|s| if s.parity() == 0 { 1 } else { -1 })
                .sum()
        })
        .collect()
}

/// Number of irreducible spin modules of the double cover of `S_n`: strict
/// partitions of `n` count once when `n - l` is even and twice when it is odd.
pub fn spin_module_count(n: u32) -> usize {
    partitions(n, PartitionKind::Strict)
        .iter()
        .map(|p| if (n as usize - p.length()).is_multiple_of(2) { 1 } else { 2 })
        .sum()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Coeff {
    let num: i64 = rng.gen_range(-6..=6);
    let den: i64 = rng.gen_range(1..=4);
    Coeff::new(num, den)
}

/// A random vector supported on basis elements of one parity; `None` when
/// that parity is absent.
fn random_homogeneous(model: &SectorModel, odd: bool, rng: &mut ChaCha8Rng) -> Vec<Coeff> {
    model
        .basis
        .iter()
        .map(|b| if b.odd == odd { random_rational(rng) } else { Coeff::zero() })
        .collect()
}

fn random_parity(model: &SectorModel, rng: &mut ChaCha8Rng) -> bool {
    let (d0, d1) = model.total_dims();
    match (d0 > 0, d1 > 0) {
        (true, true) => rng.gen_bool(0.5),
        (false, true) => true,
        _ => false,
    }
}

/// One sampled quadruple of operator arguments with their parities.
#[derive(Clone, Debug)]
pub struct HeisenbergSample {
    pub eta: DualVector,
    pub eta_odd: bool,
    pub eta2: DualVector,
    pub eta2_odd: bool,
    pub v: SectorVector,
    pub v_odd: bool,
    pub w: SectorVector,
    pub w_odd: bool,
}

impl HeisenbergSample {
    pub fn random(model: &SectorModel, rng: &mut ChaCha8Rng) -> Self {
        let mut draw = || {
            let odd = random_parity(model, rng);
            (random_homogeneous(model, odd, rng), odd)
        };
        let (eta, eta_odd) = draw();
        let (eta2, eta2_odd) = draw();
        let (v, v_odd) = draw();
        let (w, w_odd) = draw();
        HeisenbergSample {
            eta: DualVector(eta),
            eta_odd,
            eta2: DualVector(eta2),
            eta2_odd,
            v: SectorVector(v),
            v_odd,
            w: SectorVector(w),
            w_odd,
        }
    }
}

/// Result of a Heisenberg relation sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergReport {
    pub states: usize,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl HeisenbergReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn bracket(ab: &FockVector, ba: &FockVector, both_odd: bool) -> Result<FockVector> {
    if both_odd {
        ab.add(ba)
    } else {
        ab.sub(ba)
    }
}

fn check_state(
    model: &SectorModel,
    sample: &HeisenbergSample,
    s: &FockBasisState,
    max_index: u32,
) -> Result<(usize, Option<String>)> {
    let x = FockVector::state(s.clone());
    let mut checks = 0;
    let show = |what: &str, m: u32, l: u32, got: &FockVector, want: &FockVector| {
        format!(
            "{} with m={}, l={} on {}: got {}, expected {}",
            what,
            m,
            l,
            s.display_with(model),
            got.display_with(model),
            want.display_with(model)
        )
    };
    let indices: Vec<u32> = (1..=max_index).step_by(2).collect();
    let mut create_v = Vec::new();
    let mut create_w = Vec::new();
    let mut kill_eta = Vec::new();
    let mut kill_eta2 = Vec::new();
    for &r in &indices {
        create_v.push(a_create(model, r, &sample.v, &x)?);
        create_w.push(a_create(model, r, &sample.w, &x)?);
        kill_eta.push(a_annihilate(model, r, &sample.eta, &x)?);
        kill_eta2.push(a_annihilate(model, r, &sample.eta2, &x)?);
    }
    let pairing = sample.eta.pair(&sample.v)?;
    for (i, &m) in indices.iter().enumerate() {
        for (j, &l) in indices.iter().enumerate() {
            let ab = a_annihilate(model, m, &sample.eta, &create_v[j])?;
            let ba = a_create(model, l, &sample.v, &kill_eta[i])?;
            let got = bracket(&ab, &ba, sample.eta_odd && sample.v_odd)?;
            let want = if m == l {
                x.scale(&c_mul(&pairing, &Coeff::new(l as i64, 2))?)?
            } else {
                FockVector::zero()
            };
            checks += 1;
            if got != want {
                return Ok((checks, Some(show("[a_-m(eta), a_l(V)]", m, l, &got, &want))));
            }

            let ab = a_create(model, m, &sample.w, &create_v[j])?;
            let ba = a_create(model, l, &sample.v, &create_w[i])?;
            let got = bracket(&ab, &ba, sample.w_odd && sample.v_odd)?;
            checks += 1;
            if !got.is_zero() {
                return Ok((checks, Some(show("[a_m(W), a_l(V)]", m, l, &got, &FockVector::zero()))));
            }

            let ab = a_annihilate(model, m, &sample.eta2, &kill_eta[j])?;
            let ba = a_annihilate(model, l, &sample.eta, &kill_eta2[i])?;
            let got = bracket(&ab, &ba, sample.eta2_odd && sample.eta_odd)?;
            checks += 1;
            if !got.is_zero() {
                return Ok((checks, Some(show("[a_-m(eta'), a_-l(eta)]", m, l, &got, &FockVector::zero()))));
            }
        }
    }
    Ok((checks, None))
}

/// Checks the three bracket relations on every basis state of degree at most
/// `max_degree`, for operator indices up to `max_degree` (at least 1), with
/// `samples` random argument sets drawn from `seed`.
pub fn commutator_check(model: &SectorModel, max_degree: u32, samples: usize, seed: u64) -> Result<HeisenbergReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<HeisenbergSample> = (0..samples).map(|_| HeisenbergSample::random(model, &mut rng)).collect();
    let states: Vec<FockBasisState> = (0..=max_degree).flat_map(|d| fock_basis(model, d)).collect();
    let max_index = max_degree.max(1);
    let jobs: Vec<(usize, usize)> = (0..draws.len())
        .flat_map(|i| (0..states.len()).map(move |j| (i, j)))
        .collect();
    let run = |&(i, j): &(usize, usize)| check_state(model, &draws[i], &states[j], max_index);
    #[cfg(feature = "parallel")]
    let results: Vec<Result<(usize, Option<String>)>> = {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<(usize, Option<String>)>> = jobs.iter().map(run).collect();
    let mut report = HeisenbergReport {
        states: states.len(),
        checks: 0,
        counterexample: None,
    };
    for r in results {
        let (n, bad) = r?;
        report.checks += n;
        if report.counterexample.is_none() {
            report.counterexample = bad;
        }
    }
    Ok(report)
}

/// Walks `x` down to the vacuum by applying dual-basis annihilators, taking
/// at each step the first one that does not kill the current vector.
/// Returns the final vacuum coefficient, or `None` if the walk got stuck.
pub fn reduce_to_vacuum(model: &SectorModel, x: &FockVector) -> Result<Option<Coeff>> {
    let mut cur = x.clone();
    loop {
        if cur.is_zero() {
            return Ok(None);
        }
        let Some(deg) = cur.homogeneous_degree() else {
            return Err(Error::InvalidModel("vector is not homogeneous".into()));
        };
        if deg == 0 {
            return Ok(Some(cur.coeff(&FockBasisState::vacuum())));
        }
        let mut next = None;
        'search: for r in (1..=deg).step_by(2) {
            for b in 0..model.sector_dim() {
                let y = a_annihilate(model, r, &DualVector::basis(model.sector_dim(), b), &cur)?;
                if !y.is_zero() {
                    next = Some(y);
                    break 'search;
                }
            }
        }
        match next {
            Some(y) => cur = y,
            None => return Ok(None),
        }
    }
}

/// Random combination of the degree-`n` basis states.
pub fn random_fock_vector(model: &SectorModel, n: u32, rng: &mut ChaCha8Rng) -> FockVector {
    let mut out = FockVector::zero();
    for s in fock_basis(model, n) {
        let c = random_rational(rng);
        if !c.is_zero() {
            out.terms.insert(s, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    fn r(n: i64, d: i64) -> Coeff {
        Coeff::new(n, d)
    }

    #[test]
    fn basis_examples() {
        let m = SectorModel::point(1, 0);
        let b3 = fock_basis(&m, 3);
        assert_eq!(b3.len(), 2);
        assert!(b3.contains(&FockBasisState { even: vec![(3, 0)], odd: vec![] }));
        assert!(b3.contains(&FockBasisState { even: vec![(1, 0); 3], odd: vec![] }));
        assert!(fock_basis(&SectorModel::point(0, 1), 2).is_empty());
        assert_eq!(fock_basis(&m, 0), vec![FockBasisState::vacuum()]);
    }

    #[test]
    fn dim_series_examples() {
        assert_eq!(ints(&dim_series(&SectorModel::point(1, 0), 6)), vec![1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(ints(&dim_series(&SectorModel::point(1, 1), 3)), vec![1, 2, 2, 4]);
        assert_eq!(ints(&dim_series(&SectorModel::point(0, 0), 3)), vec![1, 0, 0, 0]);
        for (d0, d1) in [(1, 0), (0, 1), (2, 1), (3, 2)] {
            let m = SectorModel::point(d0, d1);
            let s = ints(&dim_series(&m, 8));
            for n in 0..=8 {
                assert_eq!(fock_basis(&m, n).len() as i64, s[n as usize], "({},{}) n={}", d0, d1, n);
            }
        }
    }

    #[test]
    fn operator_examples() {
        let m = SectorModel::point(1, 1);
        let b = SectorVector::basis(2, 0);
        let x = a_create(&m, 3, &b, &FockVector::vacuum()).unwrap();
        let s = FockBasisState { even: vec![(3, 0)], odd: vec![] };
        assert_eq!(x, FockVector::state(s).scale(&r(3, 2)).unwrap());
        let eta = DualVector(vec![r(5, 1), r(7, 1)]);
        let y = a_annihilate(&m, 3, &eta, &x).unwrap();
        assert_eq!(y, FockVector::vacuum().scale(&r(15, 2)).unwrap());
        assert!(a_annihilate(&m, 1, &eta, &FockVector::vacuum()).unwrap().is_zero());

        let ob = SectorVector::basis(2, 1);
        let once = a_create(&m, 1, &ob, &FockVector::vacuum()).unwrap();
        assert!(a_create(&m, 1, &ob, &once).unwrap().is_zero());
        assert!(a_create(&m, 2, &ob, &once).is_err());
        assert!(a_annihilate(&m, 4, &eta, &once).is_err());
    }

    #[test]
    fn odd_generators_anticommute() {
        let m = SectorModel::point(0, 2);
        let (u, v) = (SectorVector::basis(2, 0), SectorVector::basis(2, 1));
        let vac = FockVector::vacuum();
        let uv = a_create(&m, 1, &u, &a_create(&m, 1, &v, &vac).unwrap()).unwrap();
        let vu = a_create(&m, 1, &v, &a_create(&m, 1, &u, &vac).unwrap()).unwrap();
        assert_eq!(uv, vu.scale(&r(-1, 1)).unwrap());
        // removing the second odd generator passes over the first
        let d = a_annihilate(&m, 1, &DualVector::basis(2, 1), &uv).unwrap();
        let single_u = a_create(&m, 1, &u, &vac).unwrap();
        assert_eq!(d, single_u.scale(&r(-1, 2)).unwrap());
    }

    #[test]
    fn varpi_and_ch() {
        let m = SectorModel::point(2, 1);
        let v = SectorVector(vec![r(1, 1), r(-2, 3), r(4, 1)]);
        assert_eq!(ch_n(&m, 3, &varpi(&m, 3, &v).unwrap()).unwrap(), v);
        let cube = FockVector::state(FockBasisState { even: vec![(1, 0); 3], odd: vec![] });
        assert_eq!(ch_n(&m, 3, &cube).unwrap(), SectorVector::zero(3));
        let b = SectorVector::basis(3, 0);
        let x = a_create(&m, 1, &b, &FockVector::vacuum()).unwrap();
        let mut half = SectorVector::zero(3);
        half.0[0] = r(1, 2);
        assert_eq!(ch_n(&m, 1, &x).unwrap(), half);
        assert!(varpi(&m, 2, &v).is_err());
    }

    #[test]
    fn heisenberg_small() {
        for (d0, d1) in [(1, 0), (0, 1), (1, 1), (2, 2)] {
            let rep = commutator_check(&SectorModel::point(d0, d1), 4, 3, 7).unwrap();
            assert!(rep.passed(), "{:?}", rep.counterexample);
            assert!(rep.checks > 0);
        }
        let z2 = Arc::new(GroupData::cyclic(2));
        let m = SectorModel::new(z2, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(commutator_check(&m, 4, 3, 11).unwrap().passed());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(ints(&euler_series(2, 3)), vec![1, 2, 3, 6]);
        assert_eq!(ints(&euler_s_series(1, 4)), vec![1, 1, 2, 3, 3]);
        assert_eq!(ints(&euler_series(0, 3)), vec![1, 0, 0, 0]);
        for n in 0..=12u32 {
            assert_eq!(ints(&euler_s_series(1, 12))[n as usize], spin_module_count(n) as i64);
        }
        let m = SectorModel::point(1, 2);
        assert_eq!(signed_dims(&m, 6), ints(&euler_series(-1, 6)));
    }

    #[test]
    fn cyclic_walk() {
        let m = SectorModel::point(1, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..=5 {
            for s in fock_basis(&m, n) {
                let c = reduce_to_vacuum(&m, &FockVector::state(s)).unwrap();
                assert!(matches!(c, Some(ref v) if !v.is_zero()));
            }
            let x = random_fock_vector(&m, n, &mut rng);
            if !x.is_zero() {
                assert!(reduce_to_vacuum(&m, &x).unwrap().is_some_and(|v| !v.is_zero()));
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let m = SectorModel::point(1, 0);
        let big = SectorVector(vec![Coeff::from_integer(i64::MAX / 2)]);
        let x = a_create(&m, 1, &big, &FockVector::vacuum()).unwrap();
        assert!(matches!(a_create(&m, 3, &big, &x), Err(Error::Overflow(_))));
    }

    #[test]
    fn model_json() {
        let text = r#"{"group": {"name": "Z2", "order": 2,
            "classes": [{"label": "c0", "centralizer_order": 2}, {"label": "c1", "centralizer_order": 2}]},
            "sectors": [{"class": "c1", "d0": 2, "d1": 1}]}"#;
        let m = SectorModel::from_json_str(text, None).unwrap();
        assert_eq!(m.dims(), &[(0, 0), (2, 1)]);
        assert_eq!(m.basis()[2].name, "c1:o0");
        let bad = text.replace("\"c1\", \"d0\"", "\"c9\", \"d0\"");
        assert!(matches!(SectorModel::from_json_str(&bad, None), Err(Error::UnknownLabel(_))));
    }
}

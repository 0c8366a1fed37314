//! Integer partitions, partition-valued functions on a finite label set,
//! and the centralizer orders `z_lambda` and `Z_rho`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts first; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// `part -> multiplicity`, the `(1^{m_1} 2^{m_2} ...)` form.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn from_multiplicities(m: &BTreeMap<u32, u32>) -> Self {
        let mut parts = Vec::new();
        for (&p, &k) in m.iter().rev() {
            parts.extend(std::iter::repeat_n(p, k as usize));
        }
        Partition::from_unsorted(parts)
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.length() + other.length());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    pub fn require_odd(&self) -> Result<()> {
        match self.parts.iter().find(|p| *p % 2 == 0) {
            Some(&p) => Err(Error::EvenPart(p)),
            None => Ok(()),
        }
    }

    pub fn require_strict(&self) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::NotStrict(self.to_string()))
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(Vec::new()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Which partitions to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    All,
    Strict,
    Odd,
}

/// All partitions of `n` of the given kind, in reverse-lexicographic order.
pub fn partitions(n: u32, kind: PartitionKind) -> Vec<Partition> {
    fn go(rem: u32, max: u32, kind: PartitionKind, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            if kind == PartitionKind::Odd && p % 2 == 0 {
                continue;
            }
            cur.push(p);
            let next_max = if kind == PartitionKind::Strict { p - 1 } else { p };
            go(rem - p, next_max, kind, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, kind, &mut Vec::new(), &mut out);
    out
}

/// A partition-valued function on labels `0..num_labels`.
///
/// Every label carries a partition (possibly empty), so the representation
/// is canonical and can be used as a map key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledPartitionFn {
    assignment: Vec<Partition>,
}

impl LabeledPartitionFn {
    pub fn empty(num_labels: usize) -> Self {
        LabeledPartitionFn {
            assignment: vec![Partition::empty(); num_labels],
        }
    }

    pub fn from_parts(assignment: Vec<Partition>) -> Self {
        LabeledPartitionFn { assignment }
    }

    /// Single-label function, the uncolored case.
    pub fn single(p: Partition) -> Self {
        LabeledPartitionFn {
            assignment: vec![p],
        }
    }

    /// The function taking `p` at `label` and the empty partition elsewhere.
    pub fn at(num_labels: usize, label: usize, p: Partition) -> Self {
        let mut f = Self::empty(num_labels);
        f.assignment[label] = p;
        f
    }

    /// Builds from `(label name, partition)` pairs against a group's class labels.
    pub fn from_named(group: &GroupData, entries: &[(&str, Partition)]) -> Result<Self> {
        let mut f = Self::empty(group.num_classes());
        for (name, p) in entries {
            let idx = group.class_index(name)?;
            f.assignment[idx] = f.assignment[idx].union(p);
        }
        Ok(f)
    }

    pub fn num_labels(&self) -> usize {
        self.assignment.len()
    }

    pub fn get(&self, label: usize) -> &Partition {
        &self.assignment[label]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.assignment.iter().enumerate()
    }

    pub fn total_weight(&self) -> u32 {
        self.assignment.iter().map(Partition::weight).sum()
    }

    pub fn total_length(&self) -> usize {
        self.assignment.iter().map(Partition::length).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.iter().all(Partition::is_empty)
    }

    pub fn is_odd(&self) -> bool {
        self.assignment.iter().all(Partition::is_odd)
    }

    pub fn is_strict(&self) -> bool {
        self.assignment.iter().all(Partition::is_strict)
    }

    pub fn require_odd(&self) -> Result<()> {
        self.assignment.iter().try_for_each(Partition::require_odd)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.num_labels() != other.num_labels() {
            return Err(Error::LabelMismatch(self.num_labels(), other.num_labels()));
        }
        Ok(LabeledPartitionFn {
            assignment: self
                .assignment
                .iter()
                .zip(&other.assignment)
                .map(|(a, b)| a.union(b))
                .collect(),
        })
    }

    /// `(label, part) -> multiplicity` over all labels.
    pub fn multiplicities(&self) -> BTreeMap<(usize, u32), u32> {
        let mut m = BTreeMap::new();
        for (c, p) in self.entries() {
            for (part, k) in p.multiplicities() {
                m.insert((c, part), k);
            }
        }
        m
    }

    pub fn from_multiplicities(num_labels: usize, m: &BTreeMap<(usize, u32), u32>) -> Self {
        let mut per: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); num_labels];
        for (&(c, part), &k) in m {
            if k > 0 {
                per[c].insert(part, k);
            }
        }
        LabeledPartitionFn {
            assignment: per.iter().map(Partition::from_multiplicities).collect(),
        }
    }

    /// Renders with the given label names, omitting empty entries.
    pub fn display_with(&self, labels: &[String]) -> String {
        let items: Vec<String> = self
            .entries()
            .filter(|(_, p)| !p.is_empty())
            .map(|(c, p)| format!("{}:{}", labels.get(c).map(String::as_str).unwrap_or("?"), p))
            .collect();
        if items.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", items.join(" "))
        }
    }
}

impl fmt::Display for LabeledPartitionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num_labels() == 1 {
            return write!(f, "{}", self.assignment[0]);
        }
        let names: Vec<String> = (0..self.num_labels()).map(|i| format!("c{}", i)).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// Partition-valued functions on `num_labels` labels with total weight `n`.
///
/// Order: the weight on label 0 decreases first, then label 1, and so on;
/// within one label partitions come in reverse-lexicographic order.
pub fn labeled_partitions(n: u32, num_labels: usize, kind: PartitionKind) -> Vec<LabeledPartitionFn> {
    fn go(
        rem: u32,
        label: usize,
        num_labels: usize,
        kind: PartitionKind,
        cur: &mut Vec<Partition>,
        out: &mut Vec<LabeledPartitionFn>,
    ) {
        if label + 1 == num_labels {
            for p in partitions(rem, kind) {
                cur.push(p);
                out.push(LabeledPartitionFn {
                    assignment: cur.clone(),
                });
                cur.pop();
            }
            return;
        }
        for w in (0..=rem).rev() {
            for p in partitions(w, kind) {
                cur.push(p);
                go(rem - w, label + 1, num_labels, kind, cur, out);
                cur.pop();
            }
        }
    }
    if num_labels == 0 {
        return if n == 0 {
            vec![LabeledPartitionFn::empty(0)]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    go(n, 0, num_labels, kind, &mut Vec::new(), &mut out);
    out
}

/// `(|OP_n(L)|, |SP_n(L)|)` by enumeration.
pub fn count_identity_check(n: u32, num_labels: usize) -> (usize, usize) {
    (
        labeled_partitions(n, num_labels, PartitionKind::Odd).len(),
        labeled_partitions(n, num_labels, PartitionKind::Strict).len(),
    )
}

/// Strict partition-valued functions split by the parity of their length:
/// `(|SP_n^+|, |SP_n^-|)`.
pub fn strict_parity_counts(n: u32, num_labels: usize) -> (usize, usize) {
    let all = labeled_partitions(n, num_labels, PartitionKind::Strict);
    let odd = all.iter().filter(|r| r.total_length() % 2 == 1).count();
    (all.len() - odd, odd)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> BigUint {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * BigUint::from(i).pow(m) * factorial(m)
        })
}

/// `Z_rho = 2^{l(rho)} prod_c z_{rho(c)} zeta_c^{l(rho(c))}`.
pub fn big_z_of(rho: &LabeledPartitionFn, group: &GroupData) -> Result<BigUint> {
    if rho.num_labels() > group.num_classes() {
        return Err(Error::UnknownLabel(format!("#{}", group.num_classes())));
    }
    if rho.num_labels() < group.num_classes() {
        return Err(Error::LabelMismatch(rho.num_labels(), group.num_classes()));
    }
    let mut z = BigUint::one() << rho.total_length();
    for (c, p) in rho.entries() {
        let zeta = BigUint::from(group.classes[c].centralizer_order);
        z *= z_of(p) * zeta.pow(p.length() as u32);
    }
    Ok(z)
}

/// One conjugacy class of the base group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub label: String,
    pub centralizer_order: u64,
}

#[derive(Deserialize, Serialize)]
struct GroupDataJson {
    name: String,
    order: u64,
    classes: Vec<ClassInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    character_table: Option<Vec<Vec<String>>>,
}

/// A finite group known only through its class data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub name: String,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    /// Rows are irreducible characters, columns follow `classes`.
    pub character_table: Option<Vec<Vec<Cyclo>>>,
}

impl GroupData {
    pub fn trivial() -> Self {
        GroupData {
            name: "trivial".into(),
            order: 1,
            classes: vec![ClassInfo {
                label: "c0".into(),
                centralizer_order: 1,
            }],
            character_table: Some(vec![vec![Cyclo::one(1)]]),
        }
    }

    /// The cyclic group of order `k` with its full character table.
    pub fn cyclic(k: u32) -> Self {
        let classes = (0..k)
            .map(|i| ClassInfo {
                label: format!("c{}", i),
                centralizer_order: k as u64,
            })
            .collect();
        let table = (0..k)
            .map(|i| (0..k).map(|j| Cyclo::root_of_unity(k, i * j)).collect())
            .collect();
        GroupData {
            name: format!("Z{}", k),
            order: k as u64,
            classes,
            character_table: Some(table),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GroupDataJson = serde_json::from_str(s)?;
        Self::from_raw(raw)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let raw: GroupDataJson = serde_json::from_value(v)?;
        Self::from_raw(raw)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let raw: GroupDataJson =
            serde_json::from_str(&text).map_err(|e| Error::json_at(path, e))?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: GroupDataJson) -> Result<Self> {
        let character_table = match raw.character_table {
            None => None,
            Some(rows) => Some(
                rows.iter()
                    .map(|row| row.iter().map(|s| Cyclo::parse(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let g = GroupData {
            name: raw.name,
            order: raw.order,
            classes: raw.classes,
            character_table,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = GroupDataJson {
            name: self.name.clone(),
            order: self.order,
            classes: self.classes.clone(),
            character_table: self
                .character_table
                .as_ref()
                .map(|t| t.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()),
        };
        serde_json::to_value(raw).expect("group data serializes")
    }

    /// Checks the class equation and, when present, row orthogonality of the table.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGroup(format!("{}: {}", self.name, m)));
        if self.order == 0 || self.classes.is_empty() {
            return bad("empty group".into());
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut total = BigRational::zero();
        for c in &self.classes {
            if !seen.insert(&c.label) {
                return bad(format!("duplicate class label `{}`", c.label));
            }
            if c.centralizer_order == 0 || !self.order.is_multiple_of(c.centralizer_order) {
                return bad(format!(
                    "centralizer order {} of `{}` does not divide {}",
                    c.centralizer_order, c.label, self.order
                ));
            }
            total += BigRational::new(BigInt::from(self.order), BigInt::from(c.centralizer_order));
        }
        if total != BigRational::from_integer(BigInt::from(self.order)) {
            return bad(format!("class sizes sum to {} instead of {}", total, self.order));
        }
        if let Some(table) = &self.character_table {
            if table.len() != self.classes.len() {
                return bad(format!(
                    "character table has {} rows for {} classes",
                    table.len(),
                    self.classes.len()
                ));
            }
            if let Some(row) = table.iter().find(|r| r.len() != self.classes.len()) {
                return bad(format!("character table row of length {}", row.len()));
            }
            for i in 0..table.len() {
                for j in 0..table.len() {
                    let ip = self.char_inner(&table[i], &table[j]);
                    let expected = Cyclo::from_int(1, (i == j) as i64);
                    if ip != expected {
                        return bad(format!("rows {} and {} have inner product {}", i, j, ip));
                    }
                }
            }
        }
        Ok(())
    }

    /// `sum_c zeta_c^{-1} a(c) conj(b(c))`.
    pub fn char_inner(&self, a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero(1);
        for ((c, x), y) in self.classes.iter().zip(a).zip(b) {
            let w = BigRational::new(BigInt::one(), BigInt::from(c.centralizer_order));
            acc = acc.add(&x.mul(&y.conj()).scale(&w));
        }
        acc
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    pub fn class_index(&self, label: &str) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn centralizer(&self, class: usize) -> u64 {
        self.classes[class].centralizer_order
    }

    /// Character `index` of the table, or an error if there is no table.
    pub fn character(&self, index: usize) -> Result<&[Cyclo]> {
        let table = self
            .character_table
            .as_ref()
            .ok_or_else(|| Error::MissingCharacterTable(self.name.clone()))?;
        table
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownCharacter(index))
    }

    /// One-dimensional characters (value 1 at the identity class 0).
    pub fn linear_characters(&self) -> Result<Vec<usize>> {
        let table = self
            .character_table
            .as_ref()
            .ok_or_else(|| Error::MissingCharacterTable(self.name.clone()))?;
        Ok((0..table.len())
            .filter(|&i| table[i][0] == Cyclo::one(1))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(p(&[3, 2]).require_odd().is_err());
        assert!(p(&[2, 2]).require_strict().is_err());
    }

    #[test]
    fn strict_partitions_of_five() {
        assert_eq!(
            partitions(5, PartitionKind::Strict),
            vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]
        );
        assert_eq!(
            partitions(5, PartitionKind::Odd),
            vec![p(&[5]), p(&[3, 1, 1]), p(&[1, 1, 1, 1, 1])]
        );
        assert_eq!(partitions(0, PartitionKind::Odd), vec![Partition::empty()]);
    }

    #[test]
    fn two_labels_weight_two() {
        let got = labeled_partitions(2, 2, PartitionKind::Odd);
        let want = vec![
            LabeledPartitionFn::from_parts(vec![p(&[1, 1]), Partition::empty()]),
            LabeledPartitionFn::from_parts(vec![p(&[1]), p(&[1])]),
            LabeledPartitionFn::from_parts(vec![Partition::empty(), p(&[1, 1])]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn count_identity_examples() {
        assert_eq!(count_identity_check(6, 1), (4, 4));
        assert_eq!(count_identity_check(0, 3), (1, 1));
        assert_eq!(count_identity_check(8, 1), (6, 6));
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(z_of(&p(&[2, 1, 1])), BigUint::from(4u32));
        assert_eq!(z_of(&Partition::empty()), BigUint::one());
        assert_eq!(z_of(&p(&[3])), BigUint::from(3u32));

        let z2 = GroupData::cyclic(2);
        let rho = LabeledPartitionFn::from_named(&z2, &[("c0", p(&[1])), ("c1", p(&[3]))]).unwrap();
        assert_eq!(big_z_of(&rho, &z2).unwrap(), BigUint::from(48u32));

        let triv = GroupData::trivial();
        let rho = LabeledPartitionFn::single(p(&[1, 1, 1]));
        assert_eq!(big_z_of(&rho, &triv).unwrap(), BigUint::from(48u32));
        assert_eq!(big_z_of(&LabeledPartitionFn::empty(1), &triv).unwrap(), BigUint::one());
    }

    #[test]
    fn unknown_label_is_named() {
        let z2 = GroupData::cyclic(2);
        let err = LabeledPartitionFn::from_named(&z2, &[("c7", p(&[1]))]).unwrap_err();
        assert!(err.to_string().contains("c7"));
        let three = LabeledPartitionFn::empty(3);
        assert!(big_z_of(&three, &z2).is_err());
    }

    #[test]
    fn multiplicity_round_trip() {
        let lam = p(&[5, 3, 3, 1, 1, 1]);
        assert_eq!(Partition::from_multiplicities(&lam.multiplicities()), lam);
        let rho = LabeledPartitionFn::from_parts(vec![p(&[3, 1]), Partition::empty(), p(&[1, 1])]);
        assert_eq!(LabeledPartitionFn::from_multiplicities(3, &rho.multiplicities()), rho);
    }

    #[test]
    fn group_validation() {
        assert!(GroupData::cyclic(3).validate().is_ok());
        let mut g = GroupData::cyclic(2);
        g.classes[1].centralizer_order = 1;
        assert!(g.validate().is_err());
        let mut g = GroupData::cyclic(3);
        g.character_table.as_mut().unwrap()[1][1] = Cyclo::one(1);
        assert!(g.validate().is_err());
    }

    #[test]
    fn parse_partition() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
    }
}

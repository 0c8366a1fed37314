//! Registry of identity checks, grouped into suites, with text and JSON
//! reports. Every check is exact.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclo::Cyclo;
use crate::error::Result;
use crate::fock::{
    ch_n, commutator_check, dim_series, euler_s_series, euler_series, fock_basis, random_fock_vector,
    reduce_to_vacuum, signed_dims, spin_module_count, varpi, FockVector, SectorModel, SectorVector,
};
use crate::lambdaops::{adams, q_identities_check, random_virtual, trace_dimension_sum};
use crate::linalg;
use crate::partitions::{
    big_z_of, count_identity_check, labeled_partitions, partitions, strict_parity_counts, GroupData,
    PartitionKind,
};
use crate::spinchar::{
    dim_series_point, irreducible_char, sigma_rho, star_values, vertex_q, vertex_q_exponential, xi,
    SigmaExpansion, SigmaTensor,
};
use crate::symfunc::{inner, omega_dim_series, p_basis, q_exponent, q_series, q_series_colored, OmegaElem, Q_in_p};

/// Inputs shared by all checks.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub group: Arc<GroupData>,
    pub model: SectorModel,
    /// Degree bound for enumerations and series.
    pub n: u32,
    /// Degree bound for operator identities on the Fock space.
    pub degree: u32,
    pub seed: u64,
    /// Random samples per randomized check.
    pub samples: usize,
    /// Line variables, positive and negative lines for the Q-λ checks.
    pub vars: usize,
    pub lines: usize,
    pub neg: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            group: Arc::new(GroupData::trivial()),
            model: SectorModel::point(1, 1),
            n: 8,
            degree: 5,
            seed: 0,
            samples: 5,
            vars: 3,
            lines: 4,
            neg: 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub id: &'static str,
    pub identity: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("seed {}\n", self.seed);
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out += &format!("{} {}.{}: {} [{}]\n", tag, r.suite, r.id, r.identity, r.detail);
        }
        let fails = self.results.iter().filter(|r| r.status == Status::Fail).count();
        out += &format!("{} checks, {} failed\n", self.results.len(), fails);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "seed": self.seed,
            "passed": self.passed(),
            "results": self.results,
        })
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

type CheckFn = fn(&VerifyConfig) -> Result<Outcome>;

struct Check {
    suite: &'static str,
    id: &'static str,
    identity: &'static str,
    run: CheckFn,
}

const CHECKS: &[Check] = &[
    Check { suite: "partitions", id: "odd-equals-strict", identity: "|OP_n(L)| = |SP_n(L)| for label sets of size 1..3", run: odd_equals_strict },
    Check { suite: "partitions", id: "parity-split", identity: "|SP_n^+| + |SP_n^-| = |SP_n|", run: parity_split },
    Check { suite: "partitions", id: "class-size-bound", identity: "sum over OP_n(G*) of |HG_n|/Z_rho <= |HG_n|", run: class_size_bound },
    Check { suite: "partitions", id: "deterministic-order", identity: "enumeration order is reproducible", run: deterministic_order },
    Check { suite: "symfunc", id: "dim-series", identity: "prod (1 - t^(2r-1))^-1 counts strict partitions", run: omega_dims },
    Check { suite: "symfunc", id: "q-closed-form", identity: "q_n = sum over odd mu of 2^l(mu) p_mu / z_mu", run: q_closed_form },
    Check { suite: "symfunc", id: "q-basis-round-trip", identity: "q-monomials to power sums and back is the identity", run: q_round_trip },
    Check { suite: "symfunc", id: "schur-q-orthogonality", identity: "<Q_lambda, Q_mu> = delta 2^l(lambda)", run: schur_q_orthogonality },
    Check { suite: "symfunc", id: "schur-q-basis", identity: "Q_lambda for strict lambda span the degree-n piece", run: schur_q_basis },
    Check { suite: "symfunc", id: "exp-log", identity: "log(sum q_n t^n) = sum over odd r of 2 p_r t^r / r", run: exp_log },
    Check { suite: "spinchar", id: "ch-of-xi", identity: "ch'(xi^n) = q_n (colored by 1/zeta_c)", run: ch_of_xi },
    Check { suite: "spinchar", id: "ch-multiplicative", identity: "ch'(ab) = ch'(a) ch'(b) on random sigma-basis pairs", run: ch_multiplicative },
    Check { suite: "spinchar", id: "ch-image-dimension", identity: "rank of ch' in degree n equals |OP_n(G*)|", run: ch_image_dimension },
    Check { suite: "spinchar", id: "irreducible-orthogonality", identity: "<ch' T^lambda, ch' T^mu> = delta 2^delta(l(lambda))", run: irreducible_orthogonality },
    Check { suite: "spinchar", id: "point-dim-series", identity: "prod (1 - t^(2r-1))^-|G*| counts OP_n(G*)", run: point_dims },
    Check { suite: "spinchar", id: "star-multiplicative", identity: "V (x) W star chi equals V star (W star chi) for linear V, W", run: star_multiplicative },
    Check { suite: "hopf", id: "coassociativity", identity: "(D (x) 1) D = (1 (x) D) D", run: hopf_coassociativity },
    Check { suite: "hopf", id: "counit", identity: "(e (x) 1) D = 1 = (1 (x) e) D", run: hopf_counit },
    Check { suite: "hopf", id: "multiplicativity", identity: "D(ab) = D(a) D(b)", run: hopf_multiplicativity },
    Check { suite: "hopf", id: "antipode", identity: "m (S (x) 1) D = m (1 (x) S) D = unit counit", run: hopf_antipode },
    Check { suite: "vertex", id: "exponential-form", identity: "V^(x)n star xi^n agrees with the exponential of odd sigma_r", run: vertex_exponential },
    Check { suite: "fock", id: "dim-series", identity: "Fock basis counts equal prod (1+t^(2r-1))^d1 / (1-t^(2r-1))^d0", run: fock_dims },
    Check { suite: "fock", id: "ch-varpi", identity: "ch_n varpi_n = id on the sector space", run: ch_varpi },
    Check { suite: "heisenberg", id: "relations", identity: "[a_-m(eta), a_l(V)] = (l/2) delta_ml <eta,V>; creations and annihilations supercommute", run: heisenberg_relations },
    Check { suite: "heisenberg", id: "cyclic-vacuum", identity: "annihilators take every nonzero vector to a nonzero multiple of the vacuum", run: heisenberg_cyclic },
    Check { suite: "euler", id: "signed-dims", identity: "prod (1 - t^(2r-1))^-e equals even minus odd Fock dimensions", run: euler_signed },
    Check { suite: "euler", id: "spin-count", identity: "e^s series at e = 1 counts spin modules of the double cover of S_n", run: euler_spin },
    Check { suite: "qlambda", id: "susy-vs-exp", identity: "sum_i S^i Lambda^(n-i) equals the coefficient of exp(sum 2 psi^r t^r / r)", run: q_susy_exp },
    Check { suite: "qlambda", id: "sum-identity", identity: "Q_t(E+F) = Q_t(E) Q_t(F)", run: q_sum },
    Check { suite: "qlambda", id: "difference-identity", identity: "Q_t(E-F) = Q_t(E) Q_-t(F)", run: q_difference },
    Check { suite: "qlambda", id: "adams-additive", identity: "psi^r(E+F) = psi^r(E) + psi^r(F)", run: adams_additive },
    Check { suite: "qlambda", id: "adams-composition", identity: "psi^r psi^s = psi^rs", run: adams_composition },
    Check { suite: "qlambda", id: "trace-dimension", identity: "sum_lambda 2^-delta trace_lambda dim T^lambda = (2m)^n", run: trace_dimension },
];

/// Suite names in registry order.
pub fn suites() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in CHECKS {
        if !out.contains(&c.suite) {
            out.push(c.suite);
        }
    }
    out
}

/// `(suite, id)` for every registered check.
pub fn registry() -> Vec<(&'static str, &'static str)> {
    CHECKS.iter().map(|c| (c.suite, c.id)).collect()
}

/// Runs one suite, or all of them for `"all"`. Results are sorted by suite and id.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Option<Report>> {
    if name != "all" && !suites().contains(&name) {
        return Ok(None);
    }
    let mut results = Vec::new();
    for c in CHECKS.iter().filter(|c| name == "all" || c.suite == name) {
        let (status, detail) = match (c.run)(cfg)? {
            Outcome::Pass(d) => (Status::Pass, d),
            Outcome::Fail(d) => (Status::Fail, d),
            Outcome::Skip(d) => (Status::Skip, d),
        };
        results.push(CheckResult {
            suite: c.suite,
            id: c.id,
            identity: c.identity,
            status,
            detail,
        });
    }
    results.sort_by(|a, b| (a.suite, a.id).cmp(&(b.suite, b.id)));
    Ok(Some(Report { seed: cfg.seed, results }))
}

fn pass_if(ok: bool, pass: String, fail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass(pass)
    } else {
        Outcome::Fail(fail())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn series_ints(s: &crate::series::PowerSeries) -> Vec<BigInt> {
    s.integer_coeffs()
}

fn odd_equals_strict(cfg: &VerifyConfig) -> Result<Outcome> {
    for k in 1..=3 {
        for n in 0..=cfg.n {
            let (a, b) = count_identity_check(n, k);
            if a != b {
                return Ok(Outcome::Fail(format!("n={} labels={}: {} vs {}", n, k, a, b)));
            }
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn parity_split(cfg: &VerifyConfig) -> Result<Outcome> {
    for n in 0..=cfg.n {
        let (plus, minus) = strict_parity_counts(n, 1);
        let all = partitions(n, PartitionKind::Strict).len();
        if plus + minus != all {
            return Ok(Outcome::Fail(format!("n={}: {} + {} != {}", n, plus, minus, all)));
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn class_size_bound(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = &cfg.group;
    for n in 0..=cfg.n {
        let mut total = BigRational::zero();
        for rho in labeled_partitions(n, g.num_classes(), PartitionKind::Odd) {
            total += BigRational::new(BigInt::one(), BigInt::from(big_z_of(&rho, g)?));
        }
        if total > BigRational::one() {
            return Ok(Outcome::Fail(format!("n={}: fraction {} exceeds 1", n, total)));
        }
    }
    Ok(Outcome::Pass(format!("group {}, n <= {}", g.name, cfg.n)))
}

fn deterministic_order(cfg: &VerifyConfig) -> Result<Outcome> {
    let k = cfg.group.num_classes();
    let ok = labeled_partitions(cfg.n, k, PartitionKind::All) == labeled_partitions(cfg.n, k, PartitionKind::All)
        && partitions(cfg.n, PartitionKind::Strict) == partitions(cfg.n, PartitionKind::Strict);
    Ok(pass_if(ok, format!("n = {}", cfg.n), || "two enumerations differ".into()))
}

fn omega_dims(cfg: &VerifyConfig) -> Result<Outcome> {
    let s = series_ints(&omega_dim_series(cfg.n as usize));
    for n in 0..=cfg.n {
        let c = partitions(n, PartitionKind::Strict).len();
        if s[n as usize] != BigInt::from(c) {
            return Ok(Outcome::Fail(format!("n={}: series {} vs |SP_n| {}", n, s[n as usize], c)));
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn q_closed_form(cfg: &VerifyConfig) -> Result<Outcome> {
    let qs = q_series(cfg.n as usize);
    for n in 0..=cfg.n {
        let mut want = OmegaElem::zero(1);
        for mu in partitions(n, PartitionKind::Odd) {
            let w = BigRational::new(
                BigInt::one() << mu.length(),
                BigInt::from(crate::partitions::z_of(&mu)),
            );
            want = want.try_add(&OmegaElem::p(&mu)?.scale_by(&w))?;
        }
        if qs.coeff(n as usize) != &want {
            return Ok(Outcome::Fail(format!("n={}: {} vs {}", n, qs.coeff(n as usize), want)));
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn q_round_trip(cfg: &VerifyConfig) -> Result<Outcome> {
    let qs = q_series(cfg.n as usize).into_coeffs();
    for n in 1..=cfg.n {
        let basis = p_basis(n);
        let mono: Vec<OmegaElem> = partitions(n, PartitionKind::Odd)
            .iter()
            .map(|mu| mu.parts().iter().try_fold(OmegaElem::one(1), |acc, &r| acc.try_mul(&qs[r as usize])))
            .collect::<Result<_>>()?;
        let vecs: Vec<_> = mono.iter().map(|e| e.coordinates(&basis)).collect();
        for (i, v) in vecs.iter().enumerate() {
            let Some(x) = linalg::solve(&vecs, v) else {
                return Ok(Outcome::Fail(format!("n={}: q-monomial {} not in span", n, i)));
            };
            let unit = x.iter().enumerate().all(|(j, xj)| *xj == if i == j { rat(1) } else { rat(0) });
            if !unit || OmegaElem::from_coordinates(1, &basis, v) != mono[i] {
                return Ok(Outcome::Fail(format!("n={}: round trip of q-monomial {} failed", n, i)));
            }
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn schur_q_orthogonality(cfg: &VerifyConfig) -> Result<Outcome> {
    for n in 0..=cfg.n {
        let strict = partitions(n, PartitionKind::Strict);
        let qs: Vec<_> = strict.iter().map(Q_in_p).collect::<Result<_>>()?;
        for (i, a) in qs.iter().enumerate() {
            for (j, b) in qs.iter().enumerate() {
                let want = if i == j { rat(1 << strict[i].length()) } else { rat(0) };
                let got = inner(a, b)?;
                if got != want {
                    return Ok(Outcome::Fail(format!("<Q{}, Q{}> = {}, expected {}", strict[i], strict[j], got, want)));
                }
            }
        }
    }
    Ok(Outcome::Pass(format!("|lambda| <= {}", cfg.n)))
}

fn schur_q_basis(cfg: &VerifyConfig) -> Result<Outcome> {
    for n in 0..=cfg.n {
        let basis = p_basis(n);
        let rows: Vec<_> = partitions(n, PartitionKind::Strict)
            .iter()
            .map(|l| Ok(Q_in_p(l)?.coordinates(&basis)))
            .collect::<Result<_>>()?;
        if rows.len() != basis.len() || linalg::rank(&rows) != basis.len() {
            return Ok(Outcome::Fail(format!("n={}: rank {} of {}", n, linalg::rank(&rows), basis.len())));
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn exp_log(cfg: &VerifyConfig) -> Result<Outcome> {
    let n = cfg.n as usize;
    let ok = q_series(n).log()? == q_exponent(&[1], n);
    Ok(pass_if(ok, format!("N = {}", n), || "log of the q series differs".into()))
}

fn zetas(g: &GroupData) -> Vec<u64> {
    g.classes.iter().map(|c| c.centralizer_order).collect()
}

fn ch_of_xi(cfg: &VerifyConfig) -> Result<Outcome> {
    let qs = q_series_colored(&zetas(&cfg.group), cfg.n as usize);
    for n in 0..=cfg.n {
        let got = xi(n, cfg.group.clone()).ch_prime()?;
        if &got != qs.coeff(n as usize) {
            return Ok(Outcome::Fail(format!("n={}: {} vs {}", n, got, qs.coeff(n as usize))));
        }
    }
    Ok(Outcome::Pass(format!("group {}, n <= {}", cfg.group.name, cfg.n)))
}

fn ch_multiplicative(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = &cfg.group;
    let k = g.num_classes();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut count = 0;
    for _ in 0..cfg.samples.max(1) * 4 {
        let total = rng.gen_range(0..=cfg.n);
        let a = rng.gen_range(0..=total);
        let left = labeled_partitions(a, k, PartitionKind::Odd);
        let right = labeled_partitions(total - a, k, PartitionKind::Odd);
        let rho = &left[rng.gen_range(0..left.len())];
        let tau = &right[rng.gen_range(0..right.len())];
        let x = sigma_rho(rho, g.clone())?;
        let y = sigma_rho(tau, g.clone())?;
        let lhs = x.product(&y)?.ch_prime()?;
        let rhs = x.ch_prime()?.try_mul(&y.ch_prime()?)?;
        count += 1;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("sigma^{} sigma^{}: {} vs {}", rho, tau, lhs, rhs)));
        }
    }
    Ok(Outcome::Pass(format!("{} pairs, total degree <= {}", count, cfg.n)))
}

fn ch_image_dimension(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = &cfg.group;
    let k = g.num_classes();
    for n in 0..=cfg.n {
        let classes = labeled_partitions(n, k, PartitionKind::Odd);
        let rows: Vec<_> = classes
            .iter()
            .map(|r| Ok(sigma_rho(r, g.clone())?.ch_prime()?.coordinates(&classes)))
            .collect::<Result<_>>()?;
        if linalg::rank(&rows) != classes.len() {
            return Ok(Outcome::Fail(format!("n={}: rank {} of {}", n, linalg::rank(&rows), classes.len())));
        }
    }
    Ok(Outcome::Pass(format!("group {}, n <= {}", g.name, cfg.n)))
}

fn irreducible_orthogonality(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = Arc::new(GroupData::trivial());
    for n in 0..=cfg.n {
        let strict = partitions(n, PartitionKind::Strict);
        let chs: Vec<_> = strict
            .iter()
            .map(|l| irreducible_char(l, g.clone())?.ch_prime())
            .collect::<Result<_>>()?;
        for (i, a) in chs.iter().enumerate() {
            for (j, b) in chs.iter().enumerate() {
                let want = if i == j { rat(1 << (strict[i].length() % 2)) } else { rat(0) };
                let got = inner(a, b)?;
                if got != want {
                    return Ok(Outcome::Fail(format!("T{} vs T{}: {} expected {}", strict[i], strict[j], got, want)));
                }
            }
        }
    }
    Ok(Outcome::Pass(format!("trivial group, |lambda| <= {}", cfg.n)))
}

fn point_dims(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = &cfg.group;
    let s = series_ints(&dim_series_point(g, cfg.n as usize));
    for n in 0..=cfg.n {
        let c = labeled_partitions(n, g.num_classes(), PartitionKind::Odd).len();
        if s[n as usize] != BigInt::from(c) {
            return Ok(Outcome::Fail(format!("n={}: {} vs {}", n, s[n as usize], c)));
        }
    }
    Ok(Outcome::Pass(format!("group {}, n <= {}", g.name, cfg.n)))
}

fn linear_chars(g: &GroupData) -> Option<Vec<Vec<Cyclo>>> {
    let idx = g.linear_characters().ok()?;
    Some(idx.iter().map(|&i| g.character(i).expect("listed").to_vec()).collect())
}

fn star_multiplicative(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = &cfg.group;
    let Some(chars) = linear_chars(g) else {
        return Ok(Outcome::Skip(format!("group {} has no character table", g.name)));
    };
    let n = cfg.n.min(6);
    for v in &chars {
        for w in &chars {
            let vw: Vec<Cyclo> = v.iter().zip(w).map(|(a, b)| a.mul(b)).collect();
            for d in 0..=n {
                let chi = xi(d, g.clone());
                let lhs = star_values(&vw, &chi)?;
                let rhs = star_values(v, &star_values(w, &chi)?)?;
                if lhs != rhs {
                    return Ok(Outcome::Fail(format!("degree {}: {} vs {}", d, lhs, rhs)));
                }
            }
        }
    }
    Ok(Outcome::Pass(format!("{} linear characters, n <= {}", chars.len(), n)))
}

fn sigma_basis(cfg: &VerifyConfig) -> Vec<SigmaExpansion> {
    let k = cfg.group.num_classes();
    (0..=cfg.n)
        .flat_map(|d| labeled_partitions(d, k, PartitionKind::Odd))
        .map(|rho| SigmaExpansion::basis(cfg.group.clone(), rho))
        .collect()
}

fn hopf_coassociativity(cfg: &VerifyConfig) -> Result<Outcome> {
    let basis = sigma_basis(cfg);
    for a in &basis {
        let d = a.coproduct();
        if d.coproduct_at(0) != d.coproduct_at(1) {
            return Ok(Outcome::Fail(format!("{:?}", a.terms().next())));
        }
    }
    Ok(Outcome::Pass(format!("{} generators of degree <= {}", basis.len(), cfg.n)))
}

fn hopf_counit(cfg: &VerifyConfig) -> Result<Outcome> {
    let basis = sigma_basis(cfg);
    for a in &basis {
        let d = a.coproduct();
        let me = SigmaTensor::from_expansion(a);
        if d.counit_at(0) != me || d.counit_at(1) != me {
            return Ok(Outcome::Fail(format!("{:?}", a.terms().next())));
        }
    }
    Ok(Outcome::Pass(format!("{} generators of degree <= {}", basis.len(), cfg.n)))
}

fn hopf_multiplicativity(cfg: &VerifyConfig) -> Result<Outcome> {
    let basis = sigma_basis(cfg);
    let deg = |e: &SigmaExpansion| e.terms().next().map_or(0, |(k, _)| k.total_weight());
    let mut pairs = 0;
    for a in &basis {
        for b in &basis {
            if deg(a) + deg(b) > cfg.n {
                continue;
            }
            pairs += 1;
            if a.product(b)?.coproduct() != a.coproduct().product(&b.coproduct())? {
                return Ok(Outcome::Fail(format!("{:?} * {:?}", a.terms().next(), b.terms().next())));
            }
        }
    }
    Ok(Outcome::Pass(format!("{} pairs of total degree <= {}", pairs, cfg.n)))
}

fn hopf_antipode(cfg: &VerifyConfig) -> Result<Outcome> {
    let basis = sigma_basis(cfg);
    for a in &basis {
        let d = a.coproduct();
        let want = SigmaExpansion::one(cfg.group.clone()).scale(&a.counit());
        if d.antipode_at(0).multiply_out() != want || d.antipode_at(1).multiply_out() != want {
            return Ok(Outcome::Fail(format!("{:?}", a.terms().next())));
        }
    }
    Ok(Outcome::Pass(format!("{} generators of degree <= {}", basis.len(), cfg.n)))
}

fn vertex_exponential(cfg: &VerifyConfig) -> Result<Outcome> {
    let g = &cfg.group;
    let Some(chars) = linear_chars(g) else {
        return Ok(Outcome::Skip(format!("group {} has no character table", g.name)));
    };
    for (i, v) in chars.iter().enumerate() {
        let a = vertex_q(v, g.clone(), cfg.n as usize)?;
        let b = vertex_q_exponential(v, g.clone(), cfg.n as usize)?;
        for d in 0..=cfg.n as usize {
            if a.component(d) != b.component(d) {
                return Ok(Outcome::Fail(format!(
                    "linear character {} degree {}: {} vs {}",
                    i,
                    d,
                    a.component(d),
                    b.component(d)
                )));
            }
        }
    }
    Ok(Outcome::Pass(format!("group {}, {} linear characters, n <= {}", g.name, chars.len(), cfg.n)))
}

fn fock_dims(cfg: &VerifyConfig) -> Result<Outcome> {
    let s = series_ints(&dim_series(&cfg.model, cfg.n as usize));
    for n in 0..=cfg.n {
        let c = fock_basis(&cfg.model, n).len();
        if s[n as usize] != BigInt::from(c) {
            return Ok(Outcome::Fail(format!("n={}: series {} vs basis {}", n, s[n as usize], c)));
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn ch_varpi(cfg: &VerifyConfig) -> Result<Outcome> {
    let m = &cfg.model;
    let dim = m.sector_dim();
    for n in (1..=cfg.n.max(1)).step_by(2) {
        for b in 0..dim {
            let v = SectorVector::basis(dim, b);
            if ch_n(m, n, &varpi(m, n, &v)?)? != v {
                return Ok(Outcome::Fail(format!("n={} basis {}", n, m.basis()[b].name)));
            }
        }
    }
    Ok(Outcome::Pass(format!("sector dim {}, odd n <= {}", dim, cfg.n)))
}

fn heisenberg_relations(cfg: &VerifyConfig) -> Result<Outcome> {
    let rep = commutator_check(&cfg.model, cfg.degree, cfg.samples, cfg.seed)?;
    Ok(match rep.counterexample {
        None => Outcome::Pass(format!(
            "{} states of degree <= {}, {} samples, {} bracket evaluations",
            rep.states, cfg.degree, cfg.samples, rep.checks
        )),
        Some(c) => Outcome::Fail(c),
    })
}

fn heisenberg_cyclic(cfg: &VerifyConfig) -> Result<Outcome> {
    let m = &cfg.model;
    let top = cfg.degree.min(8);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tried = 0;
    for n in 0..=top {
        let mut vectors: Vec<FockVector> = fock_basis(m, n).into_iter().map(FockVector::state).collect();
        for _ in 0..cfg.samples {
            vectors.push(random_fock_vector(m, n, &mut rng));
        }
        for x in vectors.iter().filter(|x| !x.is_zero()) {
            tried += 1;
            match reduce_to_vacuum(m, x)? {
                Some(c) if !c.is_zero() => {}
                _ => return Ok(Outcome::Fail(format!("stuck on {}", x.display_with(m)))),
            }
        }
    }
    Ok(Outcome::Pass(format!("{} vectors of degree <= {}", tried, top)))
}

fn euler_signed(cfg: &VerifyConfig) -> Result<Outcome> {
    let (d0, d1) = cfg.model.total_dims();
    let e = d0 as i64 - d1 as i64;
    let s = series_ints(&euler_series(e, cfg.n as usize));
    let got = signed_dims(&cfg.model, cfg.n as usize);
    for (n, (a, b)) in s.iter().zip(&got).enumerate() {
        if *a != BigInt::from(*b) {
            return Ok(Outcome::Fail(format!("e={} n={}: series {} vs signed count {}", e, n, a, b)));
        }
    }
    Ok(Outcome::Pass(format!("e = {}, n <= {}", e, cfg.n)))
}

fn euler_spin(cfg: &VerifyConfig) -> Result<Outcome> {
    let s = series_ints(&euler_s_series(1, cfg.n as usize));
    for n in 0..=cfg.n {
        let c = spin_module_count(n);
        if s[n as usize] != BigInt::from(c) {
            return Ok(Outcome::Fail(format!("n={}: series {} vs count {}", n, s[n as usize], c)));
        }
    }
    Ok(Outcome::Pass(format!("n <= {}", cfg.n)))
}

fn q_reports(cfg: &VerifyConfig) -> Result<Vec<(String, crate::lambdaops::QIdentityReport)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for _ in 0..cfg.samples.max(1) {
        let e = random_virtual(cfg.vars, cfg.lines, cfg.neg, &mut rng);
        let f = random_virtual(cfg.vars, cfg.lines, cfg.neg, &mut rng);
        let rep = q_identities_check(&e, &f, cfg.n as usize)?;
        out.push((format!("E = {}, F = {}", e, f), rep));
    }
    Ok(out)
}

fn q_check(cfg: &VerifyConfig, pick: fn(&crate::lambdaops::QIdentityReport) -> bool) -> Result<Outcome> {
    let reps = q_reports(cfg)?;
    for (what, r) in &reps {
        if !pick(r) {
            return Ok(Outcome::Fail(what.clone()));
        }
    }
    Ok(Outcome::Pass(format!("{} random pairs, up to t^{}", reps.len(), cfg.n)))
}

fn q_susy_exp(cfg: &VerifyConfig) -> Result<Outcome> {
    q_check(cfg, |r| r.susy_matches_exp)
}

fn q_sum(cfg: &VerifyConfig) -> Result<Outcome> {
    q_check(cfg, |r| r.sum_identity)
}

fn q_difference(cfg: &VerifyConfig) -> Result<Outcome> {
    q_check(cfg, |r| r.difference_identity)
}

fn adams_additive(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples.max(1) {
        let e = random_virtual(cfg.vars, cfg.lines, cfg.neg, &mut rng);
        let f = random_virtual(cfg.vars, cfg.lines, cfg.neg, &mut rng);
        for r in (1..=9).step_by(2) {
            if adams(r, &e.add(&f)?)? != adams(r, &e)?.add(&adams(r, &f)?)? {
                return Ok(Outcome::Fail(format!("r={} E = {} F = {}", r, e, f)));
            }
        }
    }
    Ok(Outcome::Pass(format!("{} pairs, odd r <= 9", cfg.samples.max(1))))
}

fn adams_composition(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples.max(1) {
        let e = random_virtual(cfg.vars, cfg.lines, cfg.neg, &mut rng);
        for r in (1..=9).step_by(2) {
            for s in (1..=9).step_by(2) {
                if adams(r, &adams(s, &e)?)? != adams(r * s, &e)? {
                    return Ok(Outcome::Fail(format!("r={} s={} E = {}", r, s, e)));
                }
            }
        }
    }
    Ok(Outcome::Pass(format!("{} elements, odd r, s <= 9", cfg.samples.max(1))))
}

fn trace_dimension(_cfg: &VerifyConfig) -> Result<Outcome> {
    for m in 1..=3usize {
        for n in 0..=4u32 {
            let got = trace_dimension_sum(n, m)?;
            let want = rat((2 * m as i64).pow(n));
            if got != want {
                return Ok(Outcome::Fail(format!("m={} n={}: {} vs {}", m, n, got, want)));
            }
        }
    }
    Ok(Outcome::Pass("m <= 3, n <= 4".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MANIFEST: &str = include_str!("../verify_manifest.txt");

    #[test]
    fn registry_matches_manifest() {
        let listed: Vec<(String, String)> = MANIFEST
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let (s, i) = l.split_once('.').expect("suite.id");
                (s.to_string(), i.to_string())
            })
            .collect();
        let reg: Vec<(String, String)> = registry().iter().map(|(s, i)| (s.to_string(), i.to_string())).collect();
        assert_eq!(listed, reg);
    }

    #[test]
    fn every_suite_passes_on_small_defaults() {
        let cfg = VerifyConfig {
            n: 5,
            degree: 3,
            samples: 2,
            ..VerifyConfig::default()
        };
        let rep = run_suite("all", &cfg).unwrap().unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(rep.results.len(), registry().len());
        assert!(run_suite("nope", &cfg).unwrap().is_none());
    }

    #[test]
    fn empty_model_passes() {
        let cfg = VerifyConfig {
            model: SectorModel::point(0, 0),
            n: 4,
            degree: 3,
            samples: 2,
            ..VerifyConfig::default()
        };
        assert!(run_suite("all", &cfg).unwrap().unwrap().passed());
    }

    #[test]
    fn vertex_suite_on_z2() {
        let cfg = VerifyConfig {
            group: Arc::new(GroupData::cyclic(2)),
            n: 6,
            ..VerifyConfig::default()
        };
        assert!(run_suite("vertex", &cfg).unwrap().unwrap().passed());
    }
}

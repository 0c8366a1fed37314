//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use spinq_core::fock::{
    commutator_check, dim_series, euler_s_series, euler_series, fock_basis, signed_dims, spin_module_count,
    SectorModel,
};
use spinq_core::lambdaops::{q_identities_check, random_virtual};
use spinq_core::partitions::{labeled_partitions, partitions, strict_parity_counts, GroupData, PartitionKind};
use spinq_core::spinchar::{
    dim_series_point, irreducible_char, vertex_q, vertex_q_exponential, xi, SigmaExpansion, SigmaTensor,
};
use spinq_core::symfunc::{inner, omega_dim_series, q_in_p};
use spinq_core::Result;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

fn group(name: &str) -> Arc<GroupData> {
    Arc::new(GroupData::load(fixture(&format!("groups/{}.json", name))).expect("fixture group"))
}

fn model(d0: u32, d1: u32) -> SectorModel {
    SectorModel::load(fixture(&format!("models/point_{}_{}.json", d0, d1))).expect("fixture model")
}

type Verdict = Result<std::result::Result<String, String>>;

fn c1_point_dims() -> Verdict {
    for g in ["trivial", "z2", "z3"] {
        let g = group(g);
        let s = dim_series_point(&g, 20).integer_coeffs();
        for n in 0..=20u32 {
            let count = labeled_partitions(n, g.num_classes(), PartitionKind::Odd).len();
            if s[n as usize] != BigInt::from(count) {
                return Ok(Err(format!("{} n={}: {} vs {}", g.name, n, s[n as usize], count)));
            }
        }
    }
    Ok(Ok("|G*| in {1,2,3}, n <= 20".into()))
}

fn c2_omega_dims() -> Verdict {
    let s = omega_dim_series(30).integer_coeffs();
    for n in 0..=30u32 {
        let count = partitions(n, PartitionKind::Strict).len();
        if s[n as usize] != BigInt::from(count) {
            return Ok(Err(format!("n={}: {} vs {}", n, s[n as usize], count)));
        }
    }
    Ok(Ok("n <= 30".into()))
}

fn c3_ch_xi() -> Verdict {
    let g = group("trivial");
    for n in 0..=12 {
        if xi(n, g.clone()).ch_prime()? != q_in_p(n) {
            return Ok(Err(format!("n={}", n)));
        }
    }
    Ok(Ok("n <= 12".into()))
}

fn c4_orthogonality() -> Verdict {
    let g = group("trivial");
    let mut pairs = 0;
    for n in 0..=10 {
        let strict = partitions(n, PartitionKind::Strict);
        let chars = strict
            .iter()
            .map(|l| irreducible_char(l, g.clone())?.ch_prime())
            .collect::<Result<Vec<_>>>()?;
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let want = if i == j {
                    BigRational::from_integer(BigInt::from(1u32 << (strict[i].length() % 2)))
                } else {
                    BigRational::zero()
                };
                pairs += 1;
                if inner(a, b)? != want {
                    return Ok(Err(format!("{} vs {}", strict[i], strict[j])));
                }
            }
        }
    }
    Ok(Ok(format!("{} pairs, |lambda| <= 10", pairs)))
}

fn c5_fock_counts() -> Verdict {
    for (d0, d1) in [(1, 0), (0, 1), (2, 1), (3, 2)] {
        let m = model(d0, d1);
        let s = dim_series(&m, 12).integer_coeffs();
        for n in 0..=12u32 {
            let count = fock_basis(&m, n).len();
            if s[n as usize] != BigInt::from(count) {
                return Ok(Err(format!("({},{}) n={}: {} vs {}", d0, d1, n, s[n as usize], count)));
            }
        }
    }
    Ok(Ok("(d0,d1) in {(1,0),(0,1),(2,1),(3,2)}, n <= 12".into()))
}

fn c6_heisenberg() -> Verdict {
    let mut states = 0;
    let mut checks = 0;
    for (i, (d0, d1)) in [(1, 0), (0, 1), (2, 1), (3, 2)].into_iter().enumerate() {
        let rep = commutator_check(&model(d0, d1), 9, 50, 1000 + i as u64)?;
        if let Some(c) = rep.counterexample {
            return Ok(Err(format!("({},{}): {}", d0, d1, c)));
        }
        states += rep.states;
        checks += rep.checks;
    }
    Ok(Ok(format!(
        "4 models, degree <= 9, 50 samples each: {} basis states, {} bracket evaluations",
        states, checks
    )))
}

fn c7_vertex() -> Verdict {
    let mut count = 0;
    for name in ["trivial", "z2", "z3"] {
        let g = group(name);
        for idx in g.linear_characters()? {
            let v = g.character(idx)?.to_vec();
            let a = vertex_q(&v, g.clone(), 6)?;
            let b = vertex_q_exponential(&v, g.clone(), 6)?;
            count += 1;
            if a != b {
                return Ok(Err(format!("{} character {}", g.name, idx)));
            }
        }
    }
    Ok(Ok(format!("{} (group, V) pairs, n <= 6", count)))
}

fn c8_qlambda() -> Verdict {
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_virtual(3, 4, 2, &mut rng);
        let f = random_virtual(3, 4, 2, &mut rng);
        let rep = q_identities_check(&e, &f, 8)?;
        if !rep.passed() {
            return Ok(Err(format!("seed {}: {:?} for E = {}, F = {}", seed, rep, e, f)));
        }
    }
    Ok(Ok("20 seeds, up to t^8".into()))
}

fn c9_euler() -> Verdict {
    for e in -2i64..=3 {
        // d1 = 2 odd sectors keeps every model genuinely graded
        let m = SectorModel::point((e + 2) as u32, 2);
        let s = euler_series(e, 10).integer_coeffs();
        let got = signed_dims(&m, 10);
        for n in 0..=10 {
            if s[n] != BigInt::from(got[n]) {
                return Ok(Err(format!("e={} n={}: {} vs {}", e, n, s[n], got[n])));
            }
        }
    }
    Ok(Ok("e in -2..3 via models (e+2, 2), n <= 10".into()))
}

fn c10_spin_count() -> Verdict {
    let s = euler_s_series(1, 20).integer_coeffs();
    for n in 0..=20u32 {
        let count = spin_module_count(n);
        if s[n as usize] != BigInt::from(count) {
            return Ok(Err(format!("n={}: {} vs {}", n, s[n as usize], count)));
        }
    }
    // the literal length-parity reading of the split disagrees; report where
    let literal = (0..=20u32).find(|&n| {
        let (plus, minus) = strict_parity_counts(n, 1);
        s[n as usize] != BigInt::from(plus + 2 * minus)
    });
    let note = match literal {
        Some(n) => format!("; splitting by l(lambda) parity instead first differs at n={}", n),
        None => String::new(),
    };
    Ok(Ok(format!("n <= 20, strict lambda weighted 1 or 2 by parity of n - l(lambda){}", note)))
}

fn c11_hopf() -> Verdict {
    let mut generators = 0;
    for name in ["trivial", "z2"] {
        let g = group(name);
        let basis: Vec<_> = (0..=8)
            .flat_map(|d| labeled_partitions(d, g.num_classes(), PartitionKind::Odd))
            .collect();
        for rho in &basis {
            generators += 1;
            let a = SigmaExpansion::basis(g.clone(), rho.clone());
            let d = a.coproduct();
            if d.coproduct_at(0) != d.coproduct_at(1) {
                return Ok(Err(format!("{}: coassociativity at {}", g.name, rho)));
            }
            let me = SigmaTensor::from_expansion(&a);
            if d.counit_at(0) != me || d.counit_at(1) != me {
                return Ok(Err(format!("{}: counit at {}", g.name, rho)));
            }
            let unit = SigmaExpansion::one(g.clone()).scale(&a.counit());
            if d.antipode_at(0).multiply_out() != unit || d.antipode_at(1).multiply_out() != unit {
                return Ok(Err(format!("{}: antipode at {}", g.name, rho)));
            }
            for tau in &basis {
                if rho.total_weight() + tau.total_weight() > 8 {
                    continue;
                }
                let b = SigmaExpansion::basis(g.clone(), tau.clone());
                if a.product(&b)?.coproduct() != d.product(&b.coproduct())? {
                    return Ok(Err(format!("{}: multiplicativity at {} * {}", g.name, rho, tau)));
                }
            }
        }
    }
    Ok(Ok(format!("{} generators, trivial and Z2, degree <= 8", generators)))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("point-case dimension series", c1_point_dims),
        ("graded dimension of Omega", c2_omega_dims),
        ("ch'(xi^n) = q_n", c3_ch_xi),
        ("irreducible spin character orthogonality", c4_orthogonality),
        ("Fock basis size", c5_fock_counts),
        ("Heisenberg relations", c6_heisenberg),
        ("twisted vertex operator", c7_vertex),
        ("Q-lambda identities", c8_qlambda),
        ("Euler series", c9_euler),
        ("spin e^s series", c10_spin_count),
        ("Hopf axioms", c11_hopf),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(Ok(detail)) => println!("PASS {:>2} {} ({}) [{:.1}s]", i + 1, name, detail, secs),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {:>2} {}: {} [{:.1}s]", i + 1, name, why, secs);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {}: error {} [{:.1}s]", i + 1, name, e, secs);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

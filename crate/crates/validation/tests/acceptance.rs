//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed whether it passes or not; the process exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use ym2d::frobenius::fs_indicator;
use ym2d::oracles::{
    fs_quadrature, unitary_fs_diagnostic, unitary_weights, zeta_small_n_closed, TorusGrid,
};
use ym2d::partition_fn::{
    convergence_table, genus3_dimension_bound_check, jacobi_triple_product_check, limit_value,
    s_decomposition, z_value, SurfaceSpec, TruncationParams,
};
use ym2d::verify::identities;
use ym2d::weights::enumerate_partitions;
use ym2d::zeta::{binom_double_tail, zeta_su, zeta_su_to_width, ZetaQuery};
use ym2d::{BoundedValue, Execution, Group, HighestWeight};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Outcome + 'a>);

const ZETA_CUTOFF: u64 = 1 << 22;

fn zeta2(n: usize) -> BoundedValue {
    zeta_su(&ZetaQuery::new(n, 2.0, ZETA_CUTOFF).unwrap()).unwrap()
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

fn exact_identities() -> Outcome {
    let start = Instant::now();
    let checks = identities(2024, 10_000);
    let elapsed = start.elapsed();
    let failed: Vec<_> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    let cases: usize = checks.iter().map(|c| c.cases).sum();
    Outcome::new(
        failed.is_empty() && within(elapsed, 10),
        format!(
            "{cases} exact comparisons, failed={failed:?}, {:.2}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn zeta_desk_numbers() -> Outcome {
    let start = Instant::now();
    let (z2, d2) = zeta_su_to_width(2, 2.0, 1e-8, Execution::Parallel).unwrap();
    let (z3, d3) = zeta_su_to_width(3, 2.0, 1e-6, Execution::Parallel).unwrap();
    let oracle = zeta_small_n_closed(3, 2.0, 2000).unwrap();
    let elapsed = start.elapsed();
    let ok = z2.contains(PI * PI / 6.0)
        && z2.width() <= 1e-8
        && z3.intersects(&oracle)
        && z3.width() <= 1e-6
        && oracle.width() <= 1e-6
        && within(elapsed, 30);
    Outcome::new(
        ok,
        format!(
            "ζ₂(2) width {:.2e} (D={d2}), ζ₃(2) width {:.2e} (D={d3}), oracle width {:.2e}, {:.2}s",
            z2.width(),
            z3.width(),
            oracle.width(),
            elapsed.as_secs_f64()
        ),
    )
}

fn zeta_limit_bound(values: &[(usize, BoundedValue)]) -> Outcome {
    let constant = binom_double_tail(1.5).exp();
    let mut worst = f64::NEG_INFINITY;
    let mut ok = true;
    for &(n, z) in values {
        let bound = constant / (n as f64).sqrt();
        ok &= z.upper - 1.0 <= bound;
        worst = worst.max((z.upper - 1.0) / bound);
    }
    let monotone = values.windows(2).all(|w| w[0].1.lower >= w[1].1.upper);
    Outcome::new(
        ok && monotone,
        format!("max (ζ−1)/bound = {worst:.3e}, certified decreasing in N: {monotone}"),
    )
}

fn zeta_twenty_threshold(z20: BoundedValue) -> Outcome {
    Outcome::new(
        z20.upper - 1.0 <= 1e-3,
        format!(
            "ζ₂₀(2) ∈ [{:.6}, {:.6}], need ζ₂₀(2) − 1 ≤ 1e-3",
            z20.lower, z20.upper
        ),
    )
}

fn genus_two_chain(values: &[(usize, BoundedValue)]) -> Outcome {
    let trunc = TruncationParams {
        dim_cutoff: ZETA_CUTOFF,
        ..TruncationParams::default()
    };
    let mut failures = Vec::new();
    let mut margin = f64::INFINITY;
    for &(n, zeta) in values {
        let z = z_value(
            &SurfaceSpec::new(true, 2, 1.0, Group::SpecialUnitary, n),
            &trunc,
        )
        .unwrap();
        let gap = z.max_distance(&BoundedValue::exact(1.0));
        margin = margin.min(zeta.lower - 1.0 - gap);
        if gap > zeta.lower - 1.0 {
            failures.push(n);
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("N = 2..20, smallest margin {margin:.3e}, failures {failures:?}"),
    )
}

fn gaps(orientable: bool, genus: u32, ns: &[usize]) -> Vec<(usize, f64)> {
    let spec = SurfaceSpec::with_q(orientable, genus, 0.5, Group::SpecialUnitary, 1).unwrap();
    convergence_table(&spec, ns, &TruncationParams::default())
        .unwrap()
        .into_iter()
        .map(|r| (r.n, r.gap_bound))
        .collect()
}

fn strictly_decreasing(g: &[(usize, f64)]) -> bool {
    g.windows(2).all(|w| w[1].1 < w[0].1)
}

fn torus_trend() -> Outcome {
    let start = Instant::now();
    let g = gaps(true, 1, &[10, 20, 50, 100]);
    let last = g.last().unwrap().1;
    let ok = strictly_decreasing(&g) && last <= 5e-2 && within(start.elapsed(), 120);
    Outcome::new(
        ok,
        format!("gaps {g:.3?}, need strictly decreasing and N=100 gap ≤ 5e-2"),
    )
}

fn torus_sandwich() -> Outcome {
    let trunc = TruncationParams {
        gamma: 0.4,
        ..TruncationParams::default()
    };
    let spec = SurfaceSpec::with_q(true, 1, 0.5, Group::SpecialUnitary, 30).unwrap();
    let d = s_decomposition(&spec, &trunc).unwrap();
    Outcome::new(
        d.sandwich_holds(),
        format!(
            "S₁ ∈ [{:.10}, {:.10}] inside [{:.10}, {:.10}]",
            d.parts[0].lower, d.parts[0].upper, d.sandwich.lower, d.sandwich.upper
        ),
    )
}

fn klein_trend() -> Outcome {
    let g = gaps(false, 2, &[6, 10, 20, 30]);
    let trunc = TruncationParams::default();
    let z = |n| {
        z_value(
            &SurfaceSpec::with_q(false, 2, 0.5, Group::SpecialUnitary, n).unwrap(),
            &trunc,
        )
        .unwrap()
    };
    let parity_gap = z(29).max_distance(&z(30));
    let limit = limit_value(&SurfaceSpec::with_q(false, 2, 0.5, Group::SpecialUnitary, 1).unwrap())
        .unwrap();
    Outcome::new(
        strictly_decreasing(&g) && parity_gap <= 1e-2,
        format!(
            "gaps {g:.3?}, |Z₂₉ − Z₃₀| ≤ {parity_gap:.3e}, limit {:.10}",
            limit.midpoint()
        ),
    )
}

fn frobenius_schur() -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for n in [2usize, 3] {
        for w in unitary_weights(n, 6) {
            let e = w.entries();
            if e[n - 1] != 0 || w.size() > 6 {
                continue;
            }
            let w = HighestWeight::special_unitary(e.to_vec()).unwrap();
            checked += 1;
            match fs_quadrature(&w, &TorusGrid::for_weight(&w)) {
                Ok(q) if q == fs_indicator(&w) => {}
                _ => mismatches.push(e.to_vec()),
            }
        }
    }
    let report = unitary_fs_diagnostic(&[2, 3], 2);
    Outcome::new(
        mismatches.is_empty(),
        format!(
            "{checked} SU weights, mismatches {mismatches:?}; unitary diagnostic: {} weights, {} logged disagreements",
            report.checked,
            report.mismatches.len()
        ),
    )
}

fn genus_three_inequality() -> Outcome {
    let mut cases = 0;
    let mut violations = Vec::new();
    for m in 1..=5usize {
        for beta in enumerate_partitions(8).filter(|b| b.len() <= m) {
            cases += 1;
            if !genus3_dimension_bound_check(&beta, m).unwrap() {
                violations.push((m, beta.parts().to_vec()));
            }
        }
    }
    Outcome::new(
        violations.is_empty(),
        format!("{cases} pairs (M, β), violations {violations:?}"),
    )
}

fn jacobi() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (q, tol) in [(0.1, 1e-9), (0.5, 1e-9), (0.9, 1e-6)] {
        let c = jacobi_triple_product_check(q).unwrap();
        ok &= c.defect <= tol;
        parts.push(format!("q={q}: {:.2e}", c.defect));
    }
    Outcome::new(ok, parts.join(", "))
}

fn tail_soundness() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for group in [Group::SpecialUnitary, Group::Unitary] {
        for n in [4usize, 6] {
            let spec = SurfaceSpec::with_q(true, 1, 0.5, group, n).unwrap();
            let coarse = z_value(
                &spec,
                &TruncationParams {
                    k_max: 20,
                    ..TruncationParams::default()
                },
            )
            .unwrap();
            let fine = z_value(
                &spec,
                &TruncationParams {
                    k_max: 60,
                    ..TruncationParams::default()
                },
            )
            .unwrap();
            ok &= coarse.encloses(&fine);
            parts.push(format!(
                "{group}({n}): width {:.1e} ⊇ {:.1e}",
                coarse.width(),
                fine.width()
            ));
        }
    }
    Outcome::new(ok, parts.join(", "))
}

fn main() -> ExitCode {
    let zetas: Vec<(usize, BoundedValue)> = (2..=20).map(|n| (n, zeta2(n))).collect();
    let z20 = zetas.last().unwrap().1;
    let criteria: Vec<Criterion> = vec![
        (
            "1",
            "exact Casimir and content identities",
            Box::new(exact_identities),
        ),
        ("2", "Witten zeta desk numbers", Box::new(zeta_desk_numbers)),
        (
            "3",
            "ζ_su(N)(2) − 1 ≤ N^{-1/2}·exp(B(3/2)), N = 2..20",
            Box::new(|| zeta_limit_bound(&zetas)),
        ),
        (
            "3b",
            "ζ_su(20)(2) − 1 ≤ 1e-3",
            Box::new(move || zeta_twenty_threshold(z20)),
        ),
        (
            "4",
            "|Z′_N(2,1) − 1| ≤ ζ_su(N)(2) − 1, N ≤ 20",
            Box::new(|| genus_two_chain(&zetas)),
        ),
        (
            "5",
            "torus distance to ∏(1−q^m)^{-2} decreasing, N=100 within 5e-2",
            Box::new(torus_trend),
        ),
        (
            "5b",
            "torus Λ-split sandwich at N = 30, γ = 0.4",
            Box::new(torus_sandwich),
        ),
        (
            "6",
            "Klein bottle distance decreasing, N = 29/30 agree within 1e-2",
            Box::new(klein_trend),
        ),
        (
            "7",
            "Frobenius–Schur quadrature agreement",
            Box::new(frobenius_schur),
        ),
        (
            "8",
            "genus-three dimension inequality, M ≤ 5, |β| ≤ 8",
            Box::new(genus_three_inequality),
        ),
        ("9", "Jacobi triple product defects", Box::new(jacobi)),
        (
            "10",
            "k_max = 20 encloses k_max = 60",
            Box::new(tail_soundness),
        ),
    ];
    let mut failed = Vec::new();
    for (id, title, run) in &criteria {
        let outcome = run();
        let mark = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>3} [{mark}] {title}: {}", outcome.detail);
        if !outcome.passed {
            failed.push(*id);
        }
    }
    println!(
        "{} of {} criteria passed; failed: {failed:?}",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

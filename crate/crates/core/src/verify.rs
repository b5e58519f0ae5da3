//! Seeded property suites behind `ym2 verify`. Reports carry no timings, so
//! the same configuration always serialises to the same bytes.

use crate::error::{Error, Result};
use crate::frobenius::fs_indicator;
use crate::oracles::{
    fs_integral, fs_quadrature, unitary_fs_diagnostic, unitary_weights, TorusGrid, UnitaryFsReport,
};
use crate::partition_fn::{
    genus3_dimension_bound_check, jacobi_triple_product_check, s_decomposition, z_value,
    SurfaceSpec, TruncationParams,
};
use crate::weights::{
    build_weight, casimir_su, casimir_u, casimir_via_decomposition, decompose,
    enumerate_partitions, total_content, Group, HighestWeight, Partition, Rational,
};
use crate::zeta::{zeta_su, ZetaQuery};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Identities,
    Fs,
    Sandwich,
    Tails,
    Jacobi,
    Genus3,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Identities,
        Suite::Fs,
        Suite::Sandwich,
        Suite::Tails,
        Suite::Jacobi,
        Suite::Genus3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Fs => "fs",
            Suite::Sandwich => "sandwich",
            Suite::Tails => "tails",
            Suite::Jacobi => "jacobi",
            Suite::Genus3 => "genus3",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub suites: Vec<Suite>,
    /// Randomised instances in the identities suite.
    pub instances: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            suites: Suite::ALL.to_vec(),
            instances: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    /// Present when the fs suite ran.
    pub unitary_fs: Option<UnitaryFsReport>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs `cases` checks, keeping the first failure.
struct Tally {
    suite: Suite,
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(suite: Suite, name: &'static str) -> Self {
        Self {
            suite,
            name,
            cases: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn record_result(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            suite: self.suite,
            name: self.name.to_string(),
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

pub fn run_verify(config: &VerifyConfig) -> VerifyReport {
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    let mut checks = Vec::new();
    let mut unitary_fs = None;
    for suite in suites {
        match suite {
            Suite::Identities => checks.extend(identities(config.seed, config.instances)),
            Suite::Fs => {
                checks.extend(fs_agreement());
                unitary_fs = Some(unitary_fs_diagnostic(&[2, 3], 2));
            }
            Suite::Sandwich => checks.extend(sandwiches()),
            Suite::Tails => checks.extend(tails()),
            Suite::Jacobi => checks.push(jacobi()),
            Suite::Genus3 => checks.push(genus3()),
        }
    }
    VerifyReport {
        seed: config.seed,
        checks,
        unitary_fs,
    }
}

fn random_partition(rng: &mut ChaCha8Rng, size: u32) -> Partition {
    let mut left = size;
    let mut parts = Vec::new();
    // a random cap on the part size spreads lengths between 1 and |α|
    let cap = rng.gen_range(1..=size.max(1));
    while left > 0 {
        let p = rng.gen_range(1..=left.min(cap));
        parts.push(p);
        left -= p;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("positive parts")
}

/// Box-by-box content sum.
fn content_by_boxes(alpha: &Partition) -> i64 {
    let mut k = 0;
    for (i, &row) in alpha.parts().iter().enumerate() {
        for j in 0..row as i64 {
            k += j - i as i64;
        }
    }
    k
}

fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact Casimir identities on random almost flat weights.
pub fn identities(seed: u64, instances: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut via_su = Tally::new(Suite::Identities, "casimir_su_via_decomposition");
    let mut via_u = Tally::new(Suite::Identities, "casimir_u_via_decomposition");
    let mut shift = Tally::new(Suite::Identities, "casimir_shift_identity");
    let mut content = Tally::new(Suite::Identities, "total_content_closed_form");
    let mut roundtrip = Tally::new(Suite::Identities, "decomposition_roundtrip");
    for _ in 0..instances {
        let total = rng.gen_range(0..=30u32);
        let a_size = rng.gen_range(0..=total);
        let alpha = random_partition(&mut rng, a_size);
        let beta = random_partition(&mut rng, total - a_size);
        let need = alpha.len() + beta.len() + 1;
        let n = rng.gen_range(need..=40);
        let shift_n: i64 = rng.gen_range(-6..=6);
        let describe = || {
            format!(
                "alpha={:?} beta={:?} n={shift_n} N={n}",
                alpha.parts(),
                beta.parts()
            )
        };
        let Ok(weight) = build_weight(&alpha, &beta, shift_n, n) else {
            via_su.record(false, || {
                format!("{}: weight construction failed", describe())
            });
            continue;
        };
        via_su.record_result(
            casimir_via_decomposition(&alpha, &beta, shift_n, n, Group::SpecialUnitary)
                .map(|c| c == casimir_su(&weight)),
            describe,
        );
        via_u.record_result(
            casimir_via_decomposition(&alpha, &beta, shift_n, n, Group::Unitary)
                .map(|c| c == casimir_u(&weight)),
            describe,
        );
        let offset = rng.gen_range(-5..=5i64);
        let moved = weight.shifted(offset);
        let x =
            rational(offset) + Rational::new(BigInt::from(weight.size()), BigInt::from(n as i64));
        shift.record(
            casimir_u(&moved) == casimir_su(&weight) + x.clone() * x,
            describe,
        );
        content.record(
            total_content(&alpha) == content_by_boxes(&alpha)
                && total_content(&beta) == content_by_boxes(&beta),
            describe,
        );
        let d = decompose(&weight);
        roundtrip.record(d.reconstruct() == weight, describe);
    }
    vec![
        via_su.finish(),
        via_u.finish(),
        shift.finish(),
        content.finish(),
        roundtrip.finish(),
    ]
}

fn su_weights_up_to(n: usize, max_size: i64) -> Vec<HighestWeight> {
    unitary_weights(n, max_size)
        .into_iter()
        .filter(|w| w.entries()[n - 1] == 0 && w.size() <= max_size)
        .map(|w| HighestWeight::special_unitary(w.entries().to_vec()).expect("last entry is zero"))
        .collect()
}

/// Quadrature indicator against the m-vector rule, SU(2) and SU(3), |λ| ≤ 6.
pub fn fs_agreement() -> Vec<CheckResult> {
    let mut agree = Tally::new(Suite::Fs, "fs_quadrature_equals_classify");
    let mut stable = Tally::new(Suite::Fs, "fs_quadrature_grid_doubling");
    for n in [2usize, 3] {
        for w in su_weights_up_to(n, 6) {
            let grid = TorusGrid::for_weight(&w);
            agree.record_result(
                fs_quadrature(&w, &grid).map(|q| q == fs_indicator(&w)),
                || format!("{:?}", w.entries()),
            );
            let fine = TorusGrid {
                points_per_angle: 2 * grid.points_per_angle,
                ..grid
            };
            let doubled = fs_integral(&w, &grid)
                .and_then(|a| fs_integral(&w, &fine).map(|b| (a - b).abs() < 1e-10));
            stable.record_result(doubled, || format!("{:?}", w.entries()));
        }
    }
    vec![agree.finish(), stable.finish()]
}

fn trunc(k_max: u32) -> TruncationParams {
    TruncationParams {
        k_max,
        dim_cutoff: 1 << 16,
        ..TruncationParams::default()
    }
}

/// 1 ≤ Z′_N(g,T) ≤ Z′_N(2,0), the genus-two chain against ζ, and the Λ-split
/// sandwiches at N = 30, γ = 0.4.
pub fn sandwiches() -> Vec<CheckResult> {
    let mut bracket = Tally::new(Suite::Sandwich, "one_below_z_below_zeta");
    let mut chain = Tally::new(Suite::Sandwich, "genus_two_gap_below_zeta_gap");
    let mut split = Tally::new(Suite::Sandwich, "lambda_split_sandwich");
    let t = trunc(20);
    for n in 2..=8usize {
        let spec = |g, area| SurfaceSpec::new(true, g, area, Group::SpecialUnitary, n);
        let cap = z_value(&spec(2, 0.0), &t);
        for g in 2..=4 {
            for area in [0.0, 0.5, 1.0, 2.0] {
                let outcome = cap.clone().and_then(|cap| {
                    z_value(&spec(g, area), &t).map(|z| z.upper >= 1.0 && z.lower <= cap.upper)
                });
                bracket.record_result(outcome, || format!("N={n} g={g} T={area}"));
            }
        }
        let gap = ZetaQuery::new(n, 2.0, 1 << 16)
            .and_then(|q| zeta_su(&q))
            .and_then(|zeta| {
                z_value(&spec(2, 1.0), &t)
                    .map(|z| z.max_distance(&crate::BoundedValue::exact(1.0)) <= zeta.lower - 1.0)
            });
        chain.record_result(gap, || format!("N={n}"));
    }
    let t = TruncationParams {
        gamma: 0.4,
        ..trunc(60)
    };
    for (orientable, genus, group, n) in [
        (true, 1, Group::SpecialUnitary, 30),
        (true, 1, Group::Unitary, 30),
        (false, 2, Group::SpecialUnitary, 30),
        (false, 2, Group::SpecialUnitary, 31),
        (false, 2, Group::Unitary, 30),
    ] {
        let outcome = SurfaceSpec::with_q(orientable, genus, 0.5, group, n)
            .and_then(|spec| s_decomposition(&spec, &t))
            .map(|d| d.sandwich_holds());
        split.record_result(outcome, || {
            format!("orientable={orientable} g={genus} {group} N={n}")
        });
    }
    vec![bracket.finish(), chain.finish(), split.finish()]
}

/// Coarse truncations must enclose fine ones.
pub fn tails() -> Vec<CheckResult> {
    let mut nested = Tally::new(Suite::Tails, "coarse_encloses_fine");
    let mut zeta = Tally::new(Suite::Tails, "zeta_cutoff_nesting");
    for (orientable, genus, group) in [
        (true, 1, Group::SpecialUnitary),
        (true, 1, Group::Unitary),
        (false, 2, Group::SpecialUnitary),
        (true, 2, Group::SpecialUnitary),
    ] {
        for n in [4usize, 6] {
            let outcome = SurfaceSpec::with_q(orientable, genus, 0.5, group, n).and_then(|spec| {
                let coarse = z_value(&spec, &trunc(20))?;
                let fine = z_value(&spec, &trunc(60))?;
                Ok(coarse.encloses(&fine))
            });
            nested.record_result(outcome, || {
                format!("orientable={orientable} g={genus} {group} N={n}")
            });
        }
    }
    for n in [2usize, 3, 5] {
        let outcome = (|| {
            let coarse = zeta_su(&ZetaQuery::new(n, 2.0, 1 << 10)?)?;
            let fine = zeta_su(&ZetaQuery::new(n, 2.0, 1 << 16)?)?;
            Ok(coarse.encloses(&fine))
        })();
        zeta.record_result(outcome, || format!("N={n}"));
    }
    vec![nested.finish(), zeta.finish()]
}

pub fn jacobi() -> CheckResult {
    let mut t = Tally::new(Suite::Jacobi, "jacobi_triple_product_defect");
    for (q, tol) in [(0.1, 1e-9), (0.5, 1e-9), (0.9, 1e-6)] {
        t.record_result(
            jacobi_triple_product_check(q).map(|c| c.defect <= tol && c.consistent()),
            || format!("q={q}"),
        );
    }
    t.finish()
}

/// d_λ·M^M ≥ (M+β_M)^M·d_α² for every β with at most M parts, M ≤ 5, |β| ≤ 8.
pub fn genus3() -> CheckResult {
    let mut t = Tally::new(Suite::Genus3, "genus_three_dimension_bound");
    for m in 1..=5usize {
        for beta in enumerate_partitions(8).filter(|b| b.len() <= m) {
            t.record_result(genus3_dimension_bound_check(&beta, m), || {
                format!("M={m} beta={:?}", beta.parts())
            });
        }
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn identities_hold_and_are_seeded() {
        let a = identities(5, 500);
        assert!(a.iter().all(|c| c.passed && c.cases == 500), "{a:?}");
        assert_eq!(a, identities(5, 500));
    }

    #[test]
    fn content_by_boxes_examples() {
        assert_eq!(
            content_by_boxes(&Partition::new(vec![3, 3, 2, 1]).unwrap()),
            -3
        );
        assert_eq!(content_by_boxes(&Partition::empty()), 0);
    }

    #[test]
    fn fs_suite_carries_unitary_section() {
        let report = run_verify(&VerifyConfig {
            suites: vec![Suite::Fs],
            ..VerifyConfig::default()
        });
        assert!(report.all_passed());
        let diag = report.unitary_fs.unwrap();
        assert!(diag.checked > 0 && !diag.mismatches.is_empty());
    }

    #[test]
    fn remaining_suites_pass() {
        for c in sandwiches()
            .into_iter()
            .chain(tails())
            .chain([jacobi(), genus3()])
        {
            assert!(c.passed, "{c:?}");
            assert!(c.cases > 0);
        }
    }
}

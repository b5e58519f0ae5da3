//! Independent slow paths: Weyl characters, Frobenius–Schur indicators by
//! quadrature on the maximal torus, literal Casimir sums and small-rank
//! Witten zeta values.

mod character;
mod quadrature;

pub use character::character_at;
pub use quadrature::{fs_integral, fs_integral_with, fs_quadrature, TorusGrid};

use crate::error::{Error, Result};
use crate::frobenius::fs_indicator;
use crate::summation::{BoundedValue, CompensatedSum, FLOAT_SLACK};
use crate::weights::{Group, HighestWeight, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Casimir read straight off its definition, one pair (i, j) at a time.
pub fn casimir_bruteforce(weight: &HighestWeight, variant: Group) -> Rational {
    let e = weight.entries();
    let n = e.len() as i64;
    let mut sum = Rational::from_integer(BigInt::from(0));
    for &x in e {
        sum += Rational::from_integer(BigInt::from(x * x));
    }
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            sum += Rational::from_integer(BigInt::from(e[i] - e[j]));
        }
    }
    let mut c = sum / Rational::from_integer(BigInt::from(n));
    if variant == Group::SpecialUnitary {
        let total: i64 = e.iter().sum();
        c -= Rational::new(BigInt::from(total * total), BigInt::from(n * n));
    }
    c
}

/// ζ_su(2)(s) or ζ_su(3)(s) from the explicit dimension formulas, summed
/// over m ≤ cutoff (each mᵢ ≤ cutoff for N = 3) with an integral tail.
pub fn zeta_small_n_closed(n: usize, s: f64, cutoff: u64) -> Result<BoundedValue> {
    if !(s > 1.0) {
        return Err(Error::InvalidParameter(format!(
            "s must exceed 1 (got {s})"
        )));
    }
    if cutoff == 0 {
        return Err(Error::CutoffTooSmall("cutoff must be at least 1".into()));
    }
    let c = cutoff as f64;
    match n {
        2 => {
            let partial: CompensatedSum = (1..=cutoff).rev().map(|m| (m as f64).powf(-s)).sum();
            let partial = partial.value();
            let lo = partial + (c + 1.0).powf(1.0 - s) / (s - 1.0);
            let hi = partial + c.powf(1.0 - s) / (s - 1.0);
            Ok(BoundedValue::new(
                lo * (1.0 - FLOAT_SLACK),
                hi * (1.0 + FLOAT_SLACK),
            ))
        }
        3 => {
            let mut acc = CompensatedSum::new();
            for m1 in (1..=cutoff).rev() {
                for m2 in (1..=cutoff).rev() {
                    let (a, b) = (m1 as f64, m2 as f64);
                    acc.add((a * b * (a + b) / 2.0).powf(-s));
                }
            }
            // pairs with m₁ > C: d ≥ m₁²m₂/2, so their mass is at most
            // 2^s ζ(s) C^{1−2s}/(2s−1); double for m₂ > C
            let zeta_s = 1.0 + 1.0 / (s - 1.0);
            let log_tail = s * std::f64::consts::LN_2
                + (1.0 - 2.0 * s) * c.ln()
                + (2.0 * zeta_s / (2.0 * s - 1.0)).ln();
            let partial = acc.value();
            Ok(BoundedValue::new(
                partial * (1.0 - FLOAT_SLACK),
                (partial + log_tail.exp()) * (1.0 + FLOAT_SLACK),
            ))
        }
        _ => Err(Error::InvalidParameter(format!(
            "closed forms exist for N = 2, 3 only (got {n})"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FsMismatch {
    pub weight: Vec<i64>,
    pub quadrature: i8,
    pub paper_rule: i8,
}

/// Unitary weights whose integral-defined indicator differs from the
/// m-vector rule. Collected, never reconciled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitaryFsReport {
    pub checked: usize,
    pub mismatches: Vec<FsMismatch>,
    pub unstable: Vec<Vec<i64>>,
}

/// Non-increasing U(n) weights with entries in [−bound, bound].
pub fn unitary_weights(n: usize, bound: i64) -> Vec<HighestWeight> {
    fn extend(prefix: &mut Vec<i64>, n: usize, lo: i64, hi: i64, out: &mut Vec<HighestWeight>) {
        if prefix.len() == n {
            out.push(HighestWeight::unitary(prefix.clone()).unwrap());
            return;
        }
        for v in (lo..=hi).rev() {
            prefix.push(v);
            extend(prefix, n, lo, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, -bound, bound, &mut out);
    out
}

pub fn unitary_fs_diagnostic(ranks: &[usize], bound: i64) -> UnitaryFsReport {
    let mut report = UnitaryFsReport {
        checked: 0,
        mismatches: Vec::new(),
        unstable: Vec::new(),
    };
    for &n in ranks {
        for w in unitary_weights(n, bound) {
            report.checked += 1;
            match fs_quadrature(&w, &TorusGrid::for_weight(&w)) {
                Ok(q) => {
                    let rule = fs_indicator(&w);
                    if q != rule {
                        report.mismatches.push(FsMismatch {
                            weight: w.entries().to_vec(),
                            quadrature: q,
                            paper_rule: rule,
                        });
                    }
                }
                Err(_) => report.unstable.push(w.entries().to_vec()),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests;

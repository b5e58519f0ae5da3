//! Partition functions whose dimension exponent is negative enough to reuse
//! the Witten zeta enumeration: orientable g ≥ 2 and, at T = 0,
//! non-orientable g ≥ 4.
//!
//! Terms are summed exactly over all weights with d_λ ≤ D. Every omitted
//! weight is non-trivial, so q^{c′₂} ≤ q^{1/2} by c′₂ ≥ k/2 ≥ 1/2, |ι| ≤ 1,
//! the unitary shift sum is at most its value at 0, and the remainder is
//! bounded by the zeta tail at s = 2g − 2 (resp. g − 2).

use super::{ShiftTable, SurfaceSpec};
use crate::error::Result;
use crate::frobenius::classify;
use crate::par::Execution;
use crate::summation::{BoundedValue, CompensatedSum};
use crate::weights::{casimir_su_f64, Group};
use crate::zeta::{
    auxiliary_exponents, excluded_mass_bound, visit_weights, weight_from_shifted_differences,
};

struct Acc {
    lower: CompensatedSum,
    upper: CompensatedSum,
    grid: Vec<CompensatedSum>,
}

pub(crate) fn dimension_sum(
    spec: &SurfaceSpec,
    dim_cutoff: u64,
    shifts: Option<&ShiftTable>,
    exec: Execution,
) -> Result<BoundedValue> {
    let n = spec.n;
    let s = if spec.orientable {
        2.0 * spec.genus as f64 - 2.0
    } else {
        spec.genus as f64 - 2.0
    };
    let ln_q = spec.ln_q();
    let exponents = auxiliary_exponents(s);
    let fs_power = (!spec.orientable).then_some(spec.genus);

    let acc = visit_weights(
        n,
        dim_cutoff as f64,
        exec,
        || Acc {
            lower: CompensatedSum::new(),
            upper: CompensatedSum::new(),
            grid: vec![CompensatedSum::new(); exponents.len()],
        },
        |acc: &mut Acc, m, d| {
            let log_d = d.ln();
            for (g, &e) in acc.grid.iter_mut().zip(&exponents) {
                g.add((-e * log_d).exp());
            }
            let w = weight_from_shifted_differences(m);
            let sign = match fs_power {
                None => 1.0,
                Some(g) => {
                    let iota = classify(&w).indicator();
                    if iota == 0 {
                        return;
                    }
                    f64::from(iota).powi(g as i32)
                }
            };
            let c = if ln_q == 0.0 { 0.0 } else { casimir_su_f64(&w) };
            let base = sign * (ln_q * c - s * log_d).exp();
            match shifts {
                None => {
                    acc.lower.add(base);
                    acc.upper.add(base);
                }
                Some(table) => {
                    let sv = table.by_size(w.size());
                    let (lo, hi) = if base >= 0.0 {
                        (base * sv.lower, base * sv.upper)
                    } else {
                        (base * sv.upper, base * sv.lower)
                    };
                    acc.lower.add(lo);
                    acc.upper.add(hi);
                }
            }
        },
        |a, b| {
            a.lower.merge(&b.lower);
            a.upper.merge(&b.upper);
            for (x, y) in a.grid.iter_mut().zip(b.grid.iter()) {
                x.merge(y);
            }
        },
    );

    let partials: Vec<f64> = acc.grid.iter().map(|g| g.value()).collect();
    let mut tail =
        excluded_mass_bound(n, s, dim_cutoff, &exponents, &partials) * (0.5 * ln_q).exp();
    if let Some(table) = shifts {
        tail *= table.peak().upper;
    }
    let lower = acc.lower.value();
    let upper = acc.upper.value();
    let slack = 1e-12 * lower.abs().max(upper.abs());
    if !tail.is_finite() {
        return Err(crate::error::Error::CutoffTooSmall(format!(
            "no finite tail bound at N={n}, s={s}, D={dim_cutoff}"
        )));
    }
    debug_assert!(spec.group == Group::Unitary || shifts.is_none());
    Ok(BoundedValue::new(lower - slack, upper + tail + slack))
}

//! Non-orientable surfaces of genus g ≥ 3 at positive area.
//!
//! Only self-dual weights have ι ≠ 0: λ_N(α, α) for N = 2M + 1, and
//! λ_N(α, β) with β = (α₁ + t, …, α_{M−1} + t, t) for N = 2M. These are
//! enumerated explicitly up to |α| + |β| ≤ k_max with exact d_λ and ι_λ.
//! The remainder is the Klein-bottle tail scaled by N^{2−g}, since every
//! omitted weight has d_λ ≥ N.

use super::cells::{cell_sum, Family};
use super::{ShiftTable, SurfaceSpec};
use crate::error::Result;
use crate::frobenius::fs_indicator;
use crate::summation::{BoundedValue, CompensatedSum};
use crate::weights::{
    build_su_weight, casimir_su_f64, dimension_log, enumerate_partitions, Partition,
};

/// Self-dual pairs (α, β) with |α| + |β| ≤ k_max.
pub(crate) fn self_dual_pairs(n: usize, k_max: u32) -> Vec<(Partition, Partition)> {
    let m = n / 2;
    let mut out = Vec::new();
    if n % 2 == 1 {
        for alpha in enumerate_partitions(k_max / 2) {
            if alpha.len() <= m {
                out.push((alpha.clone(), alpha));
            }
        }
        return out;
    }
    let mut t = 0u32;
    while (m as u32) * t <= k_max {
        let room = (k_max - m as u32 * t) / 2;
        for alpha in enumerate_partitions(room) {
            if alpha.len() + 1 > m {
                continue;
            }
            let mut parts: Vec<u32> = (1..m).map(|i| alpha.part(i) + t).collect();
            parts.push(t);
            let beta = Partition::new(parts).expect("non-increasing by construction");
            out.push((alpha, beta));
        }
        t += 1;
    }
    out
}

pub(crate) fn self_dual_sum(
    spec: &SurfaceSpec,
    k_max: u32,
    shifts: Option<&ShiftTable>,
) -> Result<BoundedValue> {
    let n = spec.n;
    let g = spec.genus as i32;
    let ln_q = spec.ln_q();
    let mut lower = CompensatedSum::new();
    let mut upper = CompensatedSum::new();
    for (alpha, beta) in self_dual_pairs(n, k_max) {
        let w = build_su_weight(&alpha, &beta, n)?;
        let iota = fs_indicator(&w);
        if iota == 0 {
            continue;
        }
        let log_term = ln_q * casimir_su_f64(&w) + f64::from(2 - g) * dimension_log(&w).log_value;
        let base = f64::from(iota).powi(g) * log_term.exp();
        match shifts {
            None => {
                lower.add(base);
                upper.add(base);
            }
            Some(table) => {
                let sv = table.by_size(w.size());
                let (lo, hi) = if base >= 0.0 {
                    (base * sv.lower, base * sv.upper)
                } else {
                    (base * sv.upper, base * sv.lower)
                };
                lower.add(lo);
                upper.add(hi);
            }
        }
    }
    let mut tail = cell_sum(Family::Klein, n, ln_q, k_max)?.tail_mass() * (n as f64).powi(2 - g);
    if let Some(table) = shifts {
        tail *= table.peak().upper;
    }
    let (lo, hi) = (lower.value(), upper.value());
    let slack = 1e-12 * lo.abs().max(hi.abs());
    Ok(BoundedValue::new(lo - slack, hi + tail + slack))
}

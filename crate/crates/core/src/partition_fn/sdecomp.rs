//! The four-way Λ-split of the torus and Klein-bottle sums.
//!
//! With J = ⌊N^γ⌋, a weight is in Λ₁ when |α|, |β| ≤ J, in Λ₂ when only
//! |β| ≤ J, in Λ₃ when only |α| ≤ J, and in Λ₄ otherwise. S₁ is compared to
//! the explicit sandwich built from Σ_{|α|,|β| ≤ J} q^{|α|+|β|} (torus) or
//! Σ_{|α| ≤ J} q^{2|α|} (Klein bottle).

use super::cells::{cell_sum, Family};
use super::{theta_value_with, ShiftTable, SurfaceSpec, TruncationParams};
use crate::error::{Error, Result};
use crate::summation::{BoundedValue, CompensatedSum};
use crate::weights::{parity_caps, partition_counts, Group};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SDecomposition {
    /// J = ⌊N^γ⌋.
    pub size_cap: u64,
    /// S₁, S₂, S₃, S₄.
    pub parts: [BoundedValue; 4],
    /// Explicit lower and upper bounds on S₁.
    pub sandwich: BoundedValue,
}

impl SDecomposition {
    pub fn total(&self) -> BoundedValue {
        self.parts
            .iter()
            .skip(1)
            .fold(self.parts[0], |acc, p| acc.add(p))
    }

    /// Whether the S₁ enclosure lies inside the sandwich.
    pub fn sandwich_holds(&self) -> bool {
        self.sandwich.encloses(&self.parts[0])
    }
}

fn region(alpha: u64, beta: u64, cap: u64) -> usize {
    match (alpha <= cap, beta <= cap) {
        (true, true) => 0,
        (false, true) => 1,
        (true, false) => 2,
        (false, false) => 3,
    }
}

pub fn s_decomposition(spec: &SurfaceSpec, trunc: &TruncationParams) -> Result<SDecomposition> {
    spec.validate()?;
    trunc.validate()?;
    let family = match (spec.orientable, spec.genus) {
        (true, 1) => Family::Torus,
        (false, 2) => Family::Klein,
        _ => {
            return Err(Error::InvalidParameter(
                "the Λ-split applies to the torus and the Klein bottle".into(),
            ))
        }
    };
    if !(spec.area > 0.0) {
        return Err(Error::UnsupportedRegime("the Λ-split needs T > 0".into()));
    }
    let n = spec.n;
    let nf = n as f64;
    let gamma = trunc.gamma;
    let cap = nf.powf(gamma).floor() as u64;
    let rows = match family {
        Family::Torus => parity_caps(n).0,
        Family::Klein if n % 2 == 1 => n / 2,
        Family::Klein => n / 2 - 1,
    };
    if cap as usize > rows {
        return Err(Error::AmbientTooSmall {
            n,
            required: 2 * cap as usize + 2,
        });
    }
    let k_max = trunc.k_max.max(2 * cap as u32);
    let ln_q = spec.ln_q();
    let n_max = trunc.n_max_for(spec.area);
    let shifts = (spec.group == Group::Unitary).then(|| ShiftTable::new(ln_q, n_max, n));
    let cs = cell_sum(family, n, ln_q, k_max)?;

    let mut lower: [CompensatedSum; 4] = Default::default();
    let mut upper: [CompensatedSum; 4] = Default::default();
    let mut tails = [0.0f64; 4];
    for c in &cs.cells {
        let r = region(c.alpha_size, c.beta_size, cap);
        let s = shifts
            .as_ref()
            .map_or(BoundedValue::exact(1.0), |t| t.get(c.shift));
        lower[r].add(c.value * s.lower);
        upper[r].add(c.value * s.upper);
    }
    let peak = shifts.as_ref().map_or(1.0, |t| t.peak().upper);
    for c in &cs.tail_cells {
        tails[region(c.alpha_size, c.beta_size, cap)] += c.value * peak;
    }
    for t in tails.iter_mut().skip(1) {
        *t += cs.far_tail * peak;
    }
    let parts: [BoundedValue; 4] = std::array::from_fn(|r| {
        let (lo, hi) = (lower[r].value(), upper[r].value());
        let slack = 1e-12 * hi;
        BoundedValue::new(lo - slack, hi + tails[r] + slack)
    });

    let counts = partition_counts(cap as usize);
    let q_pow = |x: f64| (ln_q * x).exp();
    let e1 = 4.0 * nf.powf(2.0 * gamma - 1.0);
    let e2 = 4.0 * nf.powf(2.0 * gamma - 2.0);
    let sandwich = match family {
        Family::Torus => {
            let single: f64 = counts
                .iter()
                .enumerate()
                .map(|(j, &p)| p as f64 * q_pow(j as f64))
                .sum();
            let base = single * single;
            match spec.group {
                Group::SpecialUnitary => {
                    BoundedValue::new(q_pow(e1 + e2) * base, q_pow(-e1) * base)
                }
                Group::Unitary => {
                    let delta = nf.powf(gamma - 1.0);
                    let (lo_sum, hi_sum) = tilted_theta(ln_q, delta, n_max);
                    BoundedValue::new(
                        q_pow(e1 + 2.0 * e2) * lo_sum * base,
                        q_pow(-e1) * hi_sum * base,
                    )
                }
            }
        }
        Family::Klein => {
            let base: f64 = counts
                .iter()
                .enumerate()
                .map(|(j, &p)| p as f64 * q_pow(2.0 * j as f64))
                .sum();
            let low_exp = if n % 2 == 1 { e1 } else { e1 + e2 };
            let su = BoundedValue::new(q_pow(low_exp) * base, q_pow(-e1) * base);
            match spec.group {
                Group::SpecialUnitary => su,
                Group::Unitary => su.mul_nonneg(&theta_value_with(spec.area, n_max)?),
            }
        }
    };
    let sandwich = BoundedValue::new(
        sandwich.lower * (1.0 - 1e-13),
        sandwich.upper * (1.0 + 1e-13),
    );
    Ok(SDecomposition {
        size_cap: cap,
        parts,
        sandwich,
    })
}

/// (Σ_{|n| ≤ n_max} q^{n² + 4|n|δ}, upper bound on Σ_n q^{n² − 4|n|δ}).
fn tilted_theta(ln_q: f64, delta: f64, n_max: u32) -> (f64, f64) {
    let mut plus = 0.0;
    let mut minus = 0.0;
    for n in -(n_max as i64)..=(n_max as i64) {
        let x = n as f64;
        plus += (ln_q * (x * x + 4.0 * x.abs() * delta)).exp();
        minus += (ln_q * (x * x - 4.0 * x.abs() * delta)).exp();
    }
    // n² − 4nδ = (n − 2δ)² − 4δ²; the omitted |n| > n_max have n − 2δ ≥ u
    let u = n_max as f64 + 1.0 - 2.0 * delta;
    let tail = if u > 0.0 {
        2.0 * (ln_q * (u * u - 4.0 * delta * delta)).exp() / (-(2.0 * ln_q * u).exp_m1())
    } else {
        f64::INFINITY
    };
    (plus, minus + tail)
}

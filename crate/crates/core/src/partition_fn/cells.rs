//! Grouped sums over almost-flat weights for the torus and the Klein bottle.
//!
//! There the dimension drops out and q^{c′₂(λ)} depends on λ = λ_N(α, β)
//! only through |α|, |β| and the contents K(α), K(β). For each size, the
//! content factor summed over all partitions with a bounded number of rows
//! is a small dynamic programme, so every cell (|α|, |β|) of the truncated
//! region is evaluated exactly. Cells beyond the truncation are bounded by
//! (number of pairs) × q^{minimal c′₂}, and everything past a far cutoff by
//! p₂(k) ≤ (k + 1)·exp(2π√(k/3)) together with c′₂ ≥ k/2.

use crate::error::{Error, Result};
use crate::weights::{bounded_partition_counts, min_content, parity_caps};
use std::f64::consts::PI;

/// Far tail target; every partition function here is at least 1.
const FAR_TAIL_TARGET: f64 = 1e-18;
const MAX_TAIL_SPAN: u64 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Family {
    /// All pairs (α, β) within the parity caps.
    Torus,
    /// Self-dual weights only: α = β (odd N) or α = β̃ (even N).
    Klein,
}

/// |λ|/N modulo 1, as an exact fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Shift {
    pub num: i64,
    pub den: i64,
}

impl Shift {
    pub fn zero() -> Self {
        Shift { num: 0, den: 1 }
    }

    pub fn key(self) -> (i64, i64) {
        (self.num.rem_euclid(self.den), self.den)
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Cell {
    pub alpha_size: u64,
    pub beta_size: u64,
    pub shift: Shift,
    /// Exact mass inside the truncation; an upper bound in the tail.
    pub value: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct CellSum {
    pub cells: Vec<Cell>,
    pub tail_cells: Vec<Cell>,
    pub far_tail: f64,
}

impl CellSum {
    pub fn tail_mass(&self) -> f64 {
        self.tail_cells.iter().map(|c| c.value).sum::<f64>() + self.far_tail
    }
}

/// Σ_{α ⊢ a, ℓ(α) ≤ rows} exp(ln_base·(a + (2/N)K(α))) for a = 0..=a_max.
///
/// Rows are added bottom-up; `h[s][v]` holds the mass of the rows processed
/// so far with total s and top row at most v. Row i with length v carries
/// exp(ln_base·(v + (2/N)(v(v+1)/2 − iv))).
pub(crate) fn content_weighted_counts(
    ln_base: f64,
    n: usize,
    rows: usize,
    a_max: usize,
) -> Vec<f64> {
    let rows = rows.min(a_max);
    let width = a_max + 1;
    let mut h = vec![0.0f64; width * width];
    h[..width].fill(1.0);
    let scale = 2.0 / n as f64;
    let mut next = vec![0.0f64; width * width];
    for i in (1..=rows).rev() {
        let w: Vec<f64> = (0..width)
            .map(|v| {
                let v = v as f64;
                (ln_base * (v + scale * (v * (v + 1.0) / 2.0 - i as f64 * v))).exp()
            })
            .collect();
        for s in 0..width {
            let mut run = 0.0;
            for v in 0..width {
                if v <= s {
                    run += w[v] * h[(s - v) * width + v];
                }
                next[s * width + v] = run;
            }
        }
        std::mem::swap(&mut h, &mut next);
    }
    (0..width).map(|a| h[a * width + a]).collect()
}

fn log_far_term(ln_q: f64, k: u64) -> f64 {
    let kf = k as f64;
    (kf + 1.0).ln() + 2.0 * PI * (kf / 3.0).sqrt() + 0.5 * ln_q * kf
}

/// Bound on Σ_{k > cut} p₂(k) q^{k/2}, or `None` if the ratio test fails.
fn far_bound(ln_q: f64, cut: u64) -> Option<f64> {
    let a = log_far_term(ln_q, cut + 1);
    let ratio = (log_far_term(ln_q, cut + 2) - a).exp();
    (ratio < 1.0).then(|| a.exp() / (1.0 - ratio))
}

/// Cutoff past which the far bound is negligible; independent of k_max so
/// that enclosures at different truncations nest.
fn far_cutoff(ln_q: f64, k_max: u64) -> Result<(u64, f64)> {
    let mut k = 0u64;
    loop {
        if let Some(b) = far_bound(ln_q, k) {
            if b <= FAR_TAIL_TARGET {
                break;
            }
        }
        k += 1;
        if k > MAX_TAIL_SPAN {
            return Err(Error::CutoffTooSmall(format!(
                "q = {:.6} too close to 1 for the certified pair-count tail",
                ln_q.exp()
            )));
        }
    }
    let cut = k.max(k_max);
    Ok((cut, far_bound(ln_q, cut).expect("ratio decreases in k")))
}

fn kmin(a: u64, rows: usize) -> Option<f64> {
    min_content(a, rows).map(|k| k as f64)
}

pub(crate) fn cell_sum(family: Family, n: usize, ln_q: f64, k_max: u32) -> Result<CellSum> {
    let a_max = k_max as usize;
    let (cut, far_tail) = far_cutoff(ln_q, k_max as u64)?;
    let nf = n as f64;
    let mut cells = Vec::new();
    let mut tail_cells = Vec::new();
    match family {
        Family::Torus => {
            let (l1, l2) = parity_caps(n);
            let f1 = content_weighted_counts(ln_q, n, l1, a_max);
            let f2 = content_weighted_counts(ln_q, n, l2, a_max);
            for a in 0..=a_max {
                for b in 0..=(a_max - a) {
                    let d = a as f64 - b as f64;
                    let value = f1[a] * f2[b] * (-ln_q * d * d / (nf * nf)).exp();
                    if value > 0.0 {
                        cells.push(Cell {
                            alpha_size: a as u64,
                            beta_size: b as u64,
                            shift: Shift {
                                num: a as i64 - b as i64,
                                den: n as i64,
                            },
                            value,
                        });
                    }
                }
            }
            let c1 = bounded_partition_counts(cut as usize, l1);
            let c2 = bounded_partition_counts(cut as usize, l2);
            for k in (k_max as u64 + 1)..=cut {
                for a in 0..=k {
                    let b = k - a;
                    let count = c1[a as usize] * c2[b as usize];
                    if count == 0.0 {
                        continue;
                    }
                    let (Some(ka), Some(kb)) = (kmin(a, l1), kmin(b, l2)) else {
                        continue;
                    };
                    let d = a as f64 - b as f64;
                    let exact = k as f64 + (2.0 / nf) * (ka + kb) - d * d / (nf * nf);
                    let lb = exact.max(0.5 * k as f64);
                    tail_cells.push(Cell {
                        alpha_size: a,
                        beta_size: b,
                        shift: Shift {
                            num: a as i64 - b as i64,
                            den: n as i64,
                        },
                        value: count * (ln_q * lb).exp(),
                    });
                }
            }
        }
        Family::Klein if n % 2 == 1 => {
            let m = n / 2;
            let f = content_weighted_counts(2.0 * ln_q, n, m, a_max / 2);
            for (a, &value) in f.iter().enumerate() {
                if value > 0.0 {
                    cells.push(Cell {
                        alpha_size: a as u64,
                        beta_size: a as u64,
                        shift: Shift::zero(),
                        value,
                    });
                }
            }
            let c = bounded_partition_counts(cut as usize / 2, m);
            for a in (a_max as u64 / 2 + 1)..=(cut / 2) {
                let count = c[a as usize];
                let Some(ka) = kmin(a, m) else { continue };
                if count == 0.0 {
                    continue;
                }
                let lb = (2.0 * a as f64 + 4.0 * ka / nf).max(a as f64);
                tail_cells.push(Cell {
                    alpha_size: a,
                    beta_size: a,
                    shift: Shift::zero(),
                    value: count * (ln_q * lb).exp(),
                });
            }
        }
        Family::Klein => {
            // N = 2M, β = (α₁ + t, …, α_{M−1} + t, t): |β| = |α| + Mt and
            // c′₂ = 2|α| + (4/N)K(α) + t|α|/M + Mt/2 + t²/4.
            let m = n / 2;
            let mf = m as f64;
            let rows = m - 1;
            let f = content_weighted_counts(2.0 * ln_q, n, rows, a_max / 2);
            let extra = |a: f64, t: f64| t * a / mf + mf * t / 2.0 + t * t / 4.0;
            let mut t = 0usize;
            while m * t <= a_max {
                let t_f = t as f64;
                for a in 0..=((a_max - m * t) / 2) {
                    let value = f[a] * (ln_q * extra(a as f64, t_f)).exp();
                    if value > 0.0 {
                        cells.push(Cell {
                            alpha_size: a as u64,
                            beta_size: (a + m * t) as u64,
                            shift: Shift {
                                num: -(t as i64),
                                den: 2,
                            },
                            value,
                        });
                    }
                }
                t += 1;
            }
            let c = bounded_partition_counts(cut as usize / 2, rows);
            let cut = cut as usize;
            let mut t = 0usize;
            while m * t <= cut {
                let t_f = t as f64;
                for a in 0..=((cut - m * t) / 2) {
                    let k = 2 * a + m * t;
                    if k <= a_max {
                        continue;
                    }
                    let count = c[a];
                    let Some(ka) = kmin(a as u64, rows) else {
                        continue;
                    };
                    if count == 0.0 {
                        continue;
                    }
                    let af = a as f64;
                    let exact = 2.0 * af + 4.0 * ka / nf + extra(af, t_f);
                    let lb = exact.max(0.5 * k as f64);
                    tail_cells.push(Cell {
                        alpha_size: a as u64,
                        beta_size: (a + m * t) as u64,
                        shift: Shift {
                            num: -(t as i64),
                            den: 2,
                        },
                        value: count * (ln_q * lb).exp(),
                    });
                }
                t += 1;
            }
        }
    }
    Ok(CellSum {
        cells,
        tail_cells,
        far_tail,
    })
}

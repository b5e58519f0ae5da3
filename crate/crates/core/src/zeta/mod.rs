//! Witten zeta function ζ_su(N)(s) = Σ_{λ ∈ ŜU(N)} d_λ^{−s} with certified
//! enclosures.
//!
//! The partial sum runs over all weights of dimension at most `D`. Weights
//! beyond the cutoff are bounded through an auxiliary exponent s′ ∈ (1, s):
//!
//! Σ_{d > D} d^{−s} ≤ D^{−(s−s′)} Σ_{d > D} d^{−s′} ≤ D^{−(s−s′)} (U(s′) − P(s′)),
//!
//! where U is a certified upper bound on ζ_su(N)(s′) and P the partial sum at
//! s′ accumulated during the same enumeration. The tail reported is the
//! smallest of these over a grid of s′, the fixed-midpoint bound of
//! [`tail_bound`], and for N = 2 the Riemann integral tail.

mod bounds;
mod enumerate;

pub use bounds::{binom_double_tail, product_upper_bound, riemann_zeta_upper};
pub use enumerate::{
    binomial_product_bound, enumerate_weights_by_dimension, enumerate_weights_by_dimension_with,
};
pub(crate) use enumerate::{visit_weights, weight_from_shifted_differences};

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::summation::{BoundedValue, CompensatedSum, FLOAT_SLACK};

/// Largest cutoff tried when driving to a target width.
pub const MAX_DIM_CUTOFF: u64 = 1 << 40;

/// Default cutoff when none is supplied.
pub const DEFAULT_DIM_CUTOFF: u64 = 1 << 20;

const GRID_POINTS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaQuery {
    pub n: usize,
    pub s: f64,
    pub dim_cutoff: u64,
}

impl ZetaQuery {
    pub fn new(n: usize, s: f64, dim_cutoff: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("N must be positive".into()));
        }
        if !(s > 1.0) || !s.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "s must exceed 1 (got {s})"
            )));
        }
        if dim_cutoff == 0 {
            return Err(Error::CutoffTooSmall(
                "dimension cutoff must be positive".into(),
            ));
        }
        Ok(Self { n, s, dim_cutoff })
    }
}

/// Auxiliary exponents used for the tail, strictly between 1 and s.
pub(crate) fn auxiliary_exponents(s: f64) -> Vec<f64> {
    (1..=GRID_POINTS)
        .map(|j| 1.0 + (s - 1.0) * j as f64 / (GRID_POINTS + 1) as f64)
        .collect()
}

/// Running sums of d^{−s} and of d^{−s′} over the auxiliary grid.
#[derive(Debug, Clone)]
pub(crate) struct PowerSums {
    pub main: CompensatedSum,
    pub grid: Vec<CompensatedSum>,
    pub count: u64,
}

impl PowerSums {
    pub fn new(grid_len: usize) -> Self {
        Self {
            main: CompensatedSum::new(),
            grid: vec![CompensatedSum::new(); grid_len],
            count: 0,
        }
    }

    pub fn add_grid(&mut self, exponents: &[f64], log_d: f64) {
        for (acc, &e) in self.grid.iter_mut().zip(exponents) {
            acc.add((-e * log_d).exp());
        }
    }

    pub fn merge(&mut self, other: PowerSums) {
        self.main.merge(&other.main);
        for (a, b) in self.grid.iter_mut().zip(other.grid.iter()) {
            a.merge(b);
        }
        self.count += other.count;
    }
}

/// Bound on Σ_{d_λ > D} d_λ^{−s} given the partial sums at the auxiliary
/// exponents over all weights with d_λ ≤ D.
pub(crate) fn excluded_mass_bound(
    n: usize,
    s: f64,
    dim_cutoff: u64,
    exponents: &[f64],
    grid_partials: &[f64],
) -> f64 {
    if n == 1 {
        return 0.0;
    }
    let d = dim_cutoff as f64;
    let mut best = midpoint_tail(n, s, dim_cutoff);
    if n == 2 {
        best = best.min(d.powf(1.0 - s) / (s - 1.0));
    }
    for (&e, &partial) in exponents.iter().zip(grid_partials) {
        let upper = product_upper_bound(n, e);
        let rest = (upper - partial * (1.0 - FLOAT_SLACK)).max(0.0);
        best = best.min(d.powf(-(s - e)) * rest);
    }
    best * (1.0 + 1e-12)
}

fn midpoint_tail(n: usize, s: f64, dim_cutoff: u64) -> f64 {
    if n == 1 {
        return 0.0;
    }
    let sp = 0.5 * (1.0 + s);
    (dim_cutoff as f64).powf(-(s - sp)) * binom_double_tail(sp).exp()
}

/// D^{−(s−s′)}·exp(binom_double_tail(s′)) with s′ = (1+s)/2, sharpened to
/// D^{1−s}/(s−1) for N = 2.
pub fn tail_bound(q: &ZetaQuery) -> f64 {
    let t = midpoint_tail(q.n, q.s, q.dim_cutoff);
    if q.n == 2 {
        t.min((q.dim_cutoff as f64).powf(1.0 - q.s) / (q.s - 1.0))
    } else {
        t
    }
}

/// Certified enclosure of ζ_su(N)(s).
pub fn zeta_su(q: &ZetaQuery) -> Result<BoundedValue> {
    zeta_su_with(q, Execution::default())
}

pub fn zeta_su_with(q: &ZetaQuery, exec: Execution) -> Result<BoundedValue> {
    if q.n == 1 {
        return Ok(BoundedValue::exact(1.0));
    }
    let exponents = if q.n >= 3 {
        auxiliary_exponents(q.s)
    } else {
        Vec::new()
    };
    let s = q.s;
    let sums = visit_weights(
        q.n,
        q.dim_cutoff as f64,
        exec,
        || PowerSums::new(exponents.len()),
        |acc: &mut PowerSums, _, d| {
            let log_d = d.ln();
            acc.main.add((-s * log_d).exp());
            acc.add_grid(&exponents, log_d);
            acc.count += 1;
        },
        |a, b| a.merge(b),
    );
    let partials: Vec<f64> = sums.grid.iter().map(|g| g.value()).collect();
    let tail = excluded_mass_bound(q.n, s, q.dim_cutoff, &exponents, &partials);
    if !tail.is_finite() {
        return Err(Error::CutoffTooSmall(format!(
            "tail bound is not finite for N={}, s={}, D={}",
            q.n, q.s, q.dim_cutoff
        )));
    }
    Ok(BoundedValue::from_partial_and_tail(sums.main.value(), tail))
}

/// Raises the cutoff geometrically until the enclosure width is at most
/// `target_width`. Returns the enclosure and the cutoff used.
pub fn zeta_su_to_width(
    n: usize,
    s: f64,
    target_width: f64,
    exec: Execution,
) -> Result<(BoundedValue, u64)> {
    if !(target_width > 0.0) {
        return Err(Error::InvalidParameter(
            "target width must be positive".into(),
        ));
    }
    let mut d: u64 = 1 << 10;
    if n == 2 {
        // the width is about D^{1−s}/(s−1)
        let guess = ((s - 1.0) * target_width).powf(-1.0 / (s - 1.0)) * 1.05;
        if guess.is_finite() && guess > d as f64 {
            d = (guess.ceil() as u64).min(MAX_DIM_CUTOFF);
        }
    }
    loop {
        let q = ZetaQuery::new(n, s, d)?;
        let z = zeta_su_with(&q, exec)?;
        if z.width() <= target_width {
            return Ok((z, d));
        }
        if d >= MAX_DIM_CUTOFF {
            return Err(Error::CutoffTooSmall(format!(
                "width {:.3e} > {target_width:.3e} at the largest cutoff {d}",
                z.width()
            )));
        }
        d = (d.saturating_mul(8)).min(MAX_DIM_CUTOFF);
    }
}

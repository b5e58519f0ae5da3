//! Yang–Mills partition functions on compact surfaces.
//!
//! With q = e^{−T/2}, the special unitary sums are
//!
//! Z′_N(g, T) = Σ_{λ ∈ ŜU(N)} q^{c′₂(λ)} d_λ^{2−2g}   (orientable),
//! Z′⁻_N(g, T) = Σ_{λ ∈ ŜU(N)} q^{c′₂(λ)} d_λ^{2−g} ι_λ^g   (non-orientable),
//!
//! and the unitary ones run over Û(N) with c₂. Writing a unitary weight as
//! λ + n with λ ∈ ŜU(N) gives c₂(λ + n) = c′₂(λ) + (n + |λ|/N)², so the
//! unitary sum is the special unitary one with each term multiplied by the
//! shift sum Σ_n q^{(n + |λ|/N)²}.

mod cells;
mod dimension_path;
mod sdecomp;
mod selfdual;
mod theta;

pub use sdecomp::{s_decomposition, SDecomposition};
pub use theta::{
    auto_n_max, jacobi_triple_product_check, partition_product, shift_sum, theta_value,
    theta_value_with, JacobiCheck, ProductVariant,
};

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::summation::{BoundedValue, CompensatedSum};
use crate::weights::{build_su_weight, dimension_exact, Group, HighestWeight, Partition};
use crate::zeta::DEFAULT_DIM_CUTOFF;
use cells::{cell_sum, CellSum, Family, Shift};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub orientable: bool,
    pub genus: u32,
    /// Area T ≥ 0.
    pub area: f64,
    pub group: Group,
    pub n: usize,
}

impl SurfaceSpec {
    pub fn new(orientable: bool, genus: u32, area: f64, group: Group, n: usize) -> Self {
        Self {
            orientable,
            genus,
            area,
            group,
            n,
        }
    }

    /// Builds the surface from q = e^{−T/2} ∈ (0, 1].
    pub fn with_q(orientable: bool, genus: u32, q: f64, group: Group, n: usize) -> Result<Self> {
        if !(q > 0.0 && q <= 1.0) {
            return Err(Error::InvalidQ(q));
        }
        Ok(Self::new(orientable, genus, -2.0 * q.ln(), group, n))
    }

    pub fn q(&self) -> f64 {
        (-0.5 * self.area).exp()
    }

    pub(crate) fn ln_q(&self) -> f64 {
        -0.5 * self.area
    }

    /// Exponent of d_λ: 2 − 2g or 2 − g.
    pub fn dimension_exponent(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            2 - self.genus as i64
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("N must be positive".into()));
        }
        if !(self.area >= 0.0) || !self.area.is_finite() {
            return Err(Error::NonPositiveArea(self.area));
        }
        if !self.orientable && self.genus == 0 {
            return Err(Error::InvalidParameter(
                "a non-orientable surface has genus at least 1".into(),
            ));
        }
        Ok(())
    }

    fn excluded_surface(&self) -> Option<&'static str> {
        match (self.orientable, self.genus) {
            (true, 0) => Some("the sphere is not covered"),
            (false, 1) => Some("the projective plane is not covered"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationParams {
    /// Cap on |α| + |β| for the almost-flat enumerations.
    pub k_max: u32,
    /// Cap on |n| in the unitary shift sums; `None` picks it from T.
    pub n_max: Option<u32>,
    /// Λ-split exponent, used by [`s_decomposition`] only.
    pub gamma: f64,
    /// Dimension cutoff for the dimension-ordered paths.
    pub dim_cutoff: u64,
}

impl Default for TruncationParams {
    fn default() -> Self {
        Self {
            k_max: 60,
            n_max: None,
            gamma: 0.4,
            dim_cutoff: DEFAULT_DIM_CUTOFF,
        }
    }
}

impl TruncationParams {
    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(Error::InvalidParameter("k_max must be positive".into()));
        }
        if !(self.gamma > 0.0 && self.gamma < 0.5) {
            return Err(Error::InvalidParameter(format!(
                "gamma must lie in (0, 1/2), got {}",
                self.gamma
            )));
        }
        if self.dim_cutoff == 0 {
            return Err(Error::CutoffTooSmall(
                "dimension cutoff must be positive".into(),
            ));
        }
        if self.n_max == Some(0) {
            return Err(Error::InvalidParameter("n_max must be positive".into()));
        }
        Ok(())
    }

    pub fn n_max_for(&self, area: f64) -> u32 {
        self.n_max.unwrap_or_else(|| auto_n_max(area))
    }
}

/// Shift sums S(x) = Σ_n q^{(n + x)²}, memoised on the residues r/N.
pub(crate) struct ShiftTable {
    ln_q: f64,
    n_max: u32,
    by_residue: Vec<BoundedValue>,
    half: BoundedValue,
}

impl ShiftTable {
    pub fn new(ln_q: f64, n_max: u32, n: usize) -> Self {
        let by_residue = (0..n)
            .map(|r| shift_sum(ln_q, r as f64 / n as f64, n_max))
            .collect();
        Self {
            ln_q,
            n_max,
            by_residue,
            half: shift_sum(ln_q, 0.5, n_max),
        }
    }

    /// S(|λ|/N).
    pub fn by_size(&self, size: i64) -> BoundedValue {
        self.by_residue[size.rem_euclid(self.by_residue.len() as i64) as usize]
    }

    pub fn peak(&self) -> BoundedValue {
        self.by_residue[0]
    }

    fn get(&self, shift: Shift) -> BoundedValue {
        let (r, den) = shift.key();
        if r == 0 {
            self.peak()
        } else if den == self.by_residue.len() as i64 {
            self.by_residue[r as usize]
        } else if 2 * r == den {
            self.half
        } else {
            shift_sum(self.ln_q, shift.value(), self.n_max)
        }
    }
}

fn unsupported(msg: impl Into<String>) -> Error {
    Error::UnsupportedRegime(msg.into())
}

/// Sums grouped cells, multiplying in the shift sums for the unitary group.
fn assemble(cs: &CellSum, shifts: Option<&ShiftTable>) -> BoundedValue {
    let mut lower = CompensatedSum::new();
    let mut upper = CompensatedSum::new();
    for c in &cs.cells {
        match shifts {
            None => {
                lower.add(c.value);
                upper.add(c.value);
            }
            Some(t) => {
                let s = t.get(c.shift);
                lower.add(c.value * s.lower);
                upper.add(c.value * s.upper);
            }
        }
    }
    let mut tail = cs.tail_mass();
    if let Some(t) = shifts {
        tail *= t.peak().upper;
    }
    let (lo, hi) = (lower.value(), upper.value());
    let slack = 1e-12 * hi.abs();
    BoundedValue::new(lo - slack, hi + tail + slack)
}

/// Certified enclosure of Z_N, Z′_N, Z⁻_N or Z′⁻_N.
pub fn z_value(spec: &SurfaceSpec, trunc: &TruncationParams) -> Result<BoundedValue> {
    z_value_with(spec, trunc, Execution::default())
}

pub fn z_value_with(
    spec: &SurfaceSpec,
    trunc: &TruncationParams,
    exec: Execution,
) -> Result<BoundedValue> {
    spec.validate()?;
    trunc.validate()?;
    if let Some(why) = spec.excluded_surface() {
        return Err(unsupported(why));
    }
    let zero_area = spec.area == 0.0;
    if zero_area && spec.group == Group::Unitary {
        return Err(unsupported(
            "T = 0 with the unitary group: the shift sum diverges",
        ));
    }
    if spec.n == 1 {
        return match spec.group {
            Group::SpecialUnitary => Ok(BoundedValue::exact(1.0)),
            Group::Unitary => theta_value_with(spec.area, trunc.n_max_for(spec.area)),
        };
    }
    let shifts = (spec.group == Group::Unitary)
        .then(|| ShiftTable::new(spec.ln_q(), trunc.n_max_for(spec.area), spec.n));
    let shifts = shifts.as_ref();
    let ln_q = spec.ln_q();
    match (spec.orientable, spec.genus, zero_area) {
        (true, 1, true) => Err(unsupported(
            "T = 0 on the torus: the generating function diverges at q = 1",
        )),
        (false, 2, true) => Err(unsupported(
            "T = 0 on the Klein bottle: the sum diverges at q = 1",
        )),
        (false, 3, true) => Err(unsupported(
            "T = 0 for non-orientable genus 3: no certified tail at dimension exponent −1",
        )),
        (true, 1, false) => Ok(assemble(
            &cell_sum(Family::Torus, spec.n, ln_q, trunc.k_max)?,
            shifts,
        )),
        (false, 2, false) => Ok(assemble(
            &cell_sum(Family::Klein, spec.n, ln_q, trunc.k_max)?,
            shifts,
        )),
        (false, _, false) => selfdual::self_dual_sum(spec, trunc.k_max, shifts),
        _ => dimension_path::dimension_sum(spec, trunc.dim_cutoff, shifts, exec),
    }
}

/// Large-N limit of the partition function; `spec.n` is ignored.
pub fn limit_value(spec: &SurfaceSpec) -> Result<BoundedValue> {
    let probe = SurfaceSpec { n: 1, ..*spec };
    probe.validate()?;
    if let Some(why) = spec.excluded_surface() {
        return Err(unsupported(why));
    }
    let zero_area = spec.area == 0.0;
    if zero_area && spec.group == Group::Unitary {
        return Err(unsupported("T = 0 with the unitary group"));
    }
    let q = spec.q();
    let product = match (spec.orientable, spec.genus) {
        (true, 1) | (false, 2) if zero_area => {
            return Err(unsupported("T = 0 on the torus or Klein bottle"))
        }
        (true, 1) => Some(partition_product(q, ProductVariant::Squared)?),
        (false, 2) => Some(partition_product(q, ProductVariant::Even)?),
        _ => None,
    };
    let base = product.unwrap_or(BoundedValue::exact(1.0));
    match spec.group {
        Group::SpecialUnitary => Ok(base),
        Group::Unitary => Ok(theta_value(spec.area)?.mul_nonneg(&base)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub z: BoundedValue,
    pub limit: BoundedValue,
    /// Largest possible |Z − limit| over both enclosures.
    pub gap_bound: f64,
}

pub fn convergence_table(
    spec: &SurfaceSpec,
    n_list: &[usize],
    trunc: &TruncationParams,
) -> Result<Vec<ConvergenceRow>> {
    let limit = limit_value(spec)?;
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    ns.dedup();
    ns.into_iter()
        .map(|n| {
            let z = z_value(&SurfaceSpec { n, ..*spec }, trunc)?;
            Ok(ConvergenceRow {
                n,
                z,
                limit,
                gap_bound: z.max_distance(&limit),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotoneStatus {
    /// lower(N) ≥ upper(N+1): certified non-increase.
    Confirmed,
    /// lower(N+1) > upper(N): certified increase.
    Violated,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneStep {
    pub n: usize,
    pub next: usize,
    pub z: BoundedValue,
    pub z_next: BoundedValue,
    pub status: MonotoneStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub steps: Vec<MonotoneStep>,
}

impl MonotonicityReport {
    pub fn violations(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.status == MonotoneStatus::Violated)
            .count()
    }
}

/// Checks whether N ↦ Z_N(g, T) is non-increasing over consecutive values
/// of `n_range` (orientable surface).
pub fn monotonicity_scan(
    genus: u32,
    area: f64,
    n_range: &[usize],
    group: Group,
    trunc: &TruncationParams,
) -> Result<MonotonicityReport> {
    let mut ns = n_range.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let values = ns
        .iter()
        .map(|&n| z_value(&SurfaceSpec::new(true, genus, area, group, n), trunc))
        .collect::<Result<Vec<_>>>()?;
    let steps = ns
        .windows(2)
        .zip(values.windows(2))
        .map(|(n, z)| {
            let status = if z[0].lower >= z[1].upper {
                MonotoneStatus::Confirmed
            } else if z[1].lower > z[0].upper {
                MonotoneStatus::Violated
            } else {
                MonotoneStatus::Inconclusive
            };
            MonotoneStep {
                n: n[0],
                next: n[1],
                z: z[0],
                z_next: z[1],
                status,
            }
        })
        .collect();
    Ok(MonotonicityReport { steps })
}

fn su_weight_of(p: &Partition, rank: usize) -> Result<HighestWeight> {
    let mut e: Vec<i64> = (1..=rank).map(|i| i64::from(p.part(i))).collect();
    if e.last().copied().unwrap_or(0) != 0 {
        return Err(Error::AmbientTooSmall {
            n: rank,
            required: p.len() + 1,
        });
    }
    e.truncate(rank);
    HighestWeight::special_unitary(e)
}

/// Exact check of d_λ ≥ (1 + β_M/M)^M · d_α · d_β̃ for λ = λ_{2M}(β̃, β),
/// with α = β̃ and d_α, d_β̃ taken in SU(M).
pub fn genus3_dimension_bound_check(beta: &Partition, m: usize) -> Result<bool> {
    if m == 0 || beta.len() > m {
        return Err(Error::AmbientTooSmall {
            n: 2 * m,
            required: 2 * beta.len(),
        });
    }
    let alpha = crate::frobenius::beta_reduction(beta, m);
    let lambda = build_su_weight(&alpha, beta, 2 * m)?;
    let d_lambda = dimension_exact(&lambda);
    let d_alpha = dimension_exact(&su_weight_of(&alpha, m)?);
    let beta_m = u64::from(beta.part(m));
    let m_big = BigUint::from(m as u64);
    // d_λ · M^M ≥ (M + β_M)^M · d_α²
    let lhs = d_lambda * m_big.pow(m as u32);
    let rhs = BigUint::from(m as u64 + beta_m).pow(m as u32) * &d_alpha * &d_alpha;
    Ok(lhs >= rhs)
}

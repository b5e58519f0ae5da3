//! Compensated accumulation and certified enclosures.

use serde::{Deserialize, Serialize};
use std::iter::Sum;

/// Neumaier's variant of Kahan summation.
///
/// Accumulation order is the caller's iteration order, so results are
/// reproducible as long as the order is.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another accumulator into this one.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.add(other.compensation);
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Relative slack applied when turning a floating-point evaluation into an
/// enclosure. Covers the rounding of compensated sums of well-conditioned
/// positive terms with a wide margin.
pub const FLOAT_SLACK: f64 = 1e-13;

/// A certified `[lower, upper]` interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundedValue {
    pub lower: f64,
    pub upper: f64,
}

impl BoundedValue {
    /// Panics if the bounds are not finite or out of order.
    pub fn new(lower: f64, upper: f64) -> Self {
        assert!(
            lower.is_finite() && upper.is_finite() && lower <= upper,
            "invalid enclosure [{lower}, {upper}]"
        );
        Self { lower, upper }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, value)
    }

    /// `[value, value + tail]` widened by the relative float slack.
    pub fn from_partial_and_tail(partial: f64, tail: f64) -> Self {
        debug_assert!(tail >= 0.0);
        let slack = FLOAT_SLACK * partial.abs();
        Self::new(partial - slack, partial + tail + slack)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    /// `true` when `other` lies inside `self`.
    pub fn encloses(&self, other: &BoundedValue) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    pub fn intersects(&self, other: &BoundedValue) -> bool {
        self.lower <= other.upper && other.lower <= self.upper
    }

    /// Largest possible distance between a point of `self` and a point of `other`.
    pub fn max_distance(&self, other: &BoundedValue) -> f64 {
        (self.upper - other.lower)
            .max(other.upper - self.lower)
            .max(0.0)
    }

    /// Product of two enclosures of non-negative quantities.
    pub fn mul_nonneg(&self, other: &BoundedValue) -> Self {
        debug_assert!(self.lower >= 0.0 && other.lower >= 0.0);
        Self::new(self.lower * other.lower, self.upper * other.upper)
    }

    pub fn add(&self, other: &BoundedValue) -> Self {
        Self::new(self.lower + other.lower, self.upper + other.upper)
    }

    pub fn scale_nonneg(&self, factor: f64) -> Self {
        debug_assert!(factor >= 0.0);
        Self::new(self.lower * factor, self.upper * factor)
    }
}

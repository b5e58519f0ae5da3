//! Two-dimensional Yang–Mills partition functions for U(N) and SU(N) with
//! certified truncation bounds, their large-N limits, and the combinatorics
//! behind them.

pub mod error;
pub mod frobenius;
pub mod oracles;
pub mod par;
pub mod partition_fn;
pub mod summation;
pub mod verify;
pub mod weights;
pub mod zeta;

pub use error::{Error, Result};
pub use par::Execution;
pub use summation::{BoundedValue, CompensatedSum};
pub use weights::{Group, HighestWeight, Partition, Rational, WeightDecomposition};

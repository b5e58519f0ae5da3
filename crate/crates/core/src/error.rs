use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    /// The ambient rank cannot host the requested pair of partitions.
    #[error("ambient rank N={n} too small: need N >= {required}")]
    AmbientTooSmall { n: usize, required: usize },

    #[error("dimension cutoff too small: {0}")]
    CutoffTooSmall(String),

    #[error("area must be positive, got {0}")]
    NonPositiveArea(f64),

    #[error("q must lie in (0, 1), got {0}")]
    InvalidQ(f64),

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("quadrature unstable: value {value} is {distance:e} away from an integer")]
    QuadratureUnstable { value: f64, distance: f64 },

    #[error("degenerate angles: perturbation fallback did not stabilise (spread {0:e})")]
    DegenerateAngles(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

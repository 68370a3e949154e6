//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Structural problem in input data (bad dimensions, out-of-range index).
    #[error("structural error: {0}")]
    Structure(String),

    /// Scalar-level problem (bad literal, zero denominator, non-prime modulus).
    #[error("scalar error: {0}")]
    Scalar(String),

    /// A validator rejected the object; the message names the failing law.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A vector was expected to lie in a computed subspace but does not.
    /// Indicates either invalid input data or an internal inconsistency.
    #[error("not in span: {0}")]
    NotInSpan(String),

    /// The configurable size guard tripped before a large computation.
    #[error("size guard: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CohaError {
    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),

    #[error("quiver mismatch: elements belong to different quivers")]
    QuiverMismatch,

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("polynomial is not symmetric under per-vertex permutations: {0}")]
    NotSymmetric(String),

    #[error("element is not homogeneous: degrees {0} and {1} both present")]
    Inhomogeneous(i64, i64),

    #[error("invalid argument: {0}")]
    BadInput(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("instance too large: {0} (set COHA_LAB_CAPACITY to raise the limit)")]
    Capacity(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, CohaError>;

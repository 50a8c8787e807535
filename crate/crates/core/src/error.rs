use thiserror::Error;

/// Errors surfaced by parsing, windowed operators, and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("malformed code: {0}")]
    MalformedCode(String),

    #[error("invalid degree window: {lo}..={hi}")]
    InvalidWindow { lo: i64, hi: i64 },

    #[error("operator index {0} is outside the supported range (indices must be >= 1)")]
    OutOfScopeIndex(i64),

    #[error("inner product mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("degree {degree} exceeds the truncation window {max_degree}")]
    TruncationWindow { degree: usize, max_degree: usize },

    #[error("basis inconsistency: {0}")]
    BasisInconsistency(String),
}

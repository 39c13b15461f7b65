use thiserror::Error;

/// Errors produced by parameter validation and guarded computations.
///
/// Everything in this crate is exact arithmetic, so there are no numeric
/// error modes; failures are always malformed inputs or guard violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violated a named constraint (the message names it).
    #[error("parameter error: {0}")]
    Param(String),

    /// Two weights (or a Weyl element and a weight) had incompatible shapes.
    #[error("shape mismatch: expected length {expected}, got {got}")]
    Shape { expected: usize, got: usize },

    /// A weight that must be dominant (non-increasing per block) was not.
    #[error("weight is not k-dominant: {0}")]
    NotDominant(String),

    /// Tensor oracle: the K-type search box is too small to be conclusive.
    #[error("insufficient K-type bound: need at least {needed}, got {got}")]
    InsufficientBound { needed: i64, got: i64 },

    /// Tensor oracle: the rank guard was exceeded.
    #[error("rank guard exceeded: {0}")]
    RankGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error values shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators have gcd {0} > 1; rescale before constructing")]
    NonCoprime(u64),

    #[error("expected vectors of dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero vector cannot generate")]
    ZeroVector,

    #[error("malformed relation: {0}")]
    MalformedRelation(String),

    #[error("no positive grading balances the relations")]
    NoPositiveGrading,

    #[error("{0} is not an atom of the monoid generated by the listed rationals")]
    NotAnAtom(String),

    #[error("element tag does not match the monoid kind")]
    TagMismatch,

    #[error("element {0} is not in the monoid")]
    NotInMonoid(String),

    #[error("enumeration budget of {0} exhausted")]
    BudgetExceeded(u64),

    #[error("factorizations index different atom spaces ({0} vs {1})")]
    IndexSpaceMismatch(usize, usize),

    #[error("factorization set is incomplete; rerun with a larger budget")]
    IncompleteSet,

    #[error("no scanned element has more than one factorization length")]
    NoLdElements,

    #[error("invalid construction parameters: {0}")]
    InvalidSpec(String),

    #[error("index {0} is out of range for this construction")]
    InvalidIndex(u64),

    #[error("truncation level {0} is not supported (levels 0 and 1 exist)")]
    InvalidLevel(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded(_) | Error::IncompleteSet => 3,
            _ => 2,
        }
    }
}

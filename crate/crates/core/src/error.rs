use thiserror::Error;

use crate::poly::{Ambient, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(Ambient, Ambient),

    #[error("variable {var} is not part of ambient {ambient}")]
    UnknownVariable { var: Var, ambient: Ambient },

    #[error("divided difference index {index} out of range for {n} x-variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("expected a polynomial in x only")]
    NotXOnly,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Lehmer code: {0}")]
    InvalidLehmerCode(String),

    #[error("invalid exponent vector: {0}")]
    InvalidExponent(String),

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("operation requires a non-empty tableau")]
    EmptyTableau,

    #[error("operation requires a strong composition, got {0}")]
    WeakShape(String),

    #[error("transition matrix is not unitriangular at ({row}, {col})")]
    TriangularityViolation { row: usize, col: usize },

    #[error("no tableau lies below the exponent vector {0}")]
    NoTableauBelow(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

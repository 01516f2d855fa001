use thiserror::Error;

use crate::basis::Parity;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis mismatch: index {index} is outside a basis of dimension {dim}")]
    BasisMismatch { index: usize, dim: usize },

    #[error("unknown generator `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate generator `{0}`")]
    DuplicateSymbol(String),

    #[error("even generator `{0}` is listed after an odd generator")]
    OrderViolation(String),

    #[error("empty basis")]
    EmptyBasis,

    #[error("grading violation at {entry}: expected a homogeneous value of parity {expected}")]
    GradingViolation { entry: String, expected: Parity },

    #[error("bracket is not superanticommutative on ({left}, {right})")]
    NotSuperanticommutative { left: String, right: String },

    #[error("`{unit}` is not a two-sided unit: fails on `{other}`")]
    NotUnital { unit: String, other: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree {degree} exceeds the truncation degree {max}")]
    Truncation { degree: usize, max: usize },

    #[error("operation produces {count} monomials, above the limit of {limit}")]
    MonomialLimit { count: u128, limit: usize },

    #[error("word of length {0} cannot be normalized in the supersymmetric algebra (at most 3)")]
    NotApplicable(usize),
}

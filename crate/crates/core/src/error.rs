use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant coefficient must be 1 to take a negative power, found {0}")]
    NonUnitConstant(String),

    #[error("coefficient index {index} outside series of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("non-integral result: {context}")]
    NonIntegral { context: String },

    #[error("negative coefficient in {context}: {poly}")]
    NegativeCoefficient { context: String, poly: String },

    #[error("invalid permutation word {0}")]
    InvalidPermutation(String),

    #[error("exterior power index {k} out of range for S_{n} (need k < n)")]
    ExteriorIndex { k: usize, n: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("degree must be odd, found {0}")]
    EvenDegree(u32),

    #[error("generator multiplicity must be positive")]
    NonPositiveMultiplicity,

    #[error("duality index out of range: {0}")]
    NegativeIndex(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("class function does not match presentation: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

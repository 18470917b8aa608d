//! Crate-wide error type. Variants are shared across modules; each
//! operation documents which ones it can produce.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },

    #[error("rank {0} exceeds the cap ({1}) for this operation")]
    RankCapExceeded(usize, usize),

    #[error("Jacobi identity failed on basis triple ({0}, {1}, {2})")]
    JacobiFailure(String, String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polynomial is not divisible by the given linear form")]
    NotDivisible,

    #[error("linear form is not proportional to any root functional")]
    NotAReflection,

    #[error("no multiplicity assigned to root orbit {0}")]
    OrbitMissingMultiplicity(usize),

    #[error("operands belong to different algebras: {0}")]
    ParameterMismatch(String),

    #[error("weight is not dominant integral: {0}")]
    NotDominantIntegral(String),

    #[error("representation dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: u64, cap: u64 },

    #[error("filtration degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("character multiplicity is not a nonnegative integer: {0}")]
    NonIntegralMultiplicity(String),

    #[error("element does not have weight zero under the Cartan action")]
    WeightNotZero,

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

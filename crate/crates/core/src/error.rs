use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("conjugation result has non-polynomial entries")]
    NonPolynomialResult,

    #[error("elements do not form a basis: {0}")]
    NotABasis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("representation dimension {dim} exceeds bound {bound}")]
    DimensionOverflow { dim: usize, bound: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("negative multiplicity {coeff} at {weight:?} during character expansion")]
    NegativeMultiplicity { weight: Vec<i64>, coeff: String },
}

pub type Result<T> = std::result::Result<T, Error>;

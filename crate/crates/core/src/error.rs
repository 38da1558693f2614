use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand mismatch: {left} vs {right}")]
    RadicandMismatch { left: String, right: String },
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("polynomial has non-real roots")]
    NotHyperbolic,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("refinement width must be positive, got {0}")]
    NonPositiveWidth(String),
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("sequence dimension must be at least 1")]
    ZeroDimension,
    #[error("empty list of sequences")]
    EmptySequenceList,
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("interpolation grid shape does not match nodes: {0}")]
    GridShape(String),
    #[error("coefficient a_{index} = {value} is not rational")]
    IrrationalCoefficient { index: usize, value: String },
    #[error("minor size {j} out of range for a {n}x{n} matrix")]
    MinorOutOfRange { j: usize, n: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix rows have inconsistent lengths")]
    RaggedMatrix,
    #[error("not a pencil: {0}")]
    InvalidPencil(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("quasi-homogeneous weights are required but missing")]
    MissingWeights,
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("quotient is infinite-dimensional")]
    InfiniteDimensional,
    #[error("not a complex: composite d_{0} . d_{1} is nonzero")]
    NotAComplex(usize, usize),
    #[error("complex is not minimal: d_{position} has a unit entry at ({row}, {col})")]
    NotMinimal {
        position: usize,
        row: usize,
        col: usize,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("chain map does not lift at level {level}: {reason}")]
    Lift { level: usize, reason: String },
    #[error("Betti polynomial is not divisible by (1+T)^{0}")]
    NotDivisible(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

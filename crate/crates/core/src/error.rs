use thiserror::Error;

use crate::types::Class;

/// Errors reported by the constructors, the flip engine and the verifier.
///
/// Input problems (a precondition the caller can fix) are kept apart from
/// [`Error::Internal`], which signals that a construction step produced
/// something it should not have.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree sequence must contain at least one entry")]
    EmptySequence,
    #[error("class sizes differ: A={a}, B={b}, C={c}")]
    UnequalClassLengths { a: usize, b: usize, c: usize },
    #[error("class degree sums differ: A={a}, B={b}, C={c}")]
    UnequalSums { a: u64, b: u64, c: u64 },
    #[error("degree {degree} of {class}{index} is below the lower bound {bound}")]
    BelowLowerBound {
        class: Class,
        index: usize,
        degree: u32,
        bound: String,
    },
    #[error("degree {degree} of {class}{index} is above the upper bound {bound}")]
    AboveUpperBound {
        class: Class,
        index: usize,
        degree: u32,
        bound: String,
    },
    #[error("at least {min} vertices are required, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("degree sum {sum} is not divisible by 3")]
    SumNotDivisibleByThree { sum: u64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("malformed hypergraph: {0}")]
    Malformed(String),
    #[error("not graphic: {0}")]
    NotGraphic(String),
    #[error("invalid flip: {0}")]
    InvalidFlip(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug in a construction rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("empty input")]
    Empty,
    #[error("zero direction")]
    ZeroDirection,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not a simplex: {0}")]
    NotSimplex(String),
    #[error("unbounded scaling: a point fits at every scale")]
    UnboundedScaling,
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Two independently computed quantities that must agree did not.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

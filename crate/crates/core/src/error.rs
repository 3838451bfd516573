use thiserror::Error;

/// Errors raised by the library. Matrix positions and orders in messages are
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed sign token {0:?} (expected one of +, -, 1, -1, +1)")]
    MalformedSign(String),
    #[error("first coordinate of a sign vector must be +1")]
    FirstCoordinateNotOne,
    #[error("empty input")]
    Empty,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("{what}: size {n} exceeds the configured cap {cap}")]
    SizeCapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("order {k} out of range for n = {n}")]
    OrderOutOfRange { k: usize, n: usize },
    #[error("value out of range: {0}")]
    RangeError(String),
    #[error("matrix is not symmetric under the given sign map")]
    NotSymUnderPhi,
    #[error("matrix is not antisymmetric under the given sign map")]
    NotAntiSymUnderPhi,
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("malformed scalar {0:?}")]
    MalformedScalar(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not invertible over GF(2) (no pivot in column {column})")]
    NotInvertible { column: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("operation not supported for scheme `{scheme}`: {reason}")]
    UnsupportedScheme { scheme: String, reason: String },

    #[error("n = {n} exceeds the dense verification limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

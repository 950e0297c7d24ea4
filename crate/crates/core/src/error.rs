use thiserror::Error;

pub type Result<T, E = PbError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PbError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must be square with dim >= 1 (got {rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid cutoff s = {0}; s must be >= 1")]
    InvalidCutoff(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("closure did not terminate after {rounds} rounds")]
    ClosureDiverged { rounds: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl PbError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        PbError::InvalidArgument(msg.into())
    }
}

impl From<serde_json::Error> for PbError {
    fn from(e: serde_json::Error) -> Self {
        PbError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

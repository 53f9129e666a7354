use thiserror::Error;

/// Errors raised by the counting and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not skew-symmetric (entry ({row},{col}))")]
    NotSkew { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("index set must be strictly increasing")]
    UnsortedIndices,

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("evaluation points must be pairwise distinct")]
    RepeatedPoints,

    #[error("invalid path family: {0}")]
    InvalidFamily(String),

    #[error("invalid puncture position: {0}")]
    InvalidPuncture(String),
}

pub type Result<T> = std::result::Result<T, Error>;

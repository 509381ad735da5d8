use thiserror::Error;

/// Errors produced by network construction, spectral analysis, and transport
/// evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge-list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is disconnected: node {node} is unreachable from node 1")]
    Disconnected { node: usize },

    #[error("eigendecomposition failed for {0}")]
    Numerical(String),

    #[error("node index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("degeneracy spectrum totals {cluster_total} levels but the spectrum has {n}")]
    ClusterMismatch { cluster_total: usize, n: usize },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("no plateau detected: {0}")]
    NoPlateau(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

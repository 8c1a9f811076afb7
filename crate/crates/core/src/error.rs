use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("{what}: component has {actual} vertices, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("invalid X3C instance: {0}")]
    InvalidInstance(String),

    #[error("not an exact cover: {0}")]
    NotExactCover(String),

    #[error("labeling weight {weight} exceeds threshold {threshold}")]
    OverThreshold { weight: u32, threshold: u32 },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

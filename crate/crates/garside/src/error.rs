use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid strand count {0}: supported range is 2..=16")]
    InvalidStrandCount(usize),

    #[error("parse error at token {index} ({token:?}): {reason}")]
    WordParse {
        index: usize,
        token: String,
        reason: String,
    },

    #[error("word does not denote a simple element: {0}")]
    NotSimple(String),

    #[error("summit graph exceeded the vertex cap ({cap})")]
    VertexCapExceeded { cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid graph data: {0}")]
    InvalidGraph(String),

    #[error("invalid checkpoint data: {0}")]
    InvalidCheckpoint(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

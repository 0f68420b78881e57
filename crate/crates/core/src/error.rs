use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("singular transition matrix at {0} (partition ordering bug)")]
    SingularSystem(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("deleting vertex {vertex} leaves {components} component(s); at least 3 are needed")]
    TooFewComponents { vertex: usize, components: usize },

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("compute budget exceeded: {0}")]
    Budget(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

use thiserror::Error;

/// Errors surfaced by graph construction, parsing, scoring and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("node {0} does not exist in this graph")]
    NodeNotFound(String),

    #[error("pair scoring requires two distinct nodes, got {0} twice")]
    InvalidPair(String),

    #[error("edge {0}-{1} does not exist in this graph")]
    EdgeNotFound(String, String),

    #[error("parse error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("unsupported input: {0}")]
    UnsupportedFormat(String),

    #[error("operation undefined on an empty graph")]
    EmptyGraph,

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("dendrogram never reaches {requested} communities (final count {reached})")]
    KNotReached { requested: usize, reached: usize },

    #[error("partitions cover different node sets ({0} vs {1} nodes)")]
    PartitionMismatch(usize, usize),

    #[error("modularity is undefined on a graph with no edges")]
    UndefinedModularity,

    #[error("elbow selection needs a curve with at least 2 points, got {0}")]
    InsufficientCurve(usize),
}

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

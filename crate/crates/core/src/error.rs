use thiserror::Error;

/// Reasons a vertex list fails to be a partition of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {0} appears in more than one block")]
    Overlap(usize),
    #[error("vertex {0} is not covered by any block")]
    Missing(usize),
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}) for a graph of order {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has order {0}; at least 2 vertices are required")]
    TrivialGraph(usize),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(#[from] PartitionError),

    #[error("invalid vertex pair ({0}, {1})")]
    InvalidPair(usize, usize),

    #[error("vertex set is empty")]
    InvalidSet,

    #[error("level k={k} is infeasible; valid range is 1..={max}")]
    InfeasibleK { k: usize, max: usize },

    #[error("graph of order {n} exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("graph is not a tree")]
    NotATree,

    #[error("paths have no exterior major vertices")]
    PathHasNoProfile,

    #[error("graph has no exterior major vertex of terminal degree at least 2")]
    NoExteriorMajorVertex,

    #[error("constructive partitions exist only for paths and trees")]
    UnsupportedConstruction,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

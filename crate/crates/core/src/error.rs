use thiserror::Error;

/// Errors produced by the engine, the network generators and the harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed genome: expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("node {node} out of range for a graph of {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("operation requires at least 2 nodes, graph has {0}")]
    TooFewNodes(usize),

    #[error("selection over an empty subset")]
    EmptySubset,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("population has {population} individuals but the graph has {graph} nodes")]
    PopulationGraphMismatch { population: usize, graph: usize },

    #[error("polynomial fit needs at least {needed} points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("degenerate design matrix: abscissae do not span an interval")]
    DegenerateFit,

    #[error("inputs disagree: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

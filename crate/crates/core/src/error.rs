use thiserror::Error;

/// Errors produced by tree construction and the invariant computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a tree needs at least one vertex")]
    EmptyTree,
    #[error("a tree on {n} vertices needs {expected} edges, got {actual}")]
    EdgeCount {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("vertex {vertex} is out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge set is not connected")]
    Disconnected,
    #[error("the two marked vertices must differ (both are {0})")]
    SameVertex(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("tree would have {requested} vertices, above the limit of {limit}")]
    TooLarge { requested: u128, limit: usize },
    #[error("evaluation point must be positive, got {0}")]
    NonPositivePoint(String),
    #[error("coefficient vectors have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("quadrature did not converge (error estimate {estimate:e})")]
    Quadrature { value: f64, estimate: f64 },
    #[error("malformed decomposition: {0}")]
    BadDecomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

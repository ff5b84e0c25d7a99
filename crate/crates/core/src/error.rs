use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("canonical labeling is limited to {max} vertices, got {n}")]
    CanonicalBound { n: usize, max: usize },

    #[error("cycle/path search is limited to {max} vertices, got {n}")]
    SearchVertexBound { n: usize, max: usize },

    #[error("search budget of {budget} steps exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("graph enumeration is limited to {max} vertices, got {n}")]
    EnumerationBound { n: usize, max: usize },

    #[error("family enumeration is limited to {max} vertices, got {n}")]
    FamilyBound { n: usize, max: usize },

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("endpoints must be distinct, got {v} twice")]
    IdenticalEndpoints { v: usize },

    #[error("{{{x}, {y}}} does not separate the given sides: {reason}")]
    NotASeparator { x: usize, y: usize, reason: String },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

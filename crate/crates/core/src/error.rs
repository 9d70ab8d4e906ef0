use thiserror::Error;

/// Errors from constructing graphs or querying them with malformed sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices; at most 128 are supported")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("adjacency not symmetric between {u} and {v}")]
    Asymmetric { u: usize, v: usize },
    #[error("vertex {v} listed twice")]
    DuplicateVertex { v: usize },
    #[error("vertex sets overlap")]
    OverlappingSets,
}

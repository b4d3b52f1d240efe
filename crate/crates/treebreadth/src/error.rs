use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph has {n} vertices, above the limit of {limit}")]
    OverLimit { n: usize, limit: usize },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("decomposition has breadth {0}, expected at most {1}")]
    Breadth(usize, usize),
    #[error("family member {0} is contained in member {1}")]
    Containment(usize, usize),
    #[error("{0}")]
    Precondition(String),
    #[error("certificate reconstruction failed: {0}")]
    Replay(String),
    #[error("recognition invariant broken: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

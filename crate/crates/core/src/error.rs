use crate::graph::Edge;

/// Errors produced by graph construction, analysis and I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={d}")]
    VertexOutOfRange { vertex: usize, d: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("weighting has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid weight `{0}`; expected -1, 0 or 1")]
    InvalidWeight(String),
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("not a vertex partition: {0}")]
    NotAPartition(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("{what} {got} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a size cap rather than malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    /// An exact routine was asked to work above its size cap. Never answered approximately.
    #[error("{what}: size {size} exceeds the exact-solve cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph is not chordal")]
    NotChordal,

    #[error("operation requires a nonnull graph")]
    NullGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    /// A bag holds an independent set outside its refined part that is larger than the promised bound.
    #[error("residual bound {bound} violated at node {node}: independent set {witness:?} outside the refined set")]
    ResidualBoundViolated {
        node: usize,
        bound: usize,
        witness: Vec<usize>,
    },

    #[error("not a cut-partition: {0}")]
    NotCutPartition(String),

    #[error("cutset is not a clique: {0} and {1} are non-adjacent")]
    CutsetNotClique(usize, usize),

    #[error("no bag of the {0} decomposition contains the cutset")]
    NoBagContainsCutset(&'static str),

    #[error("invalid subgraph family: {0}")]
    InvalidFamily(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

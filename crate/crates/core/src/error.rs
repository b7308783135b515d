use thiserror::Error;

/// Errors raised by graph construction and the polyhedral/monoid routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}: simple graphs have no loops")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("edge index {index} out of range ({n_edges} edges)")]
    EdgeOutOfRange { index: usize, n_edges: usize },

    #[error("invalid graph family parameters: {0}")]
    InvalidFamily(String),

    #[error("glue set {0:?} does not induce a complete subgraph of the expected size")]
    NotAClique(Vec<usize>),

    #[error("invalid glue map: {0}")]
    InvalidGlue(String),

    #[error("graph has a K5 minor (branch sets {branch_sets:?})")]
    K5Minor { branch_sets: Vec<Vec<usize>> },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("normality is not certified: {0}")]
    NormalityNotCertified(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("not covered by the clique-sum transfer rules: {0}")]
    UnsupportedTransfer(String),

    #[error("malformed certificate in leg {leg}: {reason}")]
    MalformedCertificate { leg: char, reason: String },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

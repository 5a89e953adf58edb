use thiserror::Error;

/// Errors produced by group, representation, graph and spectral operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("unknown element literal `{0}`")]
    UnknownElement(String),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    MultiEdge(usize, usize),

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operands are defined over different groups")]
    GroupMismatch,

    #[error("underlying graphs differ")]
    UnderlyingMismatch,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("underlying graph is not a cycle")]
    NotACycle,

    #[error("walk steps between non-adjacent vertices {0} and {1}")]
    NonAdjacentStep(usize, usize),

    #[error("size guard exceeded: {n} vertices, limit {limit}")]
    GuardExceeded { n: usize, limit: usize },

    #[error("represented matrix is not Hermitian (deviation {0:e})")]
    NonHermitian(f64),

    #[error("character is not constant on class {class} (deviation {deviation:e})")]
    ClassInconstant { class: usize, deviation: f64 },

    #[error("representation check failed: {0}")]
    Representation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

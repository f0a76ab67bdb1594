use thiserror::Error;

/// Errors for graph parsing, structural validation, and solver preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: edge length must be positive")]
    NonpositiveLength { line: usize },
    #[error("line {line}: vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree: {n} vertices and {edges} edges")]
    NotATree { n: usize, edges: usize },
    #[error("graph has no cycle")]
    NoCycle,
    #[error("graph is not unicyclic: {n} vertices and {edges} edges")]
    NotUnicycle { n: usize, edges: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("need at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("invalid generator spec: {0}")]
    InvalidGenSpec(String),
    #[error("invalid oracle spec: {0}")]
    InvalidOracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("self-loop on vertex {0}")]
    Loop(u64),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("graph not connected")]
    NotConnected,

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),

    #[error("not a starting pair: {0}")]
    NotStartingPair(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("oracle refused: {n} vertices exceeds the configured bound of {bound}")]
    OracleBound { n: usize, bound: usize },

    #[error("branch budget of {0} exhausted")]
    BudgetExhausted(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid family parameters: {0}")]
    Family(String),

    #[error("internal invariant failure: {0}")]
    Invariant(String),

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
}

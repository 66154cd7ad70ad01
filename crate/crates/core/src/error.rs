use thiserror::Error;

use crate::chordal::InducedCycle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),

    #[error("edge ({0}, {1}) has an endpoint outside [0, {2})")]
    EndpointOutOfRange(usize, usize, usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph is not chordal: induced cycle {0:?}")]
    NotChordal(InducedCycle),

    #[error("{what} supports at most {limit}, got {actual}")]
    Unsupported {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("clique tree nodes do not match the maximal cliques of the graph")]
    CliqueMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph of order {0} exceeds the vertex cap of {MAX_ORDER}")]
    CapExceeded(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop requested at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("invalid graph6 string {0:?}: {1}")]
    Graph6(String, &'static str),
    #[error("universe order {0} outside 1..=8")]
    UniverseRange(usize),
    #[error("views belong to different universes")]
    UniverseMismatch,
    #[error("graph {0} is not part of the universe")]
    NotInUniverse(String),
    #[error("property {property} is not certified {class}")]
    Uncertified { property: String, class: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("partition enumeration refused: {0} assignments exceeds 2^24")]
    PartitionGuard(u128),
    #[error("no clique bound within the universe: every K_r with r <= {0} is a member")]
    NoCliqueBound(usize),
    #[error("no maximal graphs with at least c(P) vertices inside the universe")]
    EmptyMaxStar,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not an antichain: {0} is contained in {1}")]
    NotAntichain(String, String),
    #[error("property is not compositive inside the universe: no common witness for {0} and {1}")]
    NotCompositive(String, String),
    #[error("no branch of the non-uniqueness construction applies")]
    NoBranch,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("universe checksum mismatch: expected {expected}, found {found}")]
    Checksum { expected: String, found: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

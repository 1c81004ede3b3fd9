use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertices are not pairwise distinct")]
    NotDistinct,
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex {0} is not a non-leaf vertex")]
    NotANonLeaf(usize),
    #[error("factor of order {0} is too small, order >= 3 required")]
    FactorTooSmall(usize),
    #[error("set is not a general position set")]
    NotAGpSet,
    #[error("forced set is not a general position set")]
    InfeasibleForcedSet,
    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

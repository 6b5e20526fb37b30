use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("threshold assignment has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("not a permutation of the vertex set")]
    NotAPermutation,
    #[error("vertex {0} appears in more than one set")]
    Overlap(usize),
    #[error("set is not a dynamo")]
    NotADynamo,
    #[error("work budget of {0} units exceeded")]
    BudgetExceeded(u64),
    #[error("no dynamo found: {0}")]
    SearchFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

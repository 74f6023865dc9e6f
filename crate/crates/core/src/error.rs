use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Usage and input errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("set is not a minimal dominating set: {0}")]
    NotMinimal(String),

    #[error("assignment has {got} values but the model has {expected} variables")]
    AssignmentSize { expected: usize, got: usize },

    #[error("assignment is infeasible: constraint `{0}` violated")]
    Infeasible(String),

    #[error("variable `{0}` is not binary")]
    NonBinary(String),

    #[error("time limit must be positive")]
    BadTimeLimit,

    #[error("graph has {n} vertices; exhaustive routines are limited to {limit}, use the branch-and-bound solver instead")]
    TooLarge { n: usize, limit: usize },
}

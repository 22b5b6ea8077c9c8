use thiserror::Error;

/// Errors raised by graph construction, parsing, and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} exceeds the capacity limit of {cap}")]
    Capacity { order: usize, cap: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    Index { vertex: usize, order: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget of {budget} candidates exceeded at complement level {level}")]
    Budget { budget: u64, level: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

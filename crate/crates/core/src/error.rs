use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial is not compatible with shift {shift:?}: nonzero remainder after dividing by falling factorial in a_{var}")]
    Incompatible { shift: Vec<i64>, var: usize },

    #[error("no commutation identity applies at position {0}")]
    NotCommutable(usize),

    #[error("reduction stuck on non-reduced monomial {0}")]
    ReductionStuck(String),

    #[error("reduction exceeded its step budget of {0}")]
    StepBudget(u64),

    #[error("adjoint series did not terminate within {0} steps")]
    AdSeries(usize),

    #[error("module dimension {dim} exceeds cap {cap}")]
    Capacity { dim: u64, cap: u64 },

    #[error("unexpected reduced term shape: {0}")]
    TermShape(String),

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

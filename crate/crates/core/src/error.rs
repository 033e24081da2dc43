use thiserror::Error;

/// Errors raised by the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix dimension outside the supported range (at most 16).
    #[error("unsupported matrix dimension {0} (must be between 1 and 16)")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix that fails the density-matrix invariants, or a state for
    /// which an operation is undefined.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Integrator drift, eigensolver non-convergence or a state that
    /// left the physical region during evolution.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("Choi matrix is not completely positive (min eigenvalue {min_eigenvalue:e})")]
    NotCompletelyPositive { min_eigenvalue: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

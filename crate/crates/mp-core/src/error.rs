use thiserror::Error;

/// Errors produced by the numerical kernels.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The matrix passed as the right-hand side of a generalized
    /// eigenproblem is not positive definite.
    #[error("matrix not positive definite: pivot {index} is {value:.6e}")]
    NotPositiveDefinite { index: usize, value: f64 },

    /// Eigenvalue iteration exceeded its sweep cap.
    #[error("eigensolver failed to converge at index {index} within {sweeps} sweeps")]
    Convergence { index: usize, sweeps: usize },

    /// A quadrature or series evaluation could not reach the requested
    /// accuracy; carries the bound actually achieved.
    #[error("accuracy target {requested:.3e} not reached (achieved {achieved:.3e})")]
    Accuracy { requested: f64, achieved: f64 },

    /// An internal cross-check failed (e.g. a value that must be real
    /// came out with a significant imaginary part).
    #[error("internal consistency: {0}")]
    Inconsistent(String),

    /// A computation produced an output with no usable content
    /// (all-zero wavefunction, non-finite samples).
    #[error("degenerate output: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

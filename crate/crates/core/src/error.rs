//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error enum.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Argument outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested exactly at a non-integrable singular point.
    #[error("singular point: {0}")]
    SingularPoint(String),

    /// Operation defined by contract only for a narrower case.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Problem size exceeds the configured maximum.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Iterative scheme did not reach its tolerance within the cap.
    #[error("convergence failure: {what} (best value {value:.9e}, residual {residual:.3e})")]
    ConvergenceFailure {
        what: String,
        value: f64,
        residual: f64,
    },

    /// Adaptive quadrature hit its evaluation cap; partial result attached.
    #[error(
        "quadrature did not converge: error estimate {estimate:.3e} after {evaluations} \
         evaluations (partial value {value:.9e})"
    )]
    QuadratureCap {
        value: f64,
        estimate: f64,
        evaluations: usize,
    },

    /// LAPACK returned a nonzero info code.
    #[error("linear algebra backend failure: {routine} info={info}")]
    Backend { routine: &'static str, info: i32 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

use thiserror::Error;

/// Errors raised by the evaluation kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An adaptive procedure hit its iteration cap. Carries the best estimate
    /// reached so far and its error estimate.
    #[error(
        "no convergence after {levels} refinements (best estimate {estimate:e}, error {error:e})"
    )]
    Convergence {
        levels: usize,
        estimate: f64,
        error: f64,
    },

    /// A Lauricella argument sits on the cut `[1, ∞)` of the real axis.
    #[error("argument {index} = {value} lies on the branch cut [1, inf)")]
    Branch { index: usize, value: String },

    /// `c` is zero or a negative integer in a hypergeometric series.
    #[error("pole: denominator parameter {0} is a non-positive integer")]
    Pole(String),

    /// A stated precondition of an identity is not met.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The pivot of the reduction formula equals 1.
    #[error("singular pivot: x_n = 1")]
    SingularPivot,

    /// A value that must be real carries an imaginary residue.
    #[error("imaginary residue {residue:e} exceeds tolerance {tol:e}")]
    Consistency { residue: f64, tol: f64 },

    /// Requested entry is not tabulated.
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

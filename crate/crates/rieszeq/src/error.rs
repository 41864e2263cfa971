//! Crate-wide error type.

use std::fmt;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    Domain(String),
    /// A series failed to converge within the term budget.
    Convergence { terms_used: usize, message: String },
    /// Adaptive integration could not meet the requested tolerance.
    /// Carries the best estimate and its error bound.
    Accuracy { estimate: f64, error: f64 },
    /// Evaluation at a singular point of a kernel or potential.
    Singularity(String),
    /// Parameters outside every regime the solver covers.
    UnsupportedRegime(String),
    /// Point configuration with coincident points under a singular kernel.
    SingularConfiguration(String),
    /// Malformed input: empty grids, mismatched sizes, bad counts.
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Convergence {
                terms_used,
                message,
            } => write!(f, "convergence failure after {terms_used} terms: {message}"),
            Error::Accuracy { estimate, error } => write!(
                f,
                "accuracy target not met: estimate {estimate:e} with error bound {error:e}"
            ),
            Error::Singularity(msg) => write!(f, "singular evaluation: {msg}"),
            Error::UnsupportedRegime(msg) => write!(f, "unsupported regime: {msg}"),
            Error::SingularConfiguration(msg) => {
                write!(f, "singular configuration: {msg}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

use thiserror::Error;

/// Errors produced by the numerical routines of this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series is identically zero")]
    ZeroSeries,

    #[error("divergent: {0}")]
    Divergent(String),

    #[error("separation constant is unbounded for this exponent sequence at sigma = {sigma}")]
    UnboundedSeparation { sigma: f64 },

    #[error("requested precision {target:e} unreachable (best bound {achieved:e})")]
    PrecisionUnreachable { target: f64, achieved: f64 },

    #[error("pole at s = {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("anchor value |L(sigma + D)| = {0:e} is too close to zero")]
    NearZeroAnchor(f64),

    #[error("quadrature did not converge: {0}")]
    Convergence(String),

    #[error("outside range of validity: {0}")]
    OutOfValidity(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("format: {0}")]
    Format(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

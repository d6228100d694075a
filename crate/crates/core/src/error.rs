//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("cannot parse probability {input:?}: {reason}")]
    ParseProbability { input: String, reason: String },

    #[error("sign not certified within {max_digits} digits (last interval {value:e} ± {error:e})")]
    UncertifiedSign {
        max_digits: usize,
        value: f64,
        error: f64,
    },

    #[error("operation undefined on the line p + q = 1")]
    DiagonalDomain,

    #[error("working precision exhausted at {0} digits")]
    PrecisionExhausted(usize),

    #[error("quadrature could not meet its error target within {0} digits")]
    QuadratureFailure(usize),

    #[error("denominator vanishes in derivative formula at (q, p) = ({q}, {p})")]
    SingularDenominator { q: f64, p: f64 },

    #[error("quadratic for the improved bound has no real root")]
    NoRealRoot,

    #[error("step size underflow in curve integration at q = {0}")]
    StepFailure(f64),

    #[error("no sign change found while bracketing the intersection")]
    NoIntersection,

    #[error("degenerate point with p = q cannot be rescaled")]
    DegenerateDiagonal,

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

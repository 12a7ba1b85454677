use thiserror::Error;

use crate::parse::ParseError;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("element is not in the span of the frame")]
    NotInSpan,

    #[error("connection is not integrable: {0}")]
    IntegrabilityViolation(String),

    #[error("denominator escapes: result has a pole of order {order} along the divisor")]
    DenominatorEscape { order: u32 },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the algebraic and numeric routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Attempted to invert zero in a field.
    #[error("division by zero")]
    DivisionByZero,
    /// A variable name is not part of the variable set of a polynomial.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    /// Two objects built over different variable sets were combined.
    #[error("variable set mismatch: {0}")]
    VariableMismatch(String),
    /// A polynomial does not have the (bi)degree an operation requires.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    /// A matrix that must be invertible is singular (or numerically close).
    #[error("singular matrix: {0}")]
    Singular(String),
    /// A matrix that must be orthogonal is not.
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    /// Matrix shapes are incompatible.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// An index or parameter lies outside its admissible range.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// A weight or representation parameter violates its invariants.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A point is not critical for the given parameters.
    #[error("m = {m} is not a critical point for (l2, l3) = ({l2}, {l3})")]
    NotCritical {
        /// Second-rank weight parameter.
        l2: i64,
        /// Third-rank weight parameter.
        l3: i64,
        /// Requested point.
        m: i64,
    },
    /// Invalid parameter combination for the L-factor bookkeeping.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A floating-point computation left its domain of validity.
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// Unknown verification suite or malformed command line input.
    #[error("usage: {0}")]
    Usage(String),
    /// File system failure while writing a report.
    #[error("io: {0}")]
    Io(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the exact-arithmetic and geometry layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Scalars from different ground fields met in one computation.
    #[error("mixed ground fields: {0}")]
    MixedField(String),

    /// Division by zero in a field, or inversion of a non-unit.
    #[error("division by zero")]
    DivisionByZero,

    /// A parametrization was evaluated where it is undefined, e.g. a Laurent
    /// monomial with negative exponent at a zero coordinate.
    #[error("forbidden evaluation point: {0}")]
    ForbiddenPoint(String),

    /// Input fails a structural precondition (dimensions, ranges, spans).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A hypothesis needed for a certified conclusion failed, with the
    /// diagnostic that triggered the refusal.
    #[error("hypothesis check failed: {0}")]
    HypothesisFailed(String),

    /// Random sampling kept hitting degenerate configurations.
    #[error("degenerate sample after {retries} retries: {context}")]
    DegenerateSample { retries: usize, context: String },

    /// A polytope file or variety descriptor could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

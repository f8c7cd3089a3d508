use thiserror::Error;

use crate::geom::GeneralPositionViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rectangle {id} is degenerate or out of range: [{x_min},{x_max}]x[{y_min},{y_max}]")]
    InvalidRect { id: usize, x_min: i64, x_max: i64, y_min: i64, y_max: i64 },

    #[error(transparent)]
    GeneralPosition(#[from] GeneralPositionViolation),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("exact packing number unavailable for n={n} (limit {limit}); use packing bounds instead")]
    ExactUnavailable { n: usize, limit: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// A structural guarantee of the piercing construction did not hold.
    /// This never happens for valid input and signals a bug.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

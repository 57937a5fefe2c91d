use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polytope is not full-dimensional: ambient dimension {dim}, affine rank {rank}")]
    NotFullDimensional { dim: usize, rank: usize },

    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("{op} requires {required}, got dimension {dim}")]
    UnsupportedDimension {
        op: &'static str,
        required: &'static str,
        dim: usize,
    },

    #[error("polytopes are not polar duals of each other")]
    NotDualPair,

    #[error("ray {0:?} is not primitive")]
    NonPrimitiveRay(Vec<i64>),

    #[error("relation spec (row {row}): {reason}")]
    Spec { row: usize, reason: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A theorem-backed assertion failed; this signals a bug, not bad data.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    pub fn is_input(&self) -> bool {
        !self.is_internal()
    }
}

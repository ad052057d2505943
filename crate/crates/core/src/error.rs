use thiserror::Error;

use crate::diagram::ArcId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{token}`: {reason}")]
    Malformed { token: String, reason: String },

    #[error("arc {arc} appears in {count} slots, expected 2")]
    ArcCount { arc: ArcId, count: usize },

    #[error(
        "diagram is not planar: the component containing crossing {crossing} \
         traces {faces} faces, expected {expected}"
    )]
    NonPlanar {
        crossing: usize,
        faces: usize,
        expected: usize,
    },

    #[error("orientation unrecoverable: {0}")]
    Orientation(String),

    #[error("no arc {0} in diagram")]
    InvalidArc(ArcId),

    #[error("invalid state `{0}`")]
    InvalidState(String),

    #[error("state has {got} choices but the diagram has {expected} crossings")]
    StateSize { got: usize, expected: usize },

    #[error("{crossings} crossings exceeds the state-sum cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,

    #[error("the zero polynomial has no extreme coefficients")]
    ZeroPolynomial,

    #[error("diagram is not connected")]
    NotConnected,

    #[error("preconditions not satisfied: {0}")]
    Preconditions(String),

    #[error("invalid JSON diagram: {0}")]
    Json(String),

    #[error("corpus line {line}: {reason}")]
    Corpus { line: usize, reason: String },
}

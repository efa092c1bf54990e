use thiserror::Error;

/// Errors raised while constructing weights, types or labels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mixed weight coset: coordinates must be all integers or all half-odd integers")]
    MixedCoset,

    #[error("a weight needs at least one coordinate")]
    EmptyWeight,

    #[error("invalid weight coordinate `{0}`: expected an integer or a half like `3/2`")]
    BadCoordinate(String),

    #[error("rank {rank} is invalid for family {family}: {reason}")]
    BadRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("invalid label: {0}")]
    BadLabel(String),
}

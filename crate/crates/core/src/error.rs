use thiserror::Error;

/// Errors surfaced by construction, pairing and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid rank {rank} for family {family}: requires {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("B2 is presented as C2 here; construct C2 instead")]
    B2IsC2,

    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("zero vector cannot appear in the coroot position of a pairing")]
    ZeroAlpha,

    #[error("node index {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("weight has {got} coefficients but the rank is {rank}")]
    WeightLength { got: usize, rank: usize },

    #[error("enumeration of {required} weights exceeds the cap {cap}")]
    EnumerationCap { required: u128, cap: u128 },

    #[error("operation requires rank >= 2 (the bound is never restrictive at rank 1)")]
    RankOneUnbounded,

    #[error("no injection certificate exists for node {j}")]
    NoCertificate { j: usize },

    #[error("cannot parse Lie type {0:?}: expected a family letter followed by the rank")]
    ParseType(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

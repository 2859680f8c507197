use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(&'static str, &'static str),

    #[error("norm not required for octagonal classification")]
    OctagonalNorm,

    #[error("operation needs a rank-2 ring, got {0}")]
    NotRankTwo(&'static str),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("generators dependent")]
    DependentGenerators,

    #[error("index zero")]
    IndexZero,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("multiplier must be nonzero")]
    ZeroMultiplier,

    #[error("not a color symmetry: {0}")]
    NotColorSymmetry(String),

    #[error("stabilizer is not a subgroup containing the half-turn")]
    NotSubgroup,

    #[error("non-generic window, reshuffle shift")]
    NonGenericWindow,

    #[error("palette has {have} colors but the coloring needs {needed}")]
    PaletteTooShort { needed: usize, have: usize },

    #[error("invalid ambient: {0}")]
    InvalidAmbient(String),

    #[error("parse error: {0}")]
    Parse(String),
}

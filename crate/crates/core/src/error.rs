//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero divisor encountered in tower arithmetic: a redundant square root was adjoined")]
    ZeroDivisor,

    #[error("degenerate adjunction: cannot adjoin a square root of zero")]
    DegenerateAdjunction,

    #[error("incompatible towers: elements belong to unrelated field towers")]
    IncompatibleTowers,

    #[error("pole at q = 1: value lies outside the subring of functions regular at 1")]
    PoleAtOne,

    #[error("unsupported splitting: polynomial of degree {degree} has roots outside the supported field class")]
    UnsupportedSplitting { degree: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("weight is not q-dominant: {0}")]
    NotQDominant(String),

    #[error("alternating sum is not divisible by the Weyl denominator (atypical weight outside the formula's validity)")]
    NonExactDivision,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the clan, order and rook-monoid constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("pair label {label} occurs {count} time(s), expected exactly 2")]
    UnmatchedPair { label: usize, count: usize },
    #[error("invalid clan symbol {0:?}")]
    InvalidSymbol(String),
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("p and q must both be at least 1, got ({p}, {q})")]
    InvalidShape { p: usize, q: usize },
    #[error("size {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("default permutation construction found |S| = {s} but |T| = {t}")]
    InternalMismatch { s: usize, t: usize },
    #[error("cannot embed a ({p}, {q})-clan into ({p2}, {q2})")]
    ShrinkNotAllowed {
        p: usize,
        q: usize,
        p2: usize,
        q2: usize,
    },
    #[error("{0} is not a base clan")]
    NotABaseClan(String),
    #[error("dense sect requires p >= q, got ({p}, {q})")]
    RequiresPGeQ { p: usize, q: usize },
    #[error("element {0} is not in the poset")]
    UnknownElement(String),
    #[error("invalid subset {indices:?} for n = {n}")]
    InvalidSubset { indices: Vec<usize>, n: usize },
    #[error("matrix is not square")]
    NotRectangular,
    #[error("matrix is not a rook matrix: {0}")]
    InvalidRook(String),
    #[error("{0} is not in the dense sect")]
    NotInDenseSect(String),
    #[error("not an involution: {0:?}")]
    NotAnInvolution(Vec<usize>),
    #[error("bad token {0:?}")]
    BadToken(String),
    #[error("diagonal step weight must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("weight {weight} at step {step} exceeds current length + 1 = {max}")]
    WeightOutOfRange {
        step: usize,
        weight: usize,
        max: usize,
    },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::UnmatchedPair { .. } => "UnmatchedPair",
            Error::InvalidSymbol(_) => "InvalidSymbol",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::InvalidShape { .. } => "InvalidShape",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::InternalMismatch { .. } => "InternalMismatch",
            Error::ShrinkNotAllowed { .. } => "ShrinkNotAllowed",
            Error::NotABaseClan(_) => "NotABaseClan",
            Error::RequiresPGeQ { .. } => "RequiresPGeQ",
            Error::UnknownElement(_) => "UnknownElement",
            Error::InvalidSubset { .. } => "InvalidSubset",
            Error::NotRectangular => "NotRectangular",
            Error::InvalidRook(_) => "InvalidRook",
            Error::NotInDenseSect(_) => "NotInDenseSect",
            Error::NotAnInvolution(_) => "NotAnInvolution",
            Error::BadToken(_) => "BadToken",
            Error::NonPositiveWeight(_) => "NonPositiveWeight",
            Error::WeightOutOfRange { .. } => "WeightOutOfRange",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

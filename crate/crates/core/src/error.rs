use thiserror::Error;

use crate::rootsys::Family;

/// Errors raised by the construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for type {family:?} (minimum {min})")]
    RankDomain { family: Family, rank: usize, min: usize },

    #[error("start index {start} out of range for {lie_type} (allowed 1..={max})")]
    StartOutOfRange { lie_type: String, start: usize, max: usize },

    #[error("word variant {variant} is not available for {lie_type}")]
    VariantMismatch { lie_type: String, variant: String },

    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("word {letters:?} is not reduced: {inversions} inversions for {len} letters")]
    NonReducedWord { letters: Vec<usize>, inversions: usize, len: usize },

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("coordinate {0} is not bounded by any inequality")]
    UnboundedSystem(String),

    #[error("point {point:?} does not lie in the polytope at weight {weight}")]
    NotInPolytope { point: Vec<u32>, weight: String },

    #[error("box {0:?} does not contain the point set plus one in every direction")]
    BoxTooSmall(Vec<u32>),

    #[error("subword roots are not contained in the ambient inversion set: {0}")]
    SubwordNotContained(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

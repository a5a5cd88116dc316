use thiserror::Error;

use crate::ground::{BiSetPair, SubsetMask};

/// Errors surfaced by constructors, transforms, and integral paths.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set size {n} outside supported range 1..={max}")]
    GroundSetSize { n: usize, max: usize },

    #[error("ground sets disagree ({left} vs {right} criteria)")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },

    #[error("act entry {index} is not finite")]
    NonFiniteEntry { index: usize },

    #[error("act entry {index} is negative ({value}); this integral requires f >= 0")]
    NegativeEntry { index: usize, value: f64 },

    #[error("subset pair ({pos}, {neg}) is not disjoint")]
    NotDisjoint { pos: SubsetMask, neg: SubsetMask },

    #[error("derivative domain violated: {0}")]
    DerivativeDomain(String),

    #[error("n = {n} exceeds the cap {max} for this exhaustive path")]
    CapExceeded { n: usize, max: usize },

    #[error("representation is not 2-additive: entry {pair} = {value}")]
    NotTwoAdditive { pair: BiSetPair, value: f64 },

    #[error("interaction entry {pair} lies outside the 2-additive index set")]
    InteractionSupport { pair: BiSetPair },

    #[error("permutation {0:?} does not rearrange |f| nondecreasingly")]
    InadmissiblePermutation(Vec<usize>),

    #[error("bipolar capacity violates the unambiguity condition (max residual {max_residual:.3e})")]
    Ambiguous { max_residual: f64 },

    #[error("malformed model: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

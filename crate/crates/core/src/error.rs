use crate::coxeter::Family;

/// Errors produced by the library.
#[allow(missing_docs)]
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is below the minimum {min} for family {family}")]
    InvalidRank { family: Family, rank: usize, min: usize },
    #[error("letter {0} is not a generator of this graph")]
    InvalidGenerator(usize),
    #[error("unknown generator name {0:?}")]
    UnknownGeneratorName(String),
    #[error("commutation class exceeds cap {0}")]
    ClassOverflow(usize),
    #[error("operation not supported for family {0}")]
    UnsupportedFamily(Family),
    #[error("heap is not reduced fully commutative")]
    NotFullyCommutative,
    #[error("major index is undefined for affine family {0}")]
    MajUndefined(Family),
    #[error("heap is neither alternating nor a right-peak: {0}")]
    Classification(String),
    #[error("cannot encode heap as a walk: {0}")]
    Encoding(String),
    #[error("cannot decode walk: {0}")]
    Decoding(String),
    #[error("inconsistent walk family: {0}")]
    WalkSpec(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("reconciliation failed: {0}")]
    Reconciliation(String),
    #[error("period detection inconclusive: {0}")]
    Inconclusive(String),
    #[error("BFS layer {length} holds more than {bound} elements")]
    LayerOverflow { length: usize, bound: usize },
    #[error("heap is not irreducible")]
    Reducible,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::root_datum::Coweight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("coweight {got} has rank {}, expected {expected}", got.rank())]
    RankMismatch { expected: usize, got: Coweight },

    #[error("coweight {0} is not dominant")]
    NotDominant(Coweight),

    #[error("coweight {0} is not minuscule")]
    NotMinuscule(Coweight),

    #[error("Hecke element is not central")]
    NotCentral,

    #[error("height bound {bound} too small: expansion needs a coweight of height {needed}")]
    HeightBoundTooSmall { bound: i64, needed: i64 },

    #[error("central element has no consistent expansion in Bernstein functions: {0}")]
    InconsistentExpansion(String),

    #[error("reflection subset {0:?} does not generate a finite group")]
    InfiniteParabolic(Vec<usize>),

    #[error("unknown affine simple reflection {0}")]
    UnknownReflection(usize),

    #[error("invalid Levi subgroup: {0}")]
    InvalidLevi(String),

    #[error("operation requires GL(n), got {0}")]
    NotGeneralLinear(String),

    #[error("value indeterminate at tracked precision: {0}")]
    Indeterminate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

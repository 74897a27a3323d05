use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unknown root system type: {0}")]
    UnknownType(String),
    #[error("cocharacter lattice is not between the coroot and coweight lattices: {0}")]
    InvalidLattice(String),
    #[error("isogeny {isogeny:?} is not defined for type {type_label}")]
    IncompatibleIsogeny { type_label: String, isogeny: String },
    #[error("not a diagram automorphism: {0}")]
    InvalidDelta(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different root data")]
    MismatchedData,
    #[error("element is not a (twisted) involution")]
    NotInvolution,
    #[error("twisted involutions are only defined for diagram automorphisms of order 1 or 2")]
    UnsupportedDeltaOrder,
    #[error("element is not elliptic")]
    NotElliptic,
    #[error("operation requires a classical type, got {0}")]
    NotClassical(String),
    #[error("operation requires a simple root datum, got {0}")]
    NotSimple(String),
    #[error("twisted classes requested but the root datum has no diagram automorphism")]
    NoDelta,
    #[error("invalid good-element data: {0}")]
    InvalidGoodData(String),
    #[error("unknown class label: {0}")]
    UnknownLabel(String),
    #[error("unknown table: {0}")]
    UnknownTable(String),
    #[error("{0} is not a regular order of the element")]
    NotRegularOrder(u64),
    #[error("d = 1 is handled by the conjugate-to-delta test")]
    TrivialRegularOrder,
    #[error("search space too large: {0} assignments per generator (limit 10^7)")]
    SearchGuard(u128),
    #[error("invalid splitting certificate: {0}")]
    InvalidCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;

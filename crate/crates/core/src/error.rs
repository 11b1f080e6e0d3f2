use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("matrix is singular")]
    Singular,
    #[error("malformed scalar literal `{0}`")]
    MalformedScalar(String),
    #[error("invalid group spec: {0}")]
    InvalidGroup(String),
    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),
    #[error("invalid Samelson data: {0}")]
    InvalidSamelson(String),
    #[error("invalid Belavin–Drinfeld data: {0}")]
    InvalidTriple(String),
    #[error("subspace is not Lagrangian: {0}")]
    NotLagrangian(String),
    #[error("subspace is not a Lie subalgebra")]
    NotSubalgebra,
    #[error("rank {rank} exceeds the enumeration bound {bound}")]
    RankBound { rank: usize, bound: usize },
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("mismatched ambient algebra")]
    AlgebraMismatch,
    #[error("degenerate spinor generators")]
    DegenerateGenerators,
    #[error("element is not in the annihilator of the spinor")]
    NotInAnnihilator,
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("pair is not canonical")]
    NotCanonical,
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

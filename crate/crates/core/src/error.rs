use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no simple Lie algebra of type {family}{rank}")]
    UnknownType { family: String, rank: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Weyl group of order {order} is too large to enumerate")]
    WeylGroupTooLarge { order: u64 },
    #[error("weight {weight} is not dominant integral")]
    NotDominantIntegral { weight: String },
    #[error("weight has {got} coordinates, rank is {rank}")]
    WrongRank { got: usize, rank: usize },
    #[error("weight {weight} is not in the root lattice")]
    NotInRootLattice { weight: String },
    #[error("module of dimension {dim} exceeds the size cap {cap}")]
    SizeCap { dim: u64, cap: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("module with highest weight {weight} is not self-dual")]
    NotSelfDual { weight: String },
    #[error("Casimir eigenvalue {value} of the Cartan component is shared with constituent {other}")]
    CasimirCollision { value: String, other: String },
    #[error("trace power of degree {degree} does not produce a new invariant generator")]
    DegenerateInvariant { degree: usize },
    #[error("{0} is not supported")]
    Unsupported(String),
    #[error("invariant generators for {0} need the expensive-invariants option")]
    ExpensiveInvariants(String),
    #[error("monomial degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("height {height} exceeds the bound {bound}")]
    HeightBound { height: usize, bound: usize },
    #[error("the zero weight has no codegree")]
    ZeroWeight,
    #[error("level {requested} is not the codegree {codegree}")]
    NotCodegree { requested: usize, codegree: usize },
    #[error("maximal weight multiplicity of {weight} is 1; no counterexample in this type")]
    NoCounterexample { weight: String },
    #[error("pairing of the principal nilpotent power vanished for {weight}")]
    VanishingPairing { weight: String },
    #[error("unknown letter index {0}")]
    UnknownLetter(usize),
    #[error("cache: {0}")]
    Cache(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no arc given between {0} and {1}")]
    MissingPair(usize, usize),
    #[error("both orientations given between {0} and {1}")]
    ConflictingPair(usize, usize),
    #[error("self-arc on vertex {0}")]
    SelfArc(usize),
    #[error("vertex {vertex} out of range for a tournament on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("tournament on more than 64 vertices ({0})")]
    TooLarge(usize),

    #[error("tournament is decomposable")]
    NotIndecomposable,
    #[error("core subtournament is decomposable")]
    CoreNotIndecomposable,
    #[error("core must have at least 3 vertices, got {0}")]
    CoreTooSmall(usize),
    #[error("tournament contains a 3-cycle")]
    NotTransitive,

    #[error("bad size {0}")]
    BadSize(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no tournament satisfies the family specification: {0}")]
    InfeasibleSpec(String),
    #[error("family specification produced non-isomorphic tournaments: {0}")]
    AmbiguousSpec(String),

    #[error("tournament is not in the class of indecomposable tournaments with |W5(T)| = |T| - 2")]
    NotFamilyT,
    #[error("no vertex of W5(T) closes a 3-cycle with the support")]
    NoEligibleVertex,

    #[error("enumeration at n = {n} exceeds the budget cap of {cap}")]
    BudgetExceeded { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

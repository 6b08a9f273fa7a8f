use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring order {0}: the zero ring and empty rings are not supported")]
    InvalidOrder(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("coefficient {coeff} is not reduced modulo {p}")]
    UnreducedCoefficient { coeff: u64, p: u64 },
    #[error("direct product needs at least one factor")]
    EmptyProduct,
    #[error("{what} {size} exceeds the cap of {cap}")]
    Capacity {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("ring tables violate an axiom: {0}")]
    InvalidTable(String),
    #[error("invalid factor spec: {0}")]
    InvalidSpec(String),
    #[error("invalid vertex code: {0}")]
    InvalidCode(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("exact search exceeded its budget of {limit} nodes")]
    BudgetExceeded { limit: u64 },
    #[error("unknown export format {0:?}")]
    UnknownFormat(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by a configured size or search limit.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::BudgetExceeded { .. })
    }
}

use thiserror::Error;

/// Errors raised by the group, graph and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("malformed cycle notation at column {column}: {message}")]
    Malformed { column: usize, message: String },

    #[error("point {point} is out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },

    #[error("point {point} is repeated")]
    RepeatedPoint { point: usize },

    #[error("image table is not a bijection")]
    NotBijection,

    #[error("{budget} exceeded: need {needed}, limit {limit}")]
    BudgetExceeded {
        budget: &'static str,
        needed: String,
        limit: usize,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn budget(budget: &'static str, needed: impl ToString, limit: usize) -> Self {
        Error::BudgetExceeded {
            budget,
            needed: needed.to_string(),
            limit,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

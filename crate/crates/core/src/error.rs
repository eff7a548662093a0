use thiserror::Error;

use crate::profile::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("place index {index} is not among the {n} distinguished places")]
    IndexNotDistinguished { index: usize, n: usize },

    #[error("residue index {i} outside 1..={max}")]
    ResidueOutOfRange { i: i64, max: i64 },

    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),

    #[error("invalid profile:\n{0}")]
    InvalidProfile(ValidationReport),

    #[error("bad preset parameters: {0}")]
    BadPreset(String),

    #[error("point has {got} coordinates, expected {expected}")]
    Arity { expected: usize, got: usize },

    #[error("search region of {region} points exceeds budget of {budget}")]
    BudgetExceeded { region: u128, budget: u128 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("malformed query: {0}")]
    BadQuery(String),

    #[error("malformed window: {0}")]
    BadWindow(String),
}

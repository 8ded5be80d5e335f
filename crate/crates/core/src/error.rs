use thiserror::Error;

use crate::combinat::{Permutation, Subset};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The minimum term weight of `P_subset` is attained by more than one permutation.
    #[error("initial form of P_{subset} is not a monomial: {} permutations tie at weight {weight}", tied.len())]
    Tie { subset: Subset, tied: Vec<Permutation>, weight: String },

    #[error("weight matrix does not induce a matching field: P_{subset} has {} minimal terms", tied.len())]
    Incoherent { subset: Subset, tied: Vec<Permutation> },

    #[error("matching field is not pointed on {element}: it sits in row {first_row} of column {first} and row {second_row} of column {second}")]
    NotPointed { element: usize, first: Subset, first_row: usize, second: Subset, second_row: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArguments(msg.into())
    }
}

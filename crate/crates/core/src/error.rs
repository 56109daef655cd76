use thiserror::Error;

use crate::exactpoly::PolyError;
use crate::groups::GroupError;
use crate::symfunc::SymError;

/// Errors raised while building families and triples.
///
/// Hypothesis violations are kept apart from malformed input so that callers
/// can treat "the theorem does not apply" differently from "the request makes
/// no sense".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CspError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("group of order {order} is even; this construction needs odd order (pass the override to run it anyway)")]
    Parity { order: u64 },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

impl CspError {
    /// True for errors that mean a theorem's hypotheses do not hold.
    pub fn is_hypothesis(&self) -> bool {
        matches!(self, CspError::Hypothesis(_) | CspError::Parity { .. })
    }
}

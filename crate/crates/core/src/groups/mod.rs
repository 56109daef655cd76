//! Finite abelian groups given as explicit products of cyclic groups, and
//! their permutation actions on finite sets.

mod action;
mod perm;

pub use action::{
    character_kernel, character_kernel_embedded, is_nearly_free_permutation, AbelianAction,
    AbelianGroupSpec, Encoding, GroupElement, Orbit,
};
pub use perm::Permutation;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic factor orders must be positive")]
    ZeroOrder,
    #[error("expected {expected} entries, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("map is not a bijection")]
    NotBijection,
    #[error("generator {factor} has order {actual}, which does not divide {order}")]
    OrderViolation { factor: usize, order: u64, actual: u64 },
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("duplicate carrier element {0:?}")]
    DuplicateElement(Vec<u32>),
    #[error("image {0:?} is not in the carrier")]
    NotClosed(Vec<u32>),
    #[error("expected a single cyclic factor, found {0}")]
    NotCyclic(usize),
    #[error("cannot parse permutation: {0}")]
    PermParse(String),
}

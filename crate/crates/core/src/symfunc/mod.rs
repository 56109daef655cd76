//! Partitions, tableaux and the symmetric-function formulas behind the
//! generating functions: hook-content and hook formulas, q-multinomials,
//! plethysm, RSK, and the word/matrix generating functions.

mod hooks;
mod partition;
mod plethysm;
mod rsk;
mod tableau;
mod wordgf;

pub use hooks::{
    count_standard, fake_degree, fake_degree_by_tableaux, fake_degree_in, partitions_fitting,
    q_multinomial, q_multinomial_in, schur_by_tableaux, schur_principal, schur_principal_in,
};
pub use partition::{partitions_of, Cell, Partition};
pub use plethysm::{plethysm_e, plethysm_h, plethysm_schur};
pub use rsk::rsk;
pub use tableau::{column_strict_tableaux, standard_tableaux, Tableau};
pub use wordgf::{cauchy_matrix_genfun, reciprocity_check, word_genfun_compact, MatrixMode};

use thiserror::Error;

use crate::exactpoly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("not a partition: {0:?}")]
    BadPartition(Vec<usize>),
    #[error("composition {parts:?} does not sum to {total}")]
    BadComposition { total: usize, parts: Vec<usize> },
    #[error("enumeration guard exceeded: {0}")]
    Guard(String),
    #[error("multiplicity too large for plethystic expansion")]
    TooLarge,
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Caps on brute-force enumerations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymfuncConfig {
    /// Largest `|lambda|` for tableau enumeration.
    pub max_tableau_size: usize,
    /// Largest alphabet `n` for tableau enumeration.
    pub max_alphabet: usize,
}

impl Default for SymfuncConfig {
    fn default() -> Self {
        SymfuncConfig { max_tableau_size: 8, max_alphabet: 6 }
    }
}

//! Concrete combinatorial sets with cyclic actions and their statistic
//! polynomials: words, finite fields, parking functions, matrices, graphs.
//!
//! Every constructor cross-checks the polynomial obtained by summing the
//! statistic over the carrier against the closed formula, and fails with
//! [`CspError::Internal`] if they ever differ.

mod carriers;
mod finite_field;
mod graphs;
mod matrices;
mod parking;
mod words;

use serde::{Deserialize, Serialize};

pub use carriers::{choose_carrier, combinations, multichoose_carrier};
pub use finite_field::{
    field_word_bijection, finite_field_triple, normal_basis_element, prime_power, FieldWordMap, FiniteFieldFamily,
    FiniteFieldModel, SmallField,
};
pub use graphs::{degrees, graph_carrier, graph_polynomial, graphs_triple, GraphFamily, GraphVariant};
pub use matrices::{matrices_triple, MatrixFamily};
pub use parking::{
    parking_coset_check, parking_functions, parking_to_torus, parking_triple, rearrangement_triple, rearrangements,
    ParkingFamily,
};
pub use words::{all_words, permute_positions, word_genfun_direct, word_inv, word_maj, words_action, words_triple, WordFamily};

use crate::error::CspError;
use crate::sieve::CspTriple;

/// A family descriptor, as read from JSON:
///
/// ```
/// use cyclosieve::families::FamilySpec;
///
/// let spec: FamilySpec =
///     serde_json::from_str(r#"{"family":"words","n":3,"len":2,"value_gen":"(1,2,3)","pos_gen":"(1,2)"}"#).unwrap();
/// assert!(cyclosieve::sieve::verify_csp(&spec.triple(false).unwrap()).verdict());
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Words(WordFamily),
    Parking(ParkingFamily),
    Matrices(MatrixFamily),
    Graphs(GraphFamily),
    FiniteField(FiniteFieldFamily),
}

impl FamilySpec {
    /// Builds the triple; `allow_even` lifts the odd-order requirement.
    pub fn triple(&self, allow_even: bool) -> Result<CspTriple, CspError> {
        match self {
            FamilySpec::Words(f) => f.triple(),
            FamilySpec::Parking(f) => f.triple(),
            FamilySpec::Matrices(f) => f.triple(allow_even),
            FamilySpec::Graphs(f) => f.triple(allow_even),
            FamilySpec::FiniteField(f) => f.triple(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Words(_) => "words",
            FamilySpec::Parking(_) => "parking",
            FamilySpec::Matrices(_) => "matrices",
            FamilySpec::Graphs(_) => "graphs",
            FamilySpec::FiniteField(_) => "finite_field",
        }
    }
}

//! Triples, both forms of the sieving check, constructions that preserve
//! sieving, change of embedding, and the even-order graph scan.

mod constructions;
mod scan;
mod transform;
mod triple;
mod verify;

pub use constructions::{
    choose_construction, multichoose_construction, nested_construction, points_triple, power_construction,
    product_construction, regular_element_check, tensor_power_construction, Power,
};
pub use scan::{counterexample_scan, ModulusCheck, ScanReport, ShiftOutcome};
pub use transform::{transform_embedding, Reembedding};
pub use triple::CspTriple;
pub use verify::{verify_both, verify_coefficient_form, verify_csp, Mode, Record, VerificationReport};

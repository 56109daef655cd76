//! Exact verification of cyclic sieving for combinatorial families.
//!
//! A triple `(X, X(u), C)` sieves when for every `c` in the abelian group
//! `C`, the number of points of `X` fixed by `c` equals `X(u)` evaluated at
//! the roots of unity `omega(c)`. Everything here is exact: polynomials have
//! big-integer coefficients and evaluations live in cyclotomic rings.

pub mod error;
pub mod exactpoly;
pub mod families;
pub mod groups;
pub mod sieve;
pub mod symfunc;

pub use error::CspError;

/// The guide's snippets, compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/symfunc.md")]
    mod symfunc {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/embeddings.md")]
    mod embeddings {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

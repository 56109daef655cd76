//! Exact polynomial arithmetic and root-of-unity evaluation.
//!
//! [`LaurentPoly`] holds generating functions such as `X(u, t)`;
//! [`CyclotomicValue`] holds their values at roots of unity, reduced modulo
//! the relevant cyclotomic polynomial so that equality is coefficient
//! comparison.

mod cyclotomic;
mod laurent;
mod text;

pub use cyclotomic::{cyclotomic_polynomial, totient, CyclotomicValue, EvaluationSpec};
pub use laurent::{dense_exact_div, dense_mul, Exponents, LaurentPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("variable {0} is not in the target variable list")]
    MissingVariable(String),
    #[error("expected {expected} entries, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("reduction orders must be positive")]
    ZeroOrder,
    #[error("evaluation spec covers {spec} variables, polynomial has {vars}")]
    Uncovered { vars: usize, spec: usize },
    #[error("expected a univariate polynomial, found {0} variables")]
    NotUnivariate(usize),
    #[error("negative exponent where a polynomial was required")]
    NegativeExponent,
    #[error("negative coefficient in plethystic argument")]
    NegativeCoefficient,
    #[error("division is not exact")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

use num_integer::Integer;

use crate::error::CspError;
use crate::exactpoly::LaurentPoly;
use crate::groups::AbelianAction;

/// A set with an abelian group action, a generating polynomial with one
/// variable per cyclic factor (in factor order), and the embedding exponents
/// `e_i` sending generator `i` to `zeta_{N_i}^{e_i}`.
#[derive(Clone, Debug)]
pub struct CspTriple {
    action: AbelianAction,
    polynomial: LaurentPoly,
    embedding: Vec<u64>,
}

impl CspTriple {
    /// Triple with the default embeddings (`e_i = 1`).
    pub fn new(action: AbelianAction, polynomial: LaurentPoly) -> Result<Self, CspError> {
        let m = action.group().num_factors();
        Self::with_embedding(action, polynomial, vec![1; m])
    }

    pub fn with_embedding(
        action: AbelianAction,
        polynomial: LaurentPoly,
        embedding: Vec<u64>,
    ) -> Result<Self, CspError> {
        let orders = action.group().orders();
        if polynomial.nvars() != orders.len() {
            return Err(CspError::Input(format!(
                "polynomial has {} variables but the group has {} cyclic factors",
                polynomial.nvars(),
                orders.len()
            )));
        }
        if !polynomial.is_nonnegative() {
            return Err(CspError::Input(format!("polynomial {polynomial} has a negative coefficient")));
        }
        if embedding.len() != orders.len() {
            return Err(CspError::Input("one embedding exponent per factor is required".into()));
        }
        let embedding: Vec<u64> = embedding.iter().zip(orders).map(|(&e, &n)| e % n).collect();
        for (i, (&e, &n)) in embedding.iter().zip(orders).enumerate() {
            if e.gcd(&n) != 1 {
                return Err(CspError::Input(format!(
                    "embedding exponent {e} of factor {i} is not coprime to its order {n}"
                )));
            }
        }
        Ok(CspTriple { action, polynomial, embedding })
    }

    pub fn action(&self) -> &AbelianAction {
        &self.action
    }

    pub fn polynomial(&self) -> &LaurentPoly {
        &self.polynomial
    }

    pub fn embedding(&self) -> &[u64] {
        &self.embedding
    }

    /// Same set and group, different polynomial (kept under the same
    /// embedding).
    pub fn with_polynomial(&self, polynomial: LaurentPoly) -> Result<Self, CspError> {
        Self::with_embedding(self.action.clone(), polynomial, self.embedding.clone())
    }

    /// Same set, group and polynomial under other embeddings.
    pub fn reembedded(&self, embedding: Vec<u64>) -> Result<Self, CspError> {
        Self::with_embedding(self.action.clone(), self.polynomial.clone(), embedding)
    }

    /// `X(u)` reduced modulo `(u_i^{N_i} - 1)`.
    pub fn reduced_polynomial(&self) -> LaurentPoly {
        self.polynomial
            .reduce_mod_orders(self.action.group().orders())
            .expect("one order per variable")
    }

    pub fn variable_names(&self) -> &[String] {
        self.polynomial.vars()
    }
}

/// A variable name not among `taken`: `base`, then `base2`, `base3`, ...
pub(crate) fn fresh_name(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == base) {
        return base.to_string();
    }
    (2..)
        .map(|i| format!("{base}{i}"))
        .find(|c| !taken.iter().any(|t| t == c))
        .expect("unbounded search")
}

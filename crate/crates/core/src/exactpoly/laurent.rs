//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cyclotomic::{CyclotomicValue, EvaluationSpec};
use super::PolyError;

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<i64>;

/// An exact Laurent polynomial over the integers.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration order
/// (and therefore printing) is deterministic. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial over `vars`.
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        LaurentPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant<S: AsRef<str>, C: Into<BigInt>>(vars: &[S], c: C) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.add_term(vec![0; n], c.into());
        p
    }

    /// A single term `coeff * vars^exps`.
    pub fn monomial<S: AsRef<str>, C: Into<BigInt>>(vars: &[S], exps: &[i64], coeff: C) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps.to_vec(), coeff.into());
        p
    }

    /// The single variable `name` as a polynomial in one variable.
    pub fn var(name: &str) -> Self {
        Self::monomial(&[name], &[1], 1)
    }

    /// Univariate polynomial `sum_i coeffs[i] * var^i`.
    pub fn from_coeffs<C: Clone + Into<BigInt>>(var: &str, coeffs: &[C]) -> Self {
        let mut p = Self::zero(&[var]);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as i64], c.clone().into());
        }
        p
    }

    /// The q-integer `[n]_var = 1 + var + ... + var^(n-1)`.
    pub fn q_integer(var: &str, n: usize) -> Self {
        Self::from_coeffs(var, &vec![1; n])
    }

    /// Builds a polynomial from raw terms, dropping zeros and merging duplicates.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Self
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with exponents `exps` (zero if absent).
    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True when every coefficient is positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Value at `u_i = 1` for all `i`.
    pub fn sum_of_coeffs(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    /// Exact product. Both operands must be over the same variable list.
    pub fn multiply(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Exact sum. Both operands must be over the same variable list.
    pub fn add_exact(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Rewrites `self` over `target`, which must contain every variable that
    /// actually occurs in `self`. Variables of `target` not in `self` get
    /// exponent zero.
    pub fn with_variables<S: AsRef<str>>(&self, target: &[S]) -> Result<Self, PolyError> {
        let target: Vec<String> = target.iter().map(|s| s.as_ref().to_string()).collect();
        let mut positions = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match target.iter().position(|t| t == v) {
                Some(p) => positions.push(Some(p)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(PolyError::MissingVariable(v.clone()));
                    }
                    positions.push(None);
                }
            }
        }
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, p) in positions.iter().enumerate() {
                if let Some(p) = p {
                    ne[*p] += e[i];
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Brings two polynomials onto a common variable list. Identical lists are
    /// kept; otherwise the union is taken in lexicographic order.
    pub fn align(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let union: BTreeSet<&String> = self.vars.iter().chain(other.vars.iter()).collect();
        let union: Vec<String> = union.into_iter().cloned().collect();
        (
            self.with_variables(&union).expect("union covers all variables"),
            other.with_variables(&union).expect("union covers all variables"),
        )
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        let mut out = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * &c);
        }
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every exponent by its residue modulo `orders[i]`, i.e. reduces
    /// modulo the ideal `(u_i^{N_i} - 1)`.
    pub fn reduce_mod_orders(&self, orders: &[u64]) -> Result<Self, PolyError> {
        if orders.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: orders.len(),
            });
        }
        if orders.contains(&0) {
            return Err(PolyError::ZeroOrder);
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let r = e
                .iter()
                .zip(orders)
                .map(|(&a, &n)| a.rem_euclid(n as i64))
                .collect();
            out.add_term(r, c.clone());
        }
        Ok(out)
    }

    /// Monomial change of variables: old variable `i` becomes the monomial
    /// `new_vars^images[i]`.
    pub fn substitute_monomials<S: AsRef<str>>(
        &self,
        new_vars: &[S],
        images: &[Exponents],
    ) -> Result<Self, PolyError> {
        if images.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let m = new_vars.len();
        if let Some(bad) = images.iter().find(|img| img.len() != m) {
            return Err(PolyError::Arity {
                expected: m,
                got: bad.len(),
            });
        }
        let mut out = Self::zero(new_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; m];
            for (a, img) in e.iter().zip(images) {
                for (slot, d) in ne.iter_mut().zip(img) {
                    *slot += a * d;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Applies `f` to every exponent vector (collecting collisions).
    pub fn map_exponents<F: Fn(&[i64]) -> Exponents>(&self, f: F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Exact evaluation with `u_i` sent to a root of unity as prescribed by
    /// `spec`; the spec lists one `(order, exponent)` pair per variable.
    pub fn eval_at_roots(&self, spec: &EvaluationSpec) -> Result<CyclotomicValue, PolyError> {
        if spec.len() != self.vars.len() {
            return Err(PolyError::Uncovered {
                vars: self.vars.len(),
                spec: spec.len(),
            });
        }
        let n = spec.conductor();
        let steps = spec.steps();
        let mut acc = vec![BigInt::zero(); n as usize];
        for (e, c) in &self.terms {
            let mut k: i128 = 0;
            for (a, s) in e.iter().zip(&steps) {
                k += *a as i128 * *s as i128;
            }
            let k = k.rem_euclid(n as i128) as usize;
            acc[k] += c;
        }
        Ok(CyclotomicValue::from_power_coeffs(n, acc))
    }

    /// Dense coefficients of a univariate polynomial with nonnegative
    /// exponents, lowest degree first.
    pub fn to_dense(&self) -> Result<Vec<BigInt>, PolyError> {
        if self.vars.len() != 1 {
            return Err(PolyError::NotUnivariate(self.vars.len()));
        }
        let top = match self.terms.keys().last() {
            None => return Ok(Vec::new()),
            Some(e) => e[0],
        };
        if let Some(e) = self.terms.keys().next() {
            if e[0] < 0 {
                return Err(PolyError::NegativeExponent);
            }
        }
        let mut out = vec![BigInt::zero(); top as usize + 1];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        Ok(out)
    }

    /// Renames variables positionally.
    pub fn rename<S: AsRef<str>>(&self, vars: &[S]) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        LaurentPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: self.terms.clone(),
        }
    }

    /// Multiplicity-expanded list of monomials, as used by plethystic
    /// substitution. Fails on negative coefficients.
    pub fn monomial_multiset(&self) -> Result<Vec<(Exponents, BigInt)>, PolyError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if c.is_negative() {
                return Err(PolyError::NegativeCoefficient);
            }
            out.push((e.clone(), c.clone()));
        }
        Ok(out)
    }

}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = self.align(rhs);
        a.add_exact(&b).expect("aligned")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = self.align(rhs);
        a.multiply(&b).expect("aligned")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(mut iter: I) -> LaurentPoly {
        let first = iter.next().unwrap_or_else(|| LaurentPoly::zero::<&str>(&[]));
        iter.fold(first, |a, b| &a + &b)
    }
}

/// Exact division of dense univariate integer polynomials; `None` when the
/// remainder is nonzero or the divisor's leading coefficient does not divide.
pub fn dense_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let den_deg = den.iter().rposition(|c| !c.is_zero())?;
    let lead = &den[den_deg];
    let mut rem: Vec<BigInt> = num.to_vec();
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    if rem.len() <= den_deg {
        return if rem.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - den_deg];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + den_deg];
        if top.is_zero() {
            continue;
        }
        if !(top % lead).is_zero() {
            return None;
        }
        let q = top / lead;
        for (j, d) in den.iter().enumerate().take(den_deg + 1) {
            rem[i + j] -= &q * d;
        }
        quot[i] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

/// Dense product of univariate integer polynomials.
pub fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

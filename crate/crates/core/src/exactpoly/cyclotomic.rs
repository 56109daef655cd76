//! Cyclotomic integers `Z[zeta_N]`, stored in the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)` after reduction modulo `Phi_N`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{dense_exact_div, dense_mul};

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut hi: Vec<u64> = out.iter().map(|d| n / d).filter(|&e| e * e != n).collect();
    hi.reverse();
    out.extend(hi);
    out
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d(x)` by exact division.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    cyclotomic_shared(n).as_ref().clone()
}

fn cyclotomic_shared(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_shared(d);
        poly = dense_exact_div(&poly, &phi_d).expect("Phi_d divides x^n - 1");
    }
    let poly = Arc::new(poly);
    phi_cache().lock().unwrap().insert(n, poly.clone());
    poly
}

/// Euler's totient, read off as the degree of `Phi_n`.
pub fn totient(n: u64) -> usize {
    cyclotomic_shared(n).len() - 1
}

/// Substitution rule for a root-of-unity evaluation: variable `i` is sent to
/// `zeta_{N_i}^{e_i}`, realized inside the conductor `N = lcm(N_i)` as
/// `zeta_N^{(N / N_i) e_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvaluationSpec {
    assignments: Vec<(u64, u64)>,
}

impl EvaluationSpec {
    /// Each pair is `(order, exponent)` with `order >= 1`; the exponent is
    /// taken modulo the order.
    pub fn new(assignments: Vec<(u64, u64)>) -> Self {
        let assignments = assignments
            .into_iter()
            .map(|(n, e)| {
                assert!(n >= 1, "root-of-unity order must be positive");
                (n, e % n)
            })
            .collect();
        EvaluationSpec { assignments }
    }

    /// Every variable sent to 1.
    pub fn ones(nvars: usize) -> Self {
        EvaluationSpec::new(vec![(1, 0); nvars])
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn assignments(&self) -> &[(u64, u64)] {
        &self.assignments
    }

    pub fn conductor(&self) -> u64 {
        self.assignments.iter().fold(1u64, |acc, &(n, _)| acc.lcm(&n))
    }

    /// Per-variable exponent of `zeta_N` contributed by a unit exponent.
    pub fn steps(&self) -> Vec<u64> {
        let n = self.conductor();
        self.assignments.iter().map(|&(ni, e)| (n / ni) * e).collect()
    }
}

/// An element of `Z[zeta_N]` in canonical form.
#[derive(Clone, Debug)]
pub struct CyclotomicValue {
    conductor: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicValue {
    /// Element with coefficients on `1, zeta_N, ..., zeta_N^(k-1)` (any `k`),
    /// reduced modulo `Phi_N`.
    pub fn from_power_coeffs(conductor: u64, coeffs: Vec<BigInt>) -> Self {
        let phi = cyclotomic_shared(conductor);
        let deg = phi.len() - 1;
        let mut c = coeffs;
        // Phi_N is monic, so plain long division reduces.
        for i in (deg..c.len()).rev() {
            if c[i].is_zero() {
                continue;
            }
            let q = std::mem::take(&mut c[i]);
            for (j, p) in phi.iter().enumerate().take(deg) {
                c[i - deg + j] -= &q * p;
            }
        }
        c.resize(deg, BigInt::zero());
        CyclotomicValue { conductor, coeffs: c }
    }

    pub fn integer<C: Into<BigInt>>(k: C) -> Self {
        CyclotomicValue { conductor: 1, coeffs: vec![k.into()] }
    }

    /// `zeta_N^k`.
    pub fn zeta_pow(conductor: u64, k: i64) -> Self {
        let k = k.rem_euclid(conductor as i64) as usize;
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Self::from_power_coeffs(conductor, c)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Re-expresses the value in conductor `m`, a multiple of the current one.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.conductor), "lift target must be a multiple of the conductor");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut c = vec![BigInt::zero(); step * self.coeffs.len().max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * step] = a.clone();
        }
        Self::from_power_coeffs(m, c)
    }

    /// Returns the value if it is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let (first, rest) = self.coeffs.split_first()?;
        if rest.iter().all(|c| c.is_zero()) {
            Some(first.clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.conductor.lcm(&other.conductor);
        (self.lift(m), other.lift(m))
    }
}

impl PartialEq for CyclotomicValue {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicValue {}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        let (a, b) = self.common(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicValue { conductor: a.conductor, coeffs }
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self + &(-rhs)
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn mul(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        let (a, b) = self.common(rhs);
        CyclotomicValue::from_power_coeffs(a.conductor, dense_mul(&a.coeffs, &b.coeffs))
    }
}

/// Prints integers plainly and other values as a sum of powers of `z<N>`,
/// e.g. `1 - z6^1`.
impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.as_integer() {
            return write!(f, "{}", k);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn product_over_divisors_reconstructs_x_n_minus_1() {
        for n in 1..=60u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(ints(&[1]), |acc, d| dense_mul(&acc, &cyclotomic_polynomial(d)));
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn as_integer_cases() {
        assert_eq!(CyclotomicValue::integer(5).as_integer(), Some(BigInt::from(5)));
        let z = CyclotomicValue::zeta_pow(3, 1);
        let z2 = CyclotomicValue::zeta_pow(3, 2);
        let s = &(&z + &z2) + &CyclotomicValue::integer(1);
        assert_eq!(s.as_integer(), Some(BigInt::zero()));
        assert_eq!(CyclotomicValue::zeta_pow(4, 1).as_integer(), None);
    }

    #[test]
    fn lift_preserves_value() {
        let z3 = CyclotomicValue::zeta_pow(3, 1);
        assert_eq!(z3, CyclotomicValue::zeta_pow(6, 2));
        assert_eq!(CyclotomicValue::zeta_pow(2, 1), CyclotomicValue::integer(-1));
        assert_eq!(&z3 * &z3, CyclotomicValue::zeta_pow(12, 8));
    }

    #[test]
    fn display() {
        assert_eq!(CyclotomicValue::integer(-3).to_string(), "-3");
        assert_eq!(CyclotomicValue::zeta_pow(4, 1).to_string(), "z4^1");
        assert_eq!(CyclotomicValue::zeta_pow(3, 2).to_string(), "-1 - z3^1");
    }
}

//! Plethystic substitution of a Laurent polynomial with nonnegative
//! coefficients into `e_k`, `h_k` and Schur functions.
//!
//! `f[X]` substitutes the multiset of monomials of `X` (with multiplicity)
//! for the variables of `f`. For `e_k` and `h_k` this is the coefficient of
//! `z^k` in `prod (1 + m z)^a` and `prod (1 - m z)^{-a}` respectively.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::partition::Partition;
use super::SymError;
use crate::exactpoly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Elementary,
    Complete,
}

/// Power series in `z` truncated at degree `k`, coefficients in `X`'s ring.
fn generating_series(kind: Kind, k: usize, x: &LaurentPoly) -> Result<Vec<LaurentPoly>, SymError> {
    let vars = x.vars().to_vec();
    let zero = LaurentPoly::zero(&vars);
    let mut series = vec![zero.clone(); k + 1];
    series[0] = LaurentPoly::one(&vars);
    for (mono, mult) in x.monomial_multiset()? {
        let a: usize = usize::try_from(&mult).map_err(|_| SymError::TooLarge)?;
        let max_j = match kind {
            Kind::Elementary => a.min(k),
            Kind::Complete => k,
        };
        // factor = sum_j c_j m^j z^j
        let factor: Vec<LaurentPoly> = (0..=max_j)
            .map(|j| {
                let c = match kind {
                    Kind::Elementary => binomial(BigInt::from(a), BigInt::from(j)),
                    Kind::Complete => binomial(BigInt::from(a + j) - 1, BigInt::from(j)),
                };
                let e: Vec<i64> = mono.iter().map(|&d| d * j as i64).collect();
                LaurentPoly::monomial(&vars, &e, c)
            })
            .collect();
        let mut next = vec![zero.clone(); k + 1];
        for (i, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (j, f) in factor.iter().enumerate() {
                if i + j > k {
                    break;
                }
                let prod = s.multiply(f)?;
                next[i + j] = next[i + j].add_exact(&prod)?;
            }
        }
        series = next;
    }
    Ok(series)
}

/// `e_k[X]`.
pub fn plethysm_e(k: usize, x: &LaurentPoly) -> Result<LaurentPoly, SymError> {
    Ok(generating_series(Kind::Elementary, k, x)?.swap_remove(k))
}

/// `h_k[X]`.
pub fn plethysm_h(k: usize, x: &LaurentPoly) -> Result<LaurentPoly, SymError> {
    Ok(generating_series(Kind::Complete, k, x)?.swap_remove(k))
}

/// `s_lambda[X]` via the Jacobi-Trudi determinant `det(h_{lambda_i - i + j}[X])`.
pub fn plethysm_schur(lambda: &Partition, x: &LaurentPoly) -> Result<LaurentPoly, SymError> {
    let vars = x.vars().to_vec();
    let r = lambda.len();
    if r == 0 {
        return Ok(LaurentPoly::one(&vars));
    }
    let top = lambda.parts()[0] + r;
    let h = generating_series(Kind::Complete, top, x)?;
    let zero = LaurentPoly::zero(&vars);
    let entry = |i: usize, j: usize| -> &LaurentPoly {
        let idx = lambda.parts()[i] as i64 - i as i64 + j as i64;
        if idx < 0 {
            &zero
        } else {
            &h[idx as usize]
        }
    };
    // Laplace expansion along the first row, columns tracked by bitmask.
    fn det<'a>(
        row: usize,
        used: u64,
        r: usize,
        entry: &dyn Fn(usize, usize) -> &'a LaurentPoly,
        vars: &[String],
    ) -> LaurentPoly {
        if row == r {
            return LaurentPoly::one(vars);
        }
        let mut acc = LaurentPoly::zero(vars);
        let mut sign = BigInt::one();
        for col in 0..r {
            if used & (1 << col) != 0 {
                continue;
            }
            let a = entry(row, col);
            if !a.is_zero() {
                let minor = det(row + 1, used | (1 << col), r, entry, vars);
                let term = a.multiply(&minor).expect("same variables").scale(sign.clone());
                acc = acc.add_exact(&term).expect("same variables");
            }
            sign = -sign;
        }
        acc
    }
    Ok(det(0, 0, r, &entry, &vars))
}

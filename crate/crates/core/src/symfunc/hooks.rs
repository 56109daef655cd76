//! Product formulas: hook-content for principally specialized Schur
//! functions, the hook formula for fake degrees, and q-multinomials.
//!
//! Product formulas are evaluated by exact division; a nonzero remainder
//! means a transcription fault and panics.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{partitions_of, Partition};
use super::tableau::{column_strict_tableaux, standard_tableaux};
use super::{SymError, SymfuncConfig};
use crate::exactpoly::{dense_exact_div, dense_mul, LaurentPoly};

/// `1 - x^a` as a dense vector (`a >= 1`).
fn one_minus_power(a: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); a + 1];
    v[0] = BigInt::one();
    v[a] = BigInt::from(-1);
    v
}

fn product_of_one_minus<I: IntoIterator<Item = usize>>(exps: I) -> Vec<BigInt> {
    exps.into_iter().fold(vec![BigInt::one()], |acc, a| dense_mul(&acc, &one_minus_power(a)))
}

fn shifted(var: &str, dense: Vec<BigInt>, shift: usize) -> LaurentPoly {
    LaurentPoly::from_terms(
        &[var],
        dense.into_iter().enumerate().map(|(i, c)| (vec![(i + shift) as i64], c)),
    )
}

/// `s_lambda(1, u, ..., u^{n-1})` by the hook-content formula, in the
/// variable `var`.
pub fn schur_principal_in(lambda: &Partition, n: usize, var: &str) -> LaurentPoly {
    if lambda.len() > n {
        return LaurentPoly::zero(&[var]);
    }
    let num = product_of_one_minus(lambda.contents().into_iter().map(|c| (n as i64 + c) as usize));
    let den = product_of_one_minus(lambda.hooks());
    let q = dense_exact_div(&num, &den).expect("hook-content quotient is exact");
    shifted(var, q, lambda.b())
}

/// `s_lambda[[n]_u]` in the variable `u`.
pub fn schur_principal(lambda: &Partition, n: usize) -> LaurentPoly {
    schur_principal_in(lambda, n, "u")
}

/// The same specialization by enumerating column-strict tableaux with
/// entries in `[n]`, each contributing `u^{sum(entry - 1)}`.
pub fn schur_by_tableaux(lambda: &Partition, n: usize, config: &SymfuncConfig) -> Result<LaurentPoly, SymError> {
    if lambda.size() > config.max_tableau_size || n > config.max_alphabet {
        return Err(SymError::Guard(format!(
            "tableau enumeration for |lambda| = {}, n = {} exceeds the configured guard ({}, {})",
            lambda.size(),
            n,
            config.max_tableau_size,
            config.max_alphabet
        )));
    }
    let mut p = LaurentPoly::zero(&["u"]);
    for t in column_strict_tableaux(lambda, n as u32) {
        p.add_term(vec![t.weight() as i64], BigInt::one());
    }
    Ok(p)
}

/// `(t;t)_k = (1 - t)(1 - t^2)...(1 - t^k)`, dense.
fn q_pochhammer(k: usize) -> Vec<BigInt> {
    product_of_one_minus(1..=k)
}

/// Fake degree `f^lambda(t) = t^{b(lambda)} (t;t)_k / prod_x (1 - t^{h(x)})`.
pub fn fake_degree_in(lambda: &Partition, var: &str) -> LaurentPoly {
    let num = q_pochhammer(lambda.size());
    let den = product_of_one_minus(lambda.hooks());
    let q = dense_exact_div(&num, &den).expect("fake degree quotient is exact");
    shifted(var, q, lambda.b())
}

pub fn fake_degree(lambda: &Partition) -> LaurentPoly {
    fake_degree_in(lambda, "t")
}

/// `sum_Q t^{maj(Q)}` over standard Young tableaux of shape `lambda`.
pub fn fake_degree_by_tableaux(lambda: &Partition) -> LaurentPoly {
    let mut p = LaurentPoly::zero(&["t"]);
    for q in standard_tableaux(lambda) {
        p.add_term(vec![q.maj() as i64], BigInt::one());
    }
    p
}

/// Gaussian binomial `[n choose k]_q` by the q-Pascal recurrence, dense.
fn q_binomial_dense(n: usize, k: usize) -> Vec<BigInt> {
    if k > n {
        return Vec::new();
    }
    // row[j] = [i choose j]_q for the current i
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            if j == 0 || j == i {
                next.push(vec![BigInt::one()]);
                continue;
            }
            // [i;j] = [i-1;j-1] + q^j [i-1;j]
            let a = &row[j - 1];
            let b = &row[j];
            let mut c = vec![BigInt::zero(); a.len().max(b.len() + j)];
            for (d, x) in a.iter().enumerate() {
                c[d] += x;
            }
            for (d, x) in b.iter().enumerate() {
                c[d + j] += x;
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// The q-multinomial `[l; k_1, ..., k_r]_q` as a product of q-binomials.
pub fn q_multinomial_in(total: usize, parts: &[usize], var: &str) -> Result<LaurentPoly, SymError> {
    if parts.iter().sum::<usize>() != total {
        return Err(SymError::BadComposition { total, parts: parts.to_vec() });
    }
    let mut acc = vec![BigInt::one()];
    let mut running = 0;
    for &k in parts {
        running += k;
        acc = dense_mul(&acc, &q_binomial_dense(running, k));
    }
    Ok(shifted(var, acc, 0))
}

pub fn q_multinomial(total: usize, parts: &[usize]) -> Result<LaurentPoly, SymError> {
    q_multinomial_in(total, parts, "q")
}

/// Number of standard Young tableaux, i.e. `f^lambda(1)`.
pub fn count_standard(lambda: &Partition) -> BigInt {
    fake_degree(lambda).sum_of_coeffs()
}

/// All `lambda |- k` with `s_lambda[[n]_u]` nonzero (at most `n` parts).
pub fn partitions_fitting(k: usize, n: usize) -> Vec<Partition> {
    partitions_of(k).into_iter().filter(|p| p.len() <= n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str, v: &str) -> LaurentPoly {
        LaurentPoly::parse(s, Some(&[v])).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_principal_examples() {
        assert_eq!(schur_principal(&part("1"), 3), poly("1 + u + u^2", "u"));
        assert_eq!(schur_principal(&part("1,1"), 2), poly("u", "u"));
        assert_eq!(schur_principal(&part("2"), 2), poly("1 + u + u^2", "u"));
        assert!(schur_principal(&part("1,1,1"), 2).is_zero());
        assert_eq!(schur_principal(&Partition::empty(), 3), poly("1", "u"));
    }

    #[test]
    fn tableau_route_examples() {
        let cfg = SymfuncConfig::default();
        assert_eq!(schur_by_tableaux(&part("1"), 2, &cfg).unwrap(), poly("1 + u", "u"));
        assert_eq!(schur_by_tableaux(&part("2,1"), 3, &cfg).unwrap(), schur_principal(&part("2,1"), 3));
        // three tableaux 111/2, 112/2, 122/2
        let p31 = schur_by_tableaux(&part("3,1"), 2, &cfg).unwrap();
        assert_eq!(p31, poly("u + u^2 + u^3", "u"));
        assert_eq!(p31, schur_principal(&part("3,1"), 2));
        assert!(matches!(schur_by_tableaux(&part("5,4"), 2, &cfg), Err(SymError::Guard(_))));
    }

    #[test]
    fn fake_degree_examples() {
        assert_eq!(fake_degree(&part("4")), poly("1", "t"));
        assert_eq!(fake_degree(&Partition::column(4)), poly("t^6", "t"));
        assert_eq!(fake_degree(&part("2,1")), poly("t + t^2", "t"));
        assert_eq!(count_standard(&part("3,2")), BigInt::from(5));
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(q_multinomial(3, &[3]).unwrap(), poly("1", "q"));
        assert_eq!(q_multinomial(3, &[1, 1, 1]).unwrap(), poly("1 + 2*q + 2*q^2 + q^3", "q"));
        assert_eq!(q_multinomial(3, &[2, 1]).unwrap(), poly("1 + q + q^2", "q"));
        assert_eq!(q_multinomial(4, &[2, 2]).unwrap(), poly("1 + q + 2*q^2 + q^3 + q^4", "q"));
        assert!(q_multinomial(4, &[2, 1]).is_err());
    }
}

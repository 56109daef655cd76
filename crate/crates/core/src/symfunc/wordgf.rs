//! Bivariate generating functions assembled from Schur functions and fake
//! degrees: words by content and major index, matrices by row and column
//! sums, and the reciprocity identity for the word polynomial.

use num_bigint::BigInt;

use super::hooks::{fake_degree_in, schur_principal_in};
use super::partition::{partitions_of, Partition};
use crate::exactpoly::LaurentPoly;

const UT: [&str; 2] = ["u", "t"];

fn in_ut(p: &LaurentPoly) -> LaurentPoly {
    p.with_variables(&UT).expect("u/t polynomial")
}

/// `X_{n,l}(u, t) = sum_{lambda |- l} s_lambda[[n]_u] f^lambda(t)`.
pub fn word_genfun_compact(n: usize, len: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(&UT);
    for lambda in partitions_of(len) {
        let s = in_ut(&schur_principal_in(&lambda, n, "u"));
        if s.is_zero() {
            continue;
        }
        let f = in_ut(&fake_degree_in(&lambda, "t"));
        acc = acc.add_exact(&s.multiply(&f).expect("same vars")).expect("same vars");
    }
    acc
}

/// Matrix modes: nonnegative integer entries or 0/1 entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum MatrixMode {
    #[serde(rename = "N")]
    Nonnegative,
    #[serde(rename = "ZO")]
    ZeroOne,
}

impl std::str::FromStr for MatrixMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "N" | "n" => Ok(MatrixMode::Nonnegative),
            "ZO" | "zo" => Ok(MatrixMode::ZeroOne),
            other => Err(format!("unknown matrix mode {other:?} (expected N or ZO)")),
        }
    }
}

/// Principally specialized Cauchy (mode N) or dual Cauchy (mode ZO) sum over
/// `lambda |- k`.
pub fn cauchy_matrix_genfun(m: usize, n: usize, k: usize, mode: MatrixMode) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(&UT);
    for lambda in partitions_of(k) {
        let right = match mode {
            MatrixMode::Nonnegative => lambda.clone(),
            MatrixMode::ZeroOne => lambda.conjugate(),
        };
        let a = in_ut(&schur_principal_in(&lambda, m, "u"));
        let b = in_ut(&schur_principal_in(&right, n, "t"));
        acc = acc.add_exact(&a.multiply(&b).expect("same vars")).expect("same vars");
    }
    acc
}

fn mono(u: i64, t: i64) -> LaurentPoly {
    LaurentPoly::monomial(&UT, &[u, t], 1)
}

/// `1 - u^a t^b`.
fn one_minus(u: i64, t: i64) -> LaurentPoly {
    &LaurentPoly::one(&UT) - &mono(u, t)
}

fn product<I: IntoIterator<Item = LaurentPoly>>(factors: I) -> LaurentPoly {
    factors
        .into_iter()
        .fold(LaurentPoly::one(&UT), |acc, f| acc.multiply(&f).expect("same vars"))
}

/// Numerator and denominator of `T_{lambda,l}(n, u, t^s)` for `s = +-1`:
/// numerator `(t^s; t^s)_l (u t^s)^{b} prod_x (1 - u^{n + c(x)})`,
/// denominator `prod_x (1 - u^{h(x)})(1 - t^{s h(x)})`.
fn t_factor(lambda: &Partition, len: usize, n: i64, s: i64) -> (LaurentPoly, LaurentPoly) {
    let b = lambda.b() as i64;
    let poch = product((1..=len as i64).map(|i| one_minus(0, s * i)));
    let contents = product(lambda.contents().into_iter().map(|c| one_minus(n + c, 0)));
    let num = product([poch, mono(b, s * b), contents]);
    let den = product(
        lambda
            .hooks()
            .into_iter()
            .map(|h| one_minus(h as i64, 0).multiply(&one_minus(0, s * h as i64)).expect("same vars")),
    );
    (num, den)
}

/// Checks `t^{binom(l,2)} T_{lambda,l}(n,u,1/t) = (-u^n)^l T_{lambda',l}(-n,u,t)`
/// as a cross-multiplied identity of Laurent polynomials.
pub fn reciprocity_check(lambda: &Partition, len: usize, n: usize) -> bool {
    assert_eq!(lambda.size(), len, "lambda must partition l");
    let n = n as i64;
    let l = len as i64;
    let (num_l, den_l) = t_factor(lambda, len, n, -1);
    let num_l = num_l.shift(&[0, l * (l - 1) / 2]);
    let (num_r, den_r) = t_factor(&lambda.conjugate(), len, -n, 1);
    let sign = if len.is_multiple_of(2) { 1 } else { -1 };
    let num_r = num_r.shift(&[n * l, 0]).scale(BigInt::from(sign));
    let lhs = num_l.multiply(&den_r).expect("same vars");
    let rhs = num_r.multiply(&den_l).expect("same vars");
    lhs == rhs
}

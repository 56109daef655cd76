use serde::{Deserialize, Serialize};

use crate::error::CspError;
use crate::exactpoly::LaurentPoly;
use crate::groups::{is_nearly_free_permutation, AbelianAction, AbelianGroupSpec, Encoding, Permutation};
use crate::sieve::CspTriple;
use crate::symfunc::word_genfun_compact;

/// Sum of the positions `i` (1-based) with `w_i > w_{i+1}`.
pub fn word_maj(w: &[u32]) -> u64 {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

/// Number of pairs `i < j` with `w_i > w_j`.
pub fn word_inv(w: &[u32]) -> u64 {
    let mut k = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                k += 1;
            }
        }
    }
    k
}

/// All words of length `len` over `{1..n}`, lexicographic.
pub fn all_words(n: usize, len: usize) -> Vec<Encoding> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=n as u32).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// `(sigma . w)_{sigma(i)} = w_i` for a permutation of positions.
pub fn permute_positions(sigma: &Permutation, w: &[u32]) -> Encoding {
    let mut out = vec![0; w.len()];
    for (i, &a) in w.iter().enumerate() {
        out[sigma.apply(i)] = a;
    }
    out
}

/// Words of length `len` over `[n]` acted on by a value generator and a
/// position generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordFamily {
    pub n: usize,
    pub len: usize,
    /// Cycle notation, 1-based; defaults to the long cycle on `[n]`.
    #[serde(default)]
    pub value_gen: Option<String>,
    /// Cycle notation, 1-based; defaults to the long cycle on positions.
    #[serde(default)]
    pub pos_gen: Option<String>,
}

pub(crate) fn parse_or_long(spec: &Option<String>, n: usize, what: &str) -> Result<Permutation, CspError> {
    match spec {
        None => Ok(Permutation::long_cycle(n)),
        Some(s) => Permutation::parse(s, Some(n))
            .map_err(|e| CspError::Input(format!("{what} generator: {e}"))),
    }
}

pub(crate) fn require_nearly_free(p: &Permutation, what: &str) -> Result<(), CspError> {
    if is_nearly_free_permutation(p) {
        Ok(())
    } else {
        Err(CspError::Hypothesis(format!("{what} generator {p} is not nearly free")))
    }
}

/// The carrier `[n]^len` with `c` acting letterwise and `sigma` permuting
/// positions.
pub fn words_action(n: usize, len: usize, c: &Permutation, sigma: &Permutation) -> Result<AbelianAction, CspError> {
    if c.degree() != n || sigma.degree() != len {
        return Err(CspError::Input("generator degrees must be n and len".into()));
    }
    let group = AbelianGroupSpec::with_labels(vec![c.order(), sigma.order()], vec!["c".into(), "sigma".into()])?;
    let action = AbelianAction::from_rule(group, all_words(n, len), |f, w| match f {
        0 => w.iter().map(|&a| c.apply(a as usize - 1) as u32 + 1).collect(),
        _ => permute_positions(sigma, w),
    })?;
    Ok(action)
}

impl WordFamily {
    pub fn triple(&self) -> Result<CspTriple, CspError> {
        if self.n == 0 {
            return Err(CspError::Input("alphabet must be nonempty".into()));
        }
        let c = parse_or_long(&self.value_gen, self.n, "value")?;
        let sigma = parse_or_long(&self.pos_gen, self.len, "position")?;
        require_nearly_free(&c, "value")?;
        require_nearly_free(&sigma, "position")?;
        let action = words_action(self.n, self.len, &c, &sigma)?;
        let direct = word_genfun_direct(self.n, self.len);
        if direct != word_genfun_compact(self.n, self.len) {
            return Err(CspError::Internal("word polynomial: statistic sum and Schur formula differ".into()));
        }
        CspTriple::new(action, direct)
    }
}

/// `([n]^len, X_{n,len}, C x C')` with long cycles on values and positions.
pub fn words_triple(n: usize, len: usize) -> Result<CspTriple, CspError> {
    WordFamily { n, len, value_gen: None, pos_gen: None }.triple()
}

/// `sum_w u^{sum (w_i - 1)} t^{maj(w)}` by enumeration.
pub fn word_genfun_direct(n: usize, len: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(&["u", "t"]);
    for w in all_words(n, len) {
        let weight: i64 = w.iter().map(|&a| a as i64 - 1).sum();
        acc.add_term(vec![weight, word_maj(&w) as i64], 1.into());
    }
    acc
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::words::{all_words, parse_or_long, permute_positions, require_nearly_free, word_inv, word_maj};
use crate::error::CspError;
use crate::exactpoly::LaurentPoly;
use crate::groups::{AbelianAction, AbelianGroupSpec, Encoding, Permutation};
use crate::sieve::CspTriple;
use crate::symfunc::q_multinomial_in;

/// Words in `[len]^len` whose weakly increasing rearrangement `a` has
/// `a_i <= i`.
pub fn parking_functions(len: usize) -> Vec<Encoding> {
    all_words(len, len)
        .into_iter()
        .filter(|w| {
            let mut a = w.clone();
            a.sort_unstable();
            a.iter().enumerate().all(|(i, &x)| x as usize <= i + 1)
        })
        .collect()
}

/// `sum t^{stat(w)}` over a set of words, in the single variable `var`.
fn stat_polynomial(words: &[Encoding], var: &str, stat: fn(&[u32]) -> u64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(&[var]);
    for w in words {
        acc.add_term(vec![stat(w) as i64], 1.into());
    }
    acc
}

fn position_action(words: Vec<Encoding>, sigma: &Permutation) -> Result<AbelianAction, CspError> {
    let group = AbelianGroupSpec::with_labels(vec![sigma.order()], vec!["sigma".into()])?;
    Ok(AbelianAction::from_rule(group, words, |_, w| permute_positions(sigma, w))?)
}

/// Parking functions of length `len` with a cyclic group permuting
/// positions, `X(t) = sum t^{maj}`.
pub fn parking_triple(len: usize, sigma: &Permutation) -> Result<CspTriple, CspError> {
    if len == 0 {
        return Err(CspError::Input("parking functions need len >= 1".into()));
    }
    if sigma.degree() != len {
        return Err(CspError::Input(format!("position generator must act on {len} points")));
    }
    require_nearly_free(sigma, "position")?;
    let words = parking_functions(len);
    let maj = stat_polynomial(&words, "t", word_maj);
    if maj != stat_polynomial(&words, "t", word_inv) {
        return Err(CspError::Internal("maj and inv are not equidistributed on parking functions".into()));
    }
    CspTriple::new(position_action(words, sigma)?, maj)
}

/// All distinct rearrangements of `w`, lexicographic.
pub fn rearrangements(w: &[u32]) -> Vec<Encoding> {
    let mut cur = w.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// The rearrangement class of `w` with `X(q) = sum q^{maj}`, cross-checked
/// against the q-multinomial coefficient of its content.
pub fn rearrangement_triple(w: &[u32], sigma: &Permutation) -> Result<CspTriple, CspError> {
    if sigma.degree() != w.len() {
        return Err(CspError::Input(format!("position generator must act on {} points", w.len())));
    }
    require_nearly_free(sigma, "position")?;
    let words = rearrangements(w);
    let poly = stat_polynomial(&words, "q", word_maj);
    let mut content: BTreeMap<u32, usize> = BTreeMap::new();
    for &a in w {
        *content.entry(a).or_default() += 1;
    }
    let parts: Vec<usize> = content.into_values().collect();
    if poly != q_multinomial_in(w.len(), &parts, "q")? {
        return Err(CspError::Internal("maj sum differs from the q-multinomial".into()));
    }
    CspTriple::new(position_action(words, sigma)?, poly)
}

/// Parking functions as a JSON family descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParkingFamily {
    pub len: usize,
    #[serde(default)]
    pub pos_gen: Option<String>,
}

impl ParkingFamily {
    pub fn triple(&self) -> Result<CspTriple, CspError> {
        parking_triple(self.len, &parse_or_long(&self.pos_gen, self.len, "position")?)
    }
}

/// `a -> (a_i - a_len mod len+1)_{i < len}`, sending a parking function to
/// the coset representative of `a - 1` in `Z_{len+1}^len / (1,..,1)` with
/// last coordinate zero.
pub fn parking_to_torus(a: &[u32]) -> Encoding {
    let m = a.len() as i64 + 1;
    let last = *a.last().expect("nonempty") as i64;
    a[..a.len() - 1].iter().map(|&x| (x as i64 - last).rem_euclid(m) as u32).collect()
}

/// For every cyclic subgroup of `S_{len-1}` (fixing position `len`), checks
/// that `parking_to_torus` is a bijection onto `Z_{len+1}^{len-1}` that
/// intertwines the two position actions. Equivariance plus bijectivity give
/// equal fixed-point counts and orbit sizes; those are compared too.
pub fn parking_coset_check(len: usize) -> Result<(), CspError> {
    if len == 0 {
        return Err(CspError::Input("len must be positive".into()));
    }
    let pf = parking_functions(len);
    let images: Vec<Encoding> = pf.iter().map(|a| parking_to_torus(a)).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let torus: Vec<Encoding> = all_words(len + 1, len - 1)
        .into_iter()
        .map(|w| w.into_iter().map(|x| x - 1).collect())
        .collect();
    if sorted.len() != pf.len() || sorted != torus {
        return Err(CspError::Internal(format!("parking map is not a bijection for len={len}")));
    }
    for tau in all_permutations(len - 1) {
        let mut full: Vec<usize> = tau.images().to_vec();
        full.push(len - 1);
        let sigma = Permutation::from_images(full)?;
        for (a, img) in pf.iter().zip(&images) {
            if parking_to_torus(&permute_positions(&sigma, a)) != permute_positions(&tau, img) {
                return Err(CspError::Internal(format!("parking map not equivariant at {a:?}")));
            }
        }
        let left = position_action(pf.clone(), &sigma)?;
        let right = position_action(torus.clone(), &tau)?;
        let sizes = |act: &AbelianAction| {
            let mut s: Vec<usize> = act.orbits().iter().map(|o| o.len()).collect();
            s.sort_unstable();
            s
        };
        let fixed = |act: &AbelianAction| -> Vec<usize> {
            act.group().elements().iter().map(|g| act.fixed_point_count(g)).collect()
        };
        if sizes(&left) != sizes(&right) || fixed(&left) != fixed(&right) {
            return Err(CspError::Internal(format!("orbit data differ under {tau}")));
        }
    }
    Ok(())
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    rearrangements(&(0..n as u32).collect::<Vec<_>>())
        .into_iter()
        .map(|p| Permutation::from_images(p.into_iter().map(|x| x as usize).collect()).expect("bijection"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::{verify_coefficient_form, verify_csp};

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, Some(&["t"])).unwrap()
    }

    #[test]
    fn small_parking_sets() {
        assert_eq!(parking_functions(1), vec![vec![1]]);
        assert_eq!(parking_functions(2), vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(parking_functions(3).len(), 16);
        for len in 1..=6 {
            assert_eq!(parking_functions(len).len(), (len + 1).pow(len as u32 - 1));
        }
    }

    #[test]
    fn parking_example_of_length_three() {
        let tr = parking_triple(3, &Permutation::long_cycle(3)).unwrap();
        assert_eq!(tr.polynomial(), &t("5 + 5*t + 5*t^2 + t^3"));
        assert_eq!(tr.reduced_polynomial(), t("6 + 5*t + 5*t^2"));
        assert!(verify_csp(&tr).verdict());
        assert!(verify_coefficient_form(&tr).verdict());

        let swap = Permutation::parse("(1,2)", Some(3)).unwrap();
        let tr = parking_triple(3, &swap).unwrap();
        assert_eq!(tr.reduced_polynomial(), t("10 + 6*t"));
        assert!(verify_csp(&tr).verdict());

        let tr = parking_triple(2, &Permutation::long_cycle(2)).unwrap();
        assert_eq!(tr.polynomial(), &t("2 + t"));
        assert!(verify_csp(&tr).verdict());
    }

    #[test]
    fn rearrangement_examples() {
        let c3 = Permutation::long_cycle(3);
        let tr = rearrangement_triple(&[1, 1, 2], &c3).unwrap();
        assert_eq!(tr.action().len(), 3);
        let fixed: Vec<usize> = tr.action().group().elements().iter().map(|g| tr.action().fixed_point_count(g)).collect();
        assert_eq!(fixed, vec![3, 0, 0]);
        assert!(verify_csp(&tr).verdict());

        let tr = rearrangement_triple(&[1, 2, 3], &c3).unwrap();
        assert_eq!(tr.polynomial(), &LaurentPoly::parse("1 + 2*q + 2*q^2 + q^3", Some(&["q"])).unwrap());
        assert!(verify_csp(&tr).verdict());

        let tr = rearrangement_triple(&[1, 1, 1, 1], &Permutation::long_cycle(4)).unwrap();
        assert_eq!(tr.action().len(), 1);
        assert!(verify_csp(&tr).verdict());
    }

    #[test]
    fn coset_representatives() {
        for len in 1..=4 {
            parking_coset_check(len).unwrap();
        }
    }
}

//! Induced actions on k-multisets and k-subsets of a carrier. Elements are
//! encoded as sorted vectors of base carrier indices.

use crate::error::CspError;
use crate::groups::{AbelianAction, Encoding};

/// Combinations of `0..n` of size `k`, with or without repetition, in
/// lexicographic order.
pub fn combinations(n: usize, k: usize, repeat: bool) -> Vec<Encoding> {
    fn rec(n: u32, k: usize, repeat: bool, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Encoding>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, repeat, if repeat { i } else { i + 1 }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, k, repeat, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn induced(base: &AbelianAction, k: usize, repeat: bool) -> Result<AbelianAction, CspError> {
    let elements = combinations(base.len(), k, repeat);
    let gens = base.generators().to_vec();
    let action = AbelianAction::from_rule(base.group().clone(), elements, |f, s| {
        let mut img: Vec<u32> = s.iter().map(|&i| gens[f].apply(i as usize) as u32).collect();
        img.sort_unstable();
        img
    })?;
    Ok(action)
}

/// The action on k-element multisets of the carrier.
pub fn multichoose_carrier(base: &AbelianAction, k: usize) -> Result<AbelianAction, CspError> {
    induced(base, k, true)
}

/// The action on k-element subsets of the carrier.
pub fn choose_carrier(base: &AbelianAction, k: usize) -> Result<AbelianAction, CspError> {
    induced(base, k, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Permutation;

    #[test]
    fn choose_and_multichoose_of_three_points() {
        let base = AbelianAction::cyclic_on_points(&Permutation::long_cycle(3)).unwrap();
        let sub = choose_carrier(&base, 2).unwrap();
        assert_eq!(sub.elements(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        let multi = multichoose_carrier(&base, 2).unwrap();
        assert_eq!(multi.len(), 6);
        assert_eq!(multichoose_carrier(&base, 0).unwrap().elements(), &[Vec::<u32>::new()]);
        assert!(choose_carrier(&base, 4).unwrap().is_empty());
    }
}

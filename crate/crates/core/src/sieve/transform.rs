use std::collections::HashSet;

use num_integer::Integer;

use super::triple::CspTriple;
use super::verify::verify_csp;
use crate::error::CspError;
use crate::groups::{AbelianAction, AbelianGroupSpec, GroupElement};

/// A new presentation of a triple's group: a cyclic decomposition, its
/// embeddings, and the image in the old group of each new generator.
#[derive(Clone, Debug)]
pub struct Reembedding {
    pub group: AbelianGroupSpec,
    pub embedding: Vec<u64>,
    /// `images[i]` is the old group element that new generator `i` maps to.
    pub images: Vec<GroupElement>,
    /// Variable names for the new factors; defaults to the old names when the
    /// factor count is unchanged, else `u, t, v, w, ...`.
    pub variables: Option<Vec<String>>,
}

fn default_names(k: usize) -> Vec<String> {
    const BASE: [&str; 4] = ["u", "t", "v", "w"];
    (0..k).map(|i| BASE.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("x{i}"))).collect()
}

/// `e^{-1} mod n` for `e` coprime to `n`.
fn inverse_mod(e: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let g = (e as i64).extended_gcd(&(n as i64));
    (g.gcd == 1).then(|| g.x.rem_euclid(n as i64) as u64)
}

/// Rewrites a triple for a new decomposition and embedding of its group.
///
/// For old factor `j` of order `N_j` with embedding `e_j` and new factor `i`
/// of order `N'_i` with embedding `e'_i`, the character of old factor `j`
/// pulled back to new generator `i` is `zeta_{N'_i}^{e_j a_ij N'_i / N_j}`,
/// where `a_ij` is the `j`-th coordinate of the image of new generator `i`.
/// So old variable `u_j` becomes the monomial `prod_i v_i^{d_ij}` with
/// `d_ij = e'_i^{-1} e_j a_ij N'_i / N_j mod N'_i`.
///
/// The verdict under the new embedding equals the old one; this is checked.
pub fn transform_embedding(t: &CspTriple, new: &Reembedding) -> Result<CspTriple, CspError> {
    let old = t.action().group();
    let group = &new.group;
    let k = group.num_factors();
    if new.images.len() != k || new.embedding.len() != k {
        return Err(CspError::Input("one image and one embedding exponent per new factor".into()));
    }
    if group.order() != old.order() {
        return Err(CspError::Input(format!(
            "new decomposition has order {} but the group has order {}",
            group.order(),
            old.order()
        )));
    }
    for (i, img) in new.images.iter().enumerate() {
        let img = old.element(&img.0.iter().map(|&a| a as i64).collect::<Vec<_>>())?;
        // img^{N'_i} must be the identity for the map to be a homomorphism
        let n = group.orders()[i];
        let ok = img.0.iter().zip(old.orders()).all(|(&a, &nj)| (a as u128 * n as u128).is_multiple_of(nj as u128));
        if !ok {
            return Err(CspError::Input(format!("image of new generator {i} has order not dividing {n}")));
        }
    }
    let phi = |g: &GroupElement| -> GroupElement {
        let mut acc = old.identity();
        for (img, &a) in new.images.iter().zip(&g.0) {
            for _ in 0..a {
                acc = old.compose(&acc, img);
            }
        }
        acc
    };
    let mut seen = HashSet::new();
    for g in group.elements() {
        if !seen.insert(phi(&g)) {
            return Err(CspError::Input("the generator map is not injective, so not an isomorphism".into()));
        }
    }

    let mut images = Vec::with_capacity(old.num_factors());
    for (j, (&nj, &ej)) in old.orders().iter().zip(t.embedding()).enumerate() {
        let mut d = Vec::with_capacity(k);
        for (i, (&ni, &ei)) in group.orders().iter().zip(&new.embedding).enumerate() {
            let inv = inverse_mod(ei % ni, ni)
                .ok_or_else(|| CspError::Input(format!("embedding exponent {ei} not coprime to {ni}")))?;
            let a = new.images[i].0[j] % nj;
            let num = ej as u128 * a as u128 * ni as u128;
            debug_assert_eq!(num % nj as u128, 0);
            let c = ((num / nj as u128) % ni as u128) as u64;
            d.push(((c as u128 * inv as u128) % ni as u128) as i64);
        }
        images.push(d);
    }
    let names = match &new.variables {
        Some(v) => v.clone(),
        None if k == old.num_factors() => t.variable_names().to_vec(),
        None => default_names(k),
    };
    let poly = t.polynomial().substitute_monomials(&names, &images)?;

    let generators = new.images.iter().map(|g| t.action().permutation_of(g)).collect();
    let action = AbelianAction::new(group.clone(), t.action().elements().to_vec(), generators)?;
    let out = CspTriple::with_embedding(action, poly, new.embedding.clone())?;
    if verify_csp(t).verdict() != verify_csp(&out).verdict() {
        return Err(CspError::Internal("re-embedding changed the verdict".into()));
    }
    Ok(out)
}

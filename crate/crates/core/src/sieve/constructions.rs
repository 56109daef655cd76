use crate::error::CspError;
use crate::exactpoly::LaurentPoly;
use crate::families::{choose_carrier, multichoose_carrier, permute_positions, word_maj};
use crate::groups::{is_nearly_free_permutation, AbelianAction, AbelianGroupSpec, Encoding, Permutation};
use crate::symfunc::{fake_degree_in, partitions_of, plethysm_e, plethysm_h, plethysm_schur};

use super::triple::{fresh_name, CspTriple};
use super::verify::verify_csp;

/// Largest number of words enumerated by the direct tensor-power check.
const DIRECT_GUARD: usize = 20_000;

/// `h` (multisets) or `e` (sets).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Power {
    H,
    E,
}

impl std::str::FromStr for Power {
    type Err = CspError;
    fn from_str(s: &str) -> Result<Self, CspError> {
        match s {
            "h" | "H" => Ok(Power::H),
            "e" | "E" => Ok(Power::E),
            _ => Err(CspError::Input(format!("expected h or e, got {s:?}"))),
        }
    }
}

/// Joins encodings; uniform-length carriers concatenate, anything else falls
/// back to 1-based indices.
fn joiner(action: &AbelianAction) -> impl Fn(usize) -> Encoding + '_ {
    let elems = action.elements();
    let uniform = elems.windows(2).all(|w| w[0].len() == w[1].len());
    move |i| if uniform { elems[i].clone() } else { vec![i as u32 + 1] }
}

/// `(X_1 x X_2, X_1(u) X_2(t), C_1 x C_2)`. Variables of the second factor
/// that clash with the first are renamed.
pub fn product_construction(t1: &CspTriple, t2: &CspTriple) -> Result<CspTriple, CspError> {
    let (a1, a2) = (t1.action(), t2.action());
    let vars1 = t1.variable_names().to_vec();
    let mut vars = vars1.clone();
    for v in t2.variable_names() {
        let name = fresh_name(v, &vars);
        vars.push(name);
    }
    let p2 = t2.polynomial().rename(&vars[vars1.len()..]);
    let poly = t1.polynomial().with_variables(&vars)?.multiply(&p2.with_variables(&vars)?)?;

    let g1 = a1.group();
    let g2 = a2.group();
    let orders: Vec<u64> = g1.orders().iter().chain(g2.orders()).copied().collect();
    let labels: Vec<String> = g1.labels().iter().chain(g2.labels()).cloned().collect();
    let group = AbelianGroupSpec::with_labels(orders, labels)?;

    let (j1, j2) = (joiner(a1), joiner(a2));
    let n2 = a2.len();
    let mut elements = Vec::with_capacity(a1.len() * n2);
    for i in 0..a1.len() {
        for j in 0..n2 {
            let mut e = j1(i);
            e.extend(j2(j));
            elements.push(e);
        }
    }
    let generators = a1
        .generators()
        .iter()
        .map(|p| lift_first(p, n2))
        .chain(a2.generators().iter().map(|p| lift_second(p, a1.len())))
        .collect::<Vec<_>>();
    let action = AbelianAction::new(group, elements, generators)?;
    let embedding = t1.embedding().iter().chain(t2.embedding()).copied().collect();
    CspTriple::with_embedding(action, poly, embedding)
}

/// Generator of the first factor of `A x B` on indices `i * |B| + j`.
fn lift_first(p: &Permutation, other: usize) -> Permutation {
    let images = (0..p.degree() * other).map(|idx| p.apply(idx / other) * other + idx % other).collect();
    Permutation::from_images(images).expect("lifted bijection")
}

/// Generator of the second factor of `A x B`.
fn lift_second(p: &Permutation, first: usize) -> Permutation {
    let n = p.degree();
    let images = (0..first * n).map(|idx| (idx / n) * n + p.apply(idx % n)).collect();
    Permutation::from_images(images).expect("lifted bijection")
}

fn parity_check(t: &CspTriple, allow_even: bool) -> Result<(), CspError> {
    let order = t.action().group().order();
    if order.is_multiple_of(2) && !allow_even {
        return Err(CspError::Parity { order });
    }
    Ok(())
}

/// The induced action on k-multisets with `h_k[X(u)]`.
pub fn multichoose_construction(t: &CspTriple, k: usize) -> Result<CspTriple, CspError> {
    let action = multichoose_carrier(t.action(), k)?;
    CspTriple::with_embedding(action, plethysm_h(k, t.polynomial())?, t.embedding().to_vec())
}

/// The induced action on k-subsets with `e_k[X(u)]`; needs odd group order
/// unless `allow_even`.
pub fn choose_construction(t: &CspTriple, k: usize, allow_even: bool) -> Result<CspTriple, CspError> {
    parity_check(t, allow_even)?;
    let action = choose_carrier(t.action(), k)?;
    CspTriple::with_embedding(action, plethysm_e(k, t.polynomial())?, t.embedding().to_vec())
}

/// `power(t, k)` for either kind.
pub fn power_construction(t: &CspTriple, k: usize, kind: Power, allow_even: bool) -> Result<CspTriple, CspError> {
    match kind {
        Power::H => multichoose_construction(t, k),
        Power::E => choose_construction(t, k, allow_even),
    }
}

/// `outer_k[inner_m[X]]`: k-(multi)sets of m-(multi)sets.
pub fn nested_construction(
    t: &CspTriple,
    m: usize,
    k: usize,
    inner: Power,
    outer: Power,
    allow_even: bool,
) -> Result<CspTriple, CspError> {
    if (inner == Power::E || outer == Power::E) && !allow_even {
        parity_check(t, false)?;
    }
    let mid = power_construction(t, m, inner, true)?;
    power_construction(&mid, k, outer, true)
}

/// Words of length `len` over `X`, values acted on letterwise by `C`, and
/// positions by `<sigma>`; polynomial `sum_lambda s_lambda[X(u)] f^lambda(t)`.
pub fn tensor_power_construction(t: &CspTriple, len: usize, sigma: &Permutation) -> Result<CspTriple, CspError> {
    if sigma.degree() != len {
        return Err(CspError::Input(format!("position generator must act on {len} points")));
    }
    if !is_nearly_free_permutation(sigma) {
        return Err(CspError::Hypothesis(format!("position generator {sigma} is not nearly free")));
    }
    let x = t.polynomial();
    let tvar = fresh_name("t", x.vars());
    let mut vars = x.vars().to_vec();
    vars.push(tvar.clone());
    let mut poly = LaurentPoly::zero(&vars);
    for lambda in partitions_of(len) {
        let s = plethysm_schur(&lambda, x)?.with_variables(&vars)?;
        if s.is_zero() {
            continue;
        }
        let f = fake_degree_in(&lambda, &tvar).with_variables(&vars)?;
        poly = poly.add_exact(&s.multiply(&f)?)?;
    }
    if let Some(direct) = tensor_power_direct(x, len, &vars)? {
        if direct != poly {
            return Err(CspError::Internal("tensor power: Schur-Weyl sum and direct maj sum differ".into()));
        }
    }

    let base = t.action();
    let n = base.len();
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    let join = joiner(base);
    let encode = |w: &[usize]| -> Encoding { w.iter().flat_map(|&i| join(i)).collect() };
    let elements: Vec<Encoding> = words.iter().map(|w| encode(w)).collect();
    let index: std::collections::HashMap<&[usize], usize> =
        words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut generators = Vec::new();
    for g in base.generators() {
        let images = words
            .iter()
            .map(|w| index[w.iter().map(|&i| g.apply(i)).collect::<Vec<_>>().as_slice()])
            .collect();
        generators.push(Permutation::from_images(images)?);
    }
    let images = words
        .iter()
        .map(|w| {
            let u32s: Vec<u32> = w.iter().map(|&i| i as u32).collect();
            let moved: Vec<usize> = permute_positions(sigma, &u32s).into_iter().map(|i| i as usize).collect();
            index[moved.as_slice()]
        })
        .collect();
    generators.push(Permutation::from_images(images)?);
    let g = base.group();
    let mut orders = g.orders().to_vec();
    orders.push(sigma.order());
    let mut labels = g.labels().to_vec();
    labels.push(fresh_name("sigma", &labels));
    let action = AbelianAction::new(AbelianGroupSpec::with_labels(orders, labels)?, elements, generators)?;
    let mut embedding = t.embedding().to_vec();
    embedding.push(1);
    CspTriple::with_embedding(action, poly, embedding)
}

/// `sum_{w in [N]^len} m_{w_1} ... m_{w_len} t^{maj(w)}` where `m_1 <= ... <= m_N`
/// lists the monomials of `X` with multiplicity; `None` above the guard.
fn tensor_power_direct(x: &LaurentPoly, len: usize, vars: &[String]) -> Result<Option<LaurentPoly>, CspError> {
    let mut letters: Vec<Vec<i64>> = Vec::new();
    for (mono, mult) in x.monomial_multiset()? {
        let k: usize = usize::try_from(&mult).map_err(|_| CspError::Input("coefficient too large".into()))?;
        letters.extend(std::iter::repeat_n(mono, k));
    }
    let n = letters.len();
    if (n as f64).powi(len as i32) > DIRECT_GUARD as f64 {
        return Ok(None);
    }
    let nv = x.nvars();
    let mut acc = LaurentPoly::zero(vars);
    let mut w = vec![0u32; len];
    if n == 0 && len > 0 {
        return Ok(Some(acc));
    }
    loop {
        let mut e = vec![0i64; nv + 1];
        for &a in &w {
            for (s, d) in e.iter_mut().zip(&letters[a as usize]) {
                *s += d;
            }
        }
        e[nv] = word_maj(&w) as i64;
        acc.add_term(e, 1.into());
        // odometer
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(Some(acc));
            }
            i -= 1;
            w[i] += 1;
            if (w[i] as usize) < n {
                break;
            }
            w[i] = 0;
        }
    }
}

/// `<c>` acts nearly freely on `[len]` iff `([len], [len]_u, <c>)` sieves.
/// Both sides are computed; a disagreement is reported as an error.
pub fn regular_element_check(c: &Permutation) -> Result<bool, CspError> {
    let free = is_nearly_free_permutation(c);
    let action = AbelianAction::cyclic_on_points(c)?;
    let triple = CspTriple::new(action, LaurentPoly::q_integer("u", c.degree()))?;
    let sieves = verify_csp(&triple).verdict();
    if free != sieves {
        return Err(CspError::Internal(format!(
            "{c}: nearly free = {free} but sieving = {sieves}"
        )));
    }
    Ok(free)
}

/// `([n], [n]_u, <c>)`.
pub fn points_triple(c: &Permutation) -> Result<CspTriple, CspError> {
    let action = AbelianAction::cyclic_on_points(c)?;
    CspTriple::new(action, LaurentPoly::q_integer("u", c.degree()))
}

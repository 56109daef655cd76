//! `F_{q^l}` with `F_q^x` acting by multiplication and Frobenius, and the
//! normal-basis bijection to words in `[q]^l`.
//!
//! `F_q` is a table-driven small field (`F_p[y]/(g)` when `q = p^r`), and
//! `F_{q^l} = F_q[x]/(f)`. In both cases the modulus is the first monic
//! irreducible polynomial of the right degree, ordering candidates by the
//! base-`q` number `c_0 + c_1 q + ... + c_{l-1} q^{l-1}` of their lower
//! coefficients.

use serde::{Deserialize, Serialize};

use super::words::{permute_positions, words_action};
use crate::error::CspError;
use crate::groups::{AbelianAction, AbelianGroupSpec, Encoding, Permutation};
use crate::sieve::CspTriple;
use crate::symfunc::word_genfun_compact;

const MAX_FIELD: u64 = 1 << 16;
const MAX_BASE: u32 = 256;

/// `q = p^r` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q itself divides q");
    let (mut m, mut r) = (q, 0);
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    (m == 1).then_some((p, r))
}

/// A finite field of order at most 256, elements `0..q` with full tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallField {
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl SmallField {
    fn from_tables(q: u32, add: Vec<u32>, mul: Vec<u32>) -> Self {
        let qs = q as usize;
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a as usize * qs + b as usize] == 0).unwrap()).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a as usize * qs + b as usize] == 1).unwrap() })
            .collect();
        SmallField { q, add, mul, neg, inv }
    }

    fn prime(p: u32) -> Self {
        let mut add = Vec::with_capacity((p * p) as usize);
        let mut mul = Vec::with_capacity((p * p) as usize);
        for a in 0..p {
            for b in 0..p {
                add.push((a + b) % p);
                mul.push(a * b % p);
            }
        }
        Self::from_tables(p, add, mul)
    }

    /// `base[y]/(g)`, elements indexed by their coefficient vectors read in
    /// base `|base|`.
    fn extension(base: &SmallField, g: &[u32]) -> Self {
        let r = g.len() - 1;
        let q = base.q.pow(r as u32);
        let mut add = Vec::with_capacity((q * q) as usize);
        let mut mul = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            let va = digits(a, base.q, r);
            for b in 0..q {
                let vb = digits(b, base.q, r);
                let s: Vec<u32> = va.iter().zip(&vb).map(|(&x, &y)| base.add(x, y)).collect();
                add.push(undigits(&s, base.q));
                let m = base.poly_rem(&base.poly_mul(&va, &vb), g);
                mul.push(undigits(&pad(m, r), base.q));
            }
        }
        Self::from_tables(q, add, mul)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// First element (by index) generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q).find(|&a| self.mult_order(a) == self.q - 1).expect("F_q^x is cyclic")
    }

    // Polynomials over the field: little-endian coefficient vectors, trimmed.

    fn trim(&self, mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn poly_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    fn poly_sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect();
        self.trim(out)
    }

    fn poly_rem(&self, a: &[u32], f: &[u32]) -> Vec<u32> {
        let mut r = self.trim(a.to_vec());
        let f = self.trim(f.to_vec());
        let lead_inv = self.inv(*f.last().expect("nonzero modulus"));
        while r.len() >= f.len() {
            let c = self.mul(*r.last().unwrap(), lead_inv);
            let shift = r.len() - f.len();
            for (i, &y) in f.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(c, y));
            }
            r = self.trim(r);
        }
        r
    }

    fn poly_gcd(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn poly_powmod(&self, a: &[u32], mut e: u64, f: &[u32]) -> Vec<u32> {
        let mut base = self.poly_rem(a, f);
        let mut acc = vec![1];
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &base), f);
            }
            base = self.poly_rem(&self.poly_mul(&base, &base), f);
            e >>= 1;
        }
        acc
    }

    /// Monic `f` of degree `d` is irreducible iff `gcd(x^{q^i} - x, f) = 1`
    /// for `1 <= i <= d/2`.
    pub fn is_irreducible(&self, f: &[u32]) -> bool {
        let d = f.len() - 1;
        let x = vec![0, 1];
        let mut xp = x.clone();
        for _ in 1..=d / 2 {
            xp = self.poly_powmod(&xp, self.q as u64, f);
            if self.poly_gcd(&self.poly_sub(&xp, &x), f).len() != 1 {
                return false;
            }
        }
        true
    }

    /// First monic irreducible polynomial of degree `d`.
    pub fn first_irreducible(&self, d: usize) -> Vec<u32> {
        let count = (self.q as u64).pow(d as u32);
        (0..count)
            .map(|k| {
                let mut f = digits(k as u32, self.q, d);
                f.push(1);
                f
            })
            .find(|f| self.is_irreducible(f))
            .expect("irreducible polynomials exist in every degree")
    }
}

fn digits(mut k: u32, base: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(k % base);
        k /= base;
    }
    out
}

fn undigits(v: &[u32], base: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &d| acc * base + d)
}

fn pad(mut v: Vec<u32>, len: usize) -> Vec<u32> {
    v.resize(len, 0);
    v
}

/// `F_{q^l} = F_q[x]/(f)`; elements are coefficient vectors of length `l`
/// over `F_q` (little-endian), indexed by reading them in base `q`.
#[derive(Clone, Debug)]
pub struct FiniteFieldModel {
    q: u32,
    len: usize,
    base: SmallField,
    base_modulus: Option<Vec<u32>>,
    modulus: Vec<u32>,
    beta: u32,
}

impl FiniteFieldModel {
    pub fn new(q: u64, len: usize) -> Result<Self, CspError> {
        let (p, r) = prime_power(q).ok_or_else(|| CspError::Input(format!("{q} is not a prime power")))?;
        if len == 0 {
            return Err(CspError::Input("extension degree must be positive".into()));
        }
        if q > MAX_BASE as u64 || (q as f64).powi(len as i32) > MAX_FIELD as f64 {
            return Err(CspError::Input(format!("F_{{{q}^{len}}} exceeds the enumeration guard of {MAX_FIELD} elements")));
        }
        let prime = SmallField::prime(p as u32);
        let (base, base_modulus) = if r == 1 {
            (prime, None)
        } else {
            let g = prime.first_irreducible(r as usize);
            (SmallField::extension(&prime, &g), Some(g))
        };
        let modulus = base.first_irreducible(len);
        if !base.is_irreducible(&modulus) {
            return Err(CspError::Internal("no irreducible modulus found".into()));
        }
        let beta = base.primitive_element();
        Ok(FiniteFieldModel { q: q as u32, len, base, base_modulus, modulus, beta })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn base(&self) -> &SmallField {
        &self.base
    }

    /// Monic modulus of `F_{q^l}` over `F_q`, little-endian.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Modulus of `F_q` over `F_p` when `q` is not prime.
    pub fn base_modulus(&self) -> Option<&[u32]> {
        self.base_modulus.as_deref()
    }

    /// The fixed generator of `F_q^x`.
    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn size(&self) -> usize {
        (self.q as usize).pow(self.len as u32)
    }

    pub fn element(&self, index: usize) -> Encoding {
        digits(index as u32, self.q, self.len)
    }

    pub fn index(&self, x: &[u32]) -> usize {
        undigits(x, self.q) as usize
    }

    /// Elements in canonical (index) order.
    pub fn elements(&self) -> Vec<Encoding> {
        (0..self.size()).map(|i| self.element(i)).collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Encoding {
        let m = self.base.poly_rem(&self.base.poly_mul(a, b), &self.modulus);
        pad(m, self.len)
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Encoding {
        a.iter().map(|&x| self.base.mul(c, x)).collect()
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Encoding {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    pub fn frobenius(&self, a: &[u32]) -> Encoding {
        let m = self.base.poly_powmod(a, self.q as u64, &self.modulus);
        pad(m, self.len)
    }

    /// `a, F(a), ..., F^{l-1}(a)`.
    pub fn galois_orbit(&self, a: &[u32]) -> Vec<Encoding> {
        let mut out = vec![a.to_vec()];
        for _ in 1..self.len {
            let next = self.frobenius(out.last().unwrap());
            out.push(next);
        }
        out
    }

    /// Rank over `F_q` of a list of vectors.
    pub fn rank(&self, vectors: &[Encoding]) -> usize {
        let f = &self.base;
        let mut rows: Vec<Vec<u32>> = vectors.to_vec();
        let mut rank = 0;
        for col in 0..self.len {
            let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = f.inv(rows[rank][col]);
            let pivot: Vec<u32> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[col] != 0 {
                    let c = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            rows[rank] = pivot;
            rank += 1;
        }
        rank
    }

    /// Label in `[q]` of an element of `F_q`: `beta^j -> j + 1`, `0 -> q`.
    pub fn label(&self, c: u32) -> u32 {
        if c == 0 {
            return self.q;
        }
        let mut x = 1;
        let mut j = 0;
        while x != c {
            x = self.base.mul(x, self.beta);
            j += 1;
        }
        j + 1
    }

    /// The value generator on `[q]` matching multiplication by `beta`: the
    /// cycle `(1, ..., q-1)` fixing `q`.
    pub fn value_generator(&self) -> Permutation {
        let q = self.q as usize;
        let mut images: Vec<usize> = (1..q - 1).collect();
        images.push(0);
        images.push(q - 1);
        Permutation::from_images(images).expect("cycle on q-1 points")
    }
}

/// First element, in canonical order, whose Galois orbit is a basis.
pub fn normal_basis_element(model: &FiniteFieldModel) -> Encoding {
    (1..model.size())
        .map(|i| model.element(i))
        .find(|a| model.rank(&model.galois_orbit(a)) == model.len())
        .expect("normal bases exist")
}

/// `x = sum c_i F^{i-1}(alpha)` goes to the word `(label(c_1), ..., label(c_l))`.
#[derive(Clone, Debug)]
pub struct FieldWordMap {
    words: Vec<Encoding>,
}

impl FieldWordMap {
    /// The word of the field element with the given canonical index.
    pub fn word(&self, index: usize) -> &Encoding {
        &self.words[index]
    }

    pub fn words(&self) -> &[Encoding] {
        &self.words
    }
}

/// Builds the bijection and checks on every element that it carries
/// multiplication by `beta` to the value generator and Frobenius to the
/// position cycle.
pub fn field_word_bijection(model: &FiniteFieldModel, alpha: &[u32]) -> Result<FieldWordMap, CspError> {
    let basis = model.galois_orbit(alpha);
    if model.rank(&basis) != model.len() {
        return Err(CspError::Input("alpha does not generate a normal basis".into()));
    }
    let q = model.q();
    let mut words = vec![Vec::new(); model.size()];
    for k in 0..model.size() {
        let coords = digits(k as u32, q, model.len());
        let mut x = vec![0; model.len()];
        for (&c, b) in coords.iter().zip(&basis) {
            x = model.add(&x, &model.scale(c, b));
        }
        let slot = &mut words[model.index(&x)];
        if !slot.is_empty() {
            return Err(CspError::Internal("basis expansion is not injective".into()));
        }
        *slot = coords.iter().map(|&c| model.label(c)).collect();
    }
    let map = FieldWordMap { words };
    let c = model.value_generator();
    let sigma = Permutation::long_cycle(model.len());
    let beta = {
        let mut v = vec![0; model.len()];
        v[0] = model.beta();
        v
    };
    for (i, x) in model.elements().iter().enumerate() {
        let w = map.word(i);
        let scaled = map.word(model.index(&model.mul(&beta, x)));
        let shifted: Encoding = w.iter().map(|&a| c.apply(a as usize - 1) as u32 + 1).collect();
        if *scaled != shifted {
            return Err(CspError::Internal(format!("bijection not equivariant for beta at {x:?}")));
        }
        if *map.word(model.index(&model.frobenius(x))) != permute_positions(&sigma, w) {
            return Err(CspError::Internal(format!("bijection not equivariant for Frobenius at {x:?}")));
        }
    }
    Ok(map)
}

/// `F_{q^l}` with `F_q^x x <F>` and `X = X_{q,l}(u, t)`.
pub fn finite_field_triple(q: u64, len: usize) -> Result<CspTriple, CspError> {
    let model = FiniteFieldModel::new(q, len)?;
    let alpha = normal_basis_element(&model);
    let map = field_word_bijection(&model, &alpha)?;
    let group = AbelianGroupSpec::with_labels(vec![q - 1, len as u64], vec!["beta".into(), "frobenius".into()])?;
    let beta = {
        let mut v = vec![0; len];
        v[0] = model.beta();
        v
    };
    let action = AbelianAction::from_rule(group, model.elements(), |f, x| match f {
        0 => model.mul(&beta, x),
        _ => model.frobenius(x),
    })?;
    // The bijection transports this action onto the word action; fixed-point
    // counts must agree element by element.
    let words = words_action(q as usize, len, &model.value_generator(), &Permutation::long_cycle(len))?;
    for g in action.group().elements() {
        let p = action.permutation_of(&g);
        let pw = words.permutation_of(&g);
        for i in 0..action.len() {
            let image = map.word(p.apply(i));
            let expect = &words.elements()[pw.apply(words.index_of(map.word(i)).expect("word"))];
            if image != expect {
                return Err(CspError::Internal("field and word actions differ under the bijection".into()));
            }
        }
    }
    CspTriple::new(action, word_genfun_compact(q as usize, len))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteFieldFamily {
    pub q: u64,
    pub len: usize,
}

impl FiniteFieldFamily {
    pub fn triple(&self) -> Result<CspTriple, CspError> {
        finite_field_triple(self.q, self.len)
    }
}

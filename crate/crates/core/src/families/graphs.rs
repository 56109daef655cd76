use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::carriers::combinations;
use super::words::{parse_or_long, require_nearly_free};
use crate::error::CspError;
use crate::exactpoly::LaurentPoly;
use crate::groups::{AbelianAction, AbelianGroupSpec, Encoding, Permutation};
use crate::sieve::CspTriple;
use crate::symfunc::{plethysm_e, plethysm_h};

/// Which graphs on `[n]` with `k` edges: loops allowed or not (edge ground
/// set of multiset pairs or set pairs) and multiple edges allowed or not.
///
/// | variant | polynomial | loops | multiedges |
/// |---|---|---|---|
/// | I | `h_k[h_2]` | yes | yes |
/// | II | `h_k[e_2]` | no | yes |
/// | III | `e_k[h_2]` | yes | no |
/// | IV | `e_k[e_2]` | no | no |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphVariant {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "iv")]
    IV,
}

impl GraphVariant {
    pub const ALL: [GraphVariant; 4] = [GraphVariant::I, GraphVariant::II, GraphVariant::III, GraphVariant::IV];

    pub fn loops(self) -> bool {
        matches!(self, GraphVariant::I | GraphVariant::III)
    }

    pub fn multiedges(self) -> bool {
        matches!(self, GraphVariant::I | GraphVariant::II)
    }

    /// Variant I needs no parity assumption; the others need odd order.
    pub fn needs_odd_order(self) -> bool {
        self != GraphVariant::I
    }
}

impl fmt::Display for GraphVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphVariant::I => "i",
            GraphVariant::II => "ii",
            GraphVariant::III => "iii",
            GraphVariant::IV => "iv",
        })
    }
}

impl FromStr for GraphVariant {
    type Err = CspError;
    fn from_str(s: &str) -> Result<Self, CspError> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(GraphVariant::I),
            "ii" | "2" => Ok(GraphVariant::II),
            "iii" | "3" => Ok(GraphVariant::III),
            "iv" | "4" => Ok(GraphVariant::IV),
            _ => Err(CspError::Input(format!("unknown graph variant {s:?} (expected i, ii, iii or iv)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFamily {
    pub n: usize,
    pub k: usize,
    pub variant: GraphVariant,
    #[serde(default)]
    pub vertex_gen: Option<String>,
}

impl GraphFamily {
    pub fn triple(&self, allow_even: bool) -> Result<CspTriple, CspError> {
        let c = parse_or_long(&self.vertex_gen, self.n, "vertex")?;
        graphs_triple(self.n, self.k, self.variant, &c, allow_even)
    }
}

/// Graphs as sorted edge lists flattened to `[a1, b1, a2, b2, ...]`, with
/// `1 <= a <= b <= n`.
pub fn graph_carrier(n: usize, k: usize, variant: GraphVariant) -> Vec<Encoding> {
    let edges: Vec<Encoding> = combinations(n, 2, variant.loops())
        .into_iter()
        .map(|e| e.into_iter().map(|v| v + 1).collect())
        .collect();
    combinations(edges.len(), k, variant.multiedges())
        .into_iter()
        .map(|sel| sel.into_iter().flat_map(|i| edges[i as usize].clone()).collect())
        .collect()
}

/// Degrees of vertices `1..=n`; a loop adds 2.
pub fn degrees(n: usize, graph: &[u32]) -> Vec<u64> {
    let mut deg = vec![0; n];
    for &v in graph {
        deg[v as usize - 1] += 1;
    }
    deg
}

fn relabel(sigma: &Permutation, graph: &[u32]) -> Encoding {
    let mut edges: Vec<[u32; 2]> = graph
        .chunks(2)
        .map(|e| {
            let a = sigma.apply(e[0] as usize - 1) as u32 + 1;
            let b = sigma.apply(e[1] as usize - 1) as u32 + 1;
            [a.min(b), a.max(b)]
        })
        .collect();
    edges.sort_unstable();
    edges.concat()
}

/// The composite plethysm `outer_k[inner_2[[n]_u]]` for a variant.
pub fn graph_polynomial(n: usize, k: usize, variant: GraphVariant) -> Result<LaurentPoly, CspError> {
    let base = LaurentPoly::q_integer("u", n);
    let inner = if variant.loops() { plethysm_h(2, &base)? } else { plethysm_e(2, &base)? };
    Ok(if variant.multiedges() { plethysm_h(k, &inner)? } else { plethysm_e(k, &inner)? })
}

pub fn graphs_triple(
    n: usize,
    k: usize,
    variant: GraphVariant,
    c: &Permutation,
    allow_even: bool,
) -> Result<CspTriple, CspError> {
    if c.degree() != n {
        return Err(CspError::Input(format!("vertex generator must act on {n} points")));
    }
    require_nearly_free(c, "vertex")?;
    if variant.needs_odd_order() && c.order().is_multiple_of(2) && !allow_even {
        return Err(CspError::Parity { order: c.order() });
    }
    let elements = graph_carrier(n, k, variant);
    let mut direct = LaurentPoly::zero(&["u"]);
    for g in &elements {
        let deg = degrees(n, g);
        if deg.iter().sum::<u64>() != 2 * k as u64 {
            return Err(CspError::Internal(format!("degree sum of {g:?} is not {}", 2 * k)));
        }
        let w: u64 = deg.iter().enumerate().map(|(i, d)| i as u64 * d).sum();
        direct.add_term(vec![w as i64], 1.into());
    }
    let formula = graph_polynomial(n, k, variant)?;
    if formula != direct {
        return Err(CspError::Internal("graph polynomial: degree statistic and plethysm differ".into()));
    }
    let group = AbelianGroupSpec::with_labels(vec![c.order()], vec!["c".into()])?;
    let action = AbelianAction::from_rule(group, elements, |_, g| relabel(c, g))?;
    CspTriple::new(action, formula)
}

use serde::{Deserialize, Serialize};

use super::carriers::combinations;
use super::words::{parse_or_long, require_nearly_free};
use crate::error::CspError;
use crate::exactpoly::LaurentPoly;
use crate::groups::{AbelianAction, AbelianGroupSpec, Encoding, Permutation};
use crate::sieve::CspTriple;
use crate::symfunc::{plethysm_e, plethysm_h, MatrixMode};

/// `m x n` matrices (row-major) with entry sum `k`, nonnegative or 0/1,
/// with cyclic groups permuting rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFamily {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub mode: MatrixMode,
    #[serde(default)]
    pub row_gen: Option<String>,
    #[serde(default)]
    pub col_gen: Option<String>,
}

impl MatrixFamily {
    pub fn triple(&self, allow_even: bool) -> Result<CspTriple, CspError> {
        let rows = parse_or_long(&self.row_gen, self.m, "row")?;
        let cols = parse_or_long(&self.col_gen, self.n, "column")?;
        matrices_triple(self.m, self.n, self.k, self.mode, &rows, &cols, allow_even)
    }
}

/// `A'_{sigma(i), tau(j)} = A_{ij}`.
fn permute_matrix(a: &[u32], n: usize, sigma: &Permutation, tau: &Permutation) -> Encoding {
    let mut out = vec![0; a.len()];
    for (idx, &x) in a.iter().enumerate() {
        let (i, j) = (idx / n, idx % n);
        out[sigma.apply(i) * n + tau.apply(j)] = x;
    }
    out
}

pub fn matrices_triple(
    m: usize,
    n: usize,
    k: usize,
    mode: MatrixMode,
    rows: &Permutation,
    cols: &Permutation,
    allow_even: bool,
) -> Result<CspTriple, CspError> {
    if rows.degree() != m || cols.degree() != n {
        return Err(CspError::Input("generator degrees must match the matrix shape".into()));
    }
    require_nearly_free(rows, "row")?;
    require_nearly_free(cols, "column")?;
    let order = rows.order() * cols.order();
    if mode == MatrixMode::ZeroOne && order.is_multiple_of(2) && !allow_even {
        return Err(CspError::Parity { order });
    }
    let repeat = mode == MatrixMode::Nonnegative;
    let mut elements: Vec<Encoding> = combinations(m * n, k, repeat)
        .into_iter()
        .map(|cells| {
            let mut a = vec![0; m * n];
            for c in cells {
                a[c as usize] += 1;
            }
            a
        })
        .collect();
    elements.sort_unstable();

    let mut direct = LaurentPoly::zero(&["u", "t"]);
    for a in &elements {
        let (mut du, mut dt) = (0i64, 0i64);
        for (idx, &x) in a.iter().enumerate() {
            du += (idx / n) as i64 * x as i64;
            dt += (idx % n) as i64 * x as i64;
        }
        direct.add_term(vec![du, dt], 1.into());
    }
    let grid = (&LaurentPoly::q_integer("u", m) * &LaurentPoly::q_integer("t", n)).with_variables(&["u", "t"])?;
    let formula = match mode {
        MatrixMode::Nonnegative => plethysm_h(k, &grid)?,
        MatrixMode::ZeroOne => plethysm_e(k, &grid)?,
    };
    if formula != direct {
        return Err(CspError::Internal("matrix polynomial: statistic sum and plethysm differ".into()));
    }

    let group = AbelianGroupSpec::with_labels(vec![rows.order(), cols.order()], vec!["rows".into(), "cols".into()])?;
    let id_r = Permutation::identity(m);
    let id_c = Permutation::identity(n);
    let action = AbelianAction::from_rule(group, elements, |f, a| match f {
        0 => permute_matrix(a, n, rows, &id_c),
        _ => permute_matrix(a, n, &id_r, cols),
    })?;
    CspTriple::new(action, formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{CyclotomicValue, EvaluationSpec};
    use crate::sieve::verify_csp;

    #[test]
    fn two_by_two_example() {
        let s = Permutation::long_cycle(2);
        let tr = matrices_triple(2, 2, 2, MatrixMode::Nonnegative, &s, &s, false).unwrap();
        let expect = LaurentPoly::parse("1 + u + u^2 + t + u*t + u^2*t + t^2 + u*t^2 + u^2*t^2 + u*t", Some(&["u", "t"])).unwrap();
        assert_eq!(tr.polynomial(), &expect);
        assert_eq!(tr.action().orbits().len(), 4);
        for (a, b) in [(0, 1), (1, 0), (1, 1)] {
            let v = expect.eval_at_roots(&EvaluationSpec::new(vec![(2, a), (2, b)])).unwrap();
            assert_eq!(v, CyclotomicValue::integer(2));
        }
        assert!(verify_csp(&tr).verdict());
    }

    #[test]
    fn empty_and_zero_one_cases() {
        let s = Permutation::long_cycle(2);
        let tr = matrices_triple(2, 2, 0, MatrixMode::Nonnegative, &s, &s, false).unwrap();
        assert_eq!(tr.action().len(), 1);
        let c = Permutation::long_cycle(3);
        let tr = matrices_triple(3, 3, 2, MatrixMode::ZeroOne, &c, &c, false).unwrap();
        assert!(verify_csp(&tr).verdict());
        assert_eq!(
            matrices_triple(2, 2, 2, MatrixMode::ZeroOne, &s, &s, false).unwrap_err(),
            CspError::Parity { order: 4 }
        );
        assert!(matrices_triple(2, 2, 2, MatrixMode::ZeroOne, &s, &s, true).is_ok());
    }
}

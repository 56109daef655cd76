use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::verify::{verify_csp, Record};
use crate::error::CspError;
use crate::families::{graphs_triple, GraphVariant};
use crate::groups::{GroupElement, Permutation};

/// Outcome for one shift `u^m X(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub m: u64,
    pub pass: bool,
    /// Group elements (as powers of `c`) where the check failed.
    pub failures: Vec<u64>,
}

/// `|X(-1)| <= |X^{c^{n/2}}|`, exact because the value is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusCheck {
    pub value: BigInt,
    pub fixed: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub k: usize,
    pub variant: GraphVariant,
    /// `k` is one of `0, 1, C(n,2) - 1, C(n,2)`, or `(n, k) = (4, 3)`.
    pub boundary: bool,
    /// Variant II is scanned for data only; nothing is claimed about it.
    pub experimental: bool,
    pub shifts: Vec<ShiftOutcome>,
    pub modulus: ModulusCheck,
}

impl ScanReport {
    pub fn any_shift_passes(&self) -> bool {
        self.shifts.iter().any(|s| s.pass)
    }

    pub fn unshifted_passes(&self) -> bool {
        self.shifts.first().is_some_and(|s| s.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "variant": self.variant,
            "boundary": self.boundary,
            "experimental": self.experimental,
            "shifts": self.shifts.iter().map(|s| json!({"m": s.m, "pass": s.pass, "failures": s.failures})).collect::<Vec<_>>(),
            "modulus": {
                "value": self.modulus.value.to_string(),
                "fixed": self.modulus.fixed,
                "holds": self.modulus.holds,
            },
        })
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: String = self.shifts.iter().map(|s| if s.pass { 'P' } else { '.' }).collect();
        write!(
            f,
            "n={} k={} variant={} shifts m=0..{}: {marks}{}{}  |X(-1)|={} <= fixed={}: {}",
            self.n,
            self.k,
            self.variant,
            self.n,
            if self.boundary { "  (boundary)" } else { "" },
            if self.experimental { "  (experimental)" } else { "" },
            self.modulus.value.abs(),
            self.modulus.fixed,
            if self.modulus.holds { "ok" } else { "VIOLATED" },
        )
    }
}

/// For even `n` and `C = <(1,2,...,n)>` on graphs of the given variant with
/// `k` edges, runs the check for every shift `u^m X(u)`, `0 <= m < n`.
pub fn counterexample_scan(n: usize, k: usize, variant: GraphVariant) -> Result<ScanReport, CspError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(CspError::Input(format!("the scan needs even n >= 2, got {n}")));
    }
    if variant == GraphVariant::I {
        return Err(CspError::Input("variant i always sieves; scan variants ii, iii or iv".into()));
    }
    let c = Permutation::long_cycle(n);
    let base = graphs_triple(n, k, variant, &c, true)?;
    let pairs = n * (n - 1) / 2;
    let boundary = [0, 1, pairs.saturating_sub(1), pairs].contains(&k) || (n, k) == (4, 3);

    let mut shifts = Vec::with_capacity(n);
    for m in 0..n as u64 {
        let shifted = base.with_polynomial(base.polynomial().shift(&[m as i64]))?;
        let report = verify_csp(&shifted);
        let failures = report
            .failures()
            .map(|r| match r {
                Record::Pointwise { element, .. } => element.0[0],
                Record::Coefficient { .. } => unreachable!("pointwise report"),
            })
            .collect();
        shifts.push(ShiftOutcome { m, pass: report.verdict(), failures });
    }

    let half = GroupElement(vec![n as u64 / 2]);
    let fixed = base.action().fixed_point_count(&half);
    let spec = base.action().group().evaluation_spec(&half, base.embedding());
    let value = base
        .reduced_polynomial()
        .eval_at_roots(&spec)?
        .as_integer()
        .ok_or_else(|| CspError::Internal("X(-1) is not an integer".into()))?;
    let holds = value.abs() <= BigInt::from(fixed);
    Ok(ScanReport {
        n,
        k,
        variant,
        boundary,
        experimental: variant == GraphVariant::II,
        shifts,
        modulus: ModulusCheck { value, fixed, holds },
    })
}

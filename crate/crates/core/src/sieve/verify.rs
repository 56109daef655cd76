use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use super::triple::CspTriple;
use crate::exactpoly::CyclotomicValue;
use crate::groups::GroupElement;

/// Which form of the sieving statement a report checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `|X^g| = X(omega(g))` for every `g`.
    Pointwise,
    /// Reduced coefficients count orbits with stabilizers in character kernels.
    Coefficient,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Pointwise => "pointwise",
            Mode::Coefficient => "coefficient",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    Pointwise {
        element: GroupElement,
        fixed: usize,
        value: CyclotomicValue,
        pass: bool,
    },
    Coefficient {
        d: Vec<u64>,
        coefficient: BigInt,
        orbits: usize,
        pass: bool,
    },
}

impl Record {
    pub fn pass(&self) -> bool {
        match self {
            Record::Pointwise { pass, .. } | Record::Coefficient { pass, .. } => *pass,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Record::Pointwise { element, fixed, value, pass } => json!({
                "element": element.0,
                "fixed": fixed,
                "value": value_json(value),
                "pass": pass,
            }),
            Record::Coefficient { d, coefficient, orbits, pass } => json!({
                "d": d,
                "coefficient": bigint_json(coefficient),
                "orbits": orbits,
                "pass": pass,
            }),
        }
    }
}

fn bigint_json(k: &BigInt) -> Value {
    match k.to_i64() {
        Some(v) => json!(v),
        None => json!(k.to_string()),
    }
}

/// Rational integers become JSON numbers; anything else is written as a
/// polynomial in `zN`.
fn value_json(v: &CyclotomicValue) -> Value {
    match v.as_integer() {
        Some(k) => bigint_json(&k),
        None => json!(v.to_string()),
    }
}

/// Outcome of checking one triple in one mode.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub mode: Mode,
    pub records: Vec<Record>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.records.iter().all(Record::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass())
    }

    /// `{"mode", "verdict", "records": [...]}`; timing is left out so the
    /// output is reproducible.
    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode,
            "verdict": self.verdict(),
            "records": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "mode {}: {} ({} records, {:.1?})",
            self.mode,
            if self.verdict() { "PASS" } else { "FAIL" },
            self.records.len(),
            self.elapsed
        )?;
        for r in &self.records {
            let mark = if r.pass() { "ok  " } else { "FAIL" };
            match r {
                Record::Pointwise { element, fixed, value, .. } => {
                    writeln!(f, "  {mark} g={:?} fixed={fixed} value={value}", element.0)?
                }
                Record::Coefficient { d, coefficient, orbits, .. } => {
                    writeln!(f, "  {mark} d={d:?} coefficient={coefficient} orbits={orbits}")?
                }
            }
        }
        Ok(())
    }
}

/// Checks `|X^g| = X(omega(g))` for every group element, exactly.
pub fn verify_csp(triple: &CspTriple) -> VerificationReport {
    let start = Instant::now();
    let action = triple.action();
    let group = action.group();
    let reduced = triple.reduced_polynomial();
    let records = group
        .elements()
        .into_iter()
        .map(|g| {
            let fixed = action.fixed_point_count(&g);
            let spec = group.evaluation_spec(&g, triple.embedding());
            let value = reduced.eval_at_roots(&spec).expect("one assignment per variable");
            let pass = value.as_integer() == Some(BigInt::from(fixed));
            Record::Pointwise { element: g, fixed, value, pass }
        })
        .collect();
    VerificationReport { mode: Mode::Pointwise, records, elapsed: start.elapsed() }
}

/// Checks that the coefficient of `u^d` in the reduced polynomial counts the
/// orbits whose stabilizer lies in `ker omega^d`, for every `d` in the box
/// `prod [0, N_i)`.
pub fn verify_coefficient_form(triple: &CspTriple) -> VerificationReport {
    let start = Instant::now();
    let action = triple.action();
    let group = action.group();
    let reduced = triple.reduced_polynomial();
    let stabilizers: Vec<Vec<GroupElement>> = action
        .orbits()
        .iter()
        .map(|o| action.pointwise_stabilizer(o.representative))
        .collect();
    let records = group
        .elements()
        .into_iter()
        .map(|d| {
            let d = d.0;
            let exps: Vec<i64> = d.iter().map(|&a| a as i64).collect();
            let coefficient = reduced.coeff(&exps);
            let orbits = stabilizers
                .iter()
                .filter(|stab| {
                    stab.iter().all(|g| group.character_exponent(&d, g, triple.embedding()) == 0)
                })
                .count();
            let pass = coefficient == BigInt::from(orbits);
            Record::Coefficient { d, coefficient, orbits, pass }
        })
        .collect();
    VerificationReport { mode: Mode::Coefficient, records, elapsed: start.elapsed() }
}

/// Runs both forms; they must agree on the verdict.
pub fn verify_both(triple: &CspTriple) -> (VerificationReport, VerificationReport) {
    let a = verify_csp(triple);
    let b = verify_coefficient_form(triple);
    assert_eq!(
        a.verdict(),
        b.verdict(),
        "pointwise and coefficient forms disagree; this is a bug"
    );
    (a, b)
}

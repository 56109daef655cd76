//! The golden suite: every worked example, reduced to one deterministic line
//! per case and compared against a pinned file.

use std::thread;

use cyclosieve::exactpoly::{CyclotomicValue, EvaluationSpec, LaurentPoly};
use cyclosieve::families::*;
use cyclosieve::groups::{AbelianAction, AbelianGroupSpec, GroupElement, Permutation};
use cyclosieve::sieve::*;
use cyclosieve::symfunc::MatrixMode;
use cyclosieve::CspError;
use serde_json::{json, Value};

pub const GOLDEN: &str = include_str!("../golden/worked_examples.txt");

type Case = (&'static str, fn() -> Result<String, CspError>);

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn summary(t: &CspTriple) -> String {
    let (a, b) = verify_both(t);
    format!(
        "X = {} | reduced = {} | size = {} | orbits = {} | pointwise = {} | coefficient = {}",
        t.polynomial(),
        t.reduced_polynomial(),
        t.action().len(),
        t.action().orbits().len(),
        verdict(a.verdict()),
        verdict(b.verdict())
    )
}

fn orbit_sizes(t: &CspTriple) -> String {
    let mut sizes: Vec<usize> = t.action().orbits().iter().map(|o| o.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    format!("{sizes:?}")
}

fn at(t: &CspTriple, assignments: Vec<(u64, u64)>) -> Result<CyclotomicValue, CspError> {
    Ok(t.polynomial().eval_at_roots(&EvaluationSpec::new(assignments))?)
}

fn coefficient(t: &CspTriple, d: &[u64]) -> String {
    verify_coefficient_form(t)
        .records
        .iter()
        .find_map(|r| match r {
            Record::Coefficient { d: dd, coefficient, .. } if dd.as_slice() == d => Some(coefficient.to_string()),
            _ => None,
        })
        .unwrap_or_else(|| "missing".into())
}

fn poly(s: &str, vars: &[&str]) -> Result<LaurentPoly, CspError> {
    Ok(LaurentPoly::parse(s, Some(vars))?)
}

fn words() -> Result<String, CspError> {
    let t = words_triple(3, 2)?;
    let eleven = t.action().index_of(&[1, 1]).expect("word 11");
    let twelve = t.action().index_of(&[1, 2]).expect("word 12");
    let moved = t.action().act(&GroupElement(vec![1, 0]), twelve);
    Ok(format!(
        "{} | orbit sizes = {} | a(0,0) = {} | a(0,1) = {} | X(z3,1) = {} | X(z3,-1) = {} | X(1,-1) = {} | stab(11) = {} | c1(12) = {:?}",
        summary(&t),
        orbit_sizes(&t),
        coefficient(&t, &[0, 0]),
        coefficient(&t, &[0, 1]),
        at(&t, vec![(3, 1), (1, 0)])?,
        at(&t, vec![(3, 1), (2, 1)])?,
        at(&t, vec![(1, 0), (2, 1)])?,
        t.action().pointwise_stabilizer(eleven).len(),
        t.action().elements()[moved],
    ))
}

fn words_mod_two() -> Result<String, CspError> {
    let t = words_triple(3, 2)?;
    Ok(format!("X mod (u^2-1, t^2-1) = {}", t.polynomial().reduce_mod_orders(&[2, 2])?))
}

fn word_statistics() -> Result<String, CspError> {
    Ok(format!("maj(21) = {} | inv(21) = {}", word_maj(&[2, 1]), word_inv(&[2, 1])))
}

fn finite_field() -> Result<String, CspError> {
    let t = finite_field_triple(3, 2)?;
    let a = t.action();
    let zero = a.index_of(&[0, 0]).expect("zero");
    let fixed = |g: [u64; 2]| a.fixed_point_count(&GroupElement(g.to_vec()));
    Ok(format!(
        "{} | orbit sizes = {} | fixed (1,F) = {} | fixed (b,1) = {} | fixed (b,F) = {} | stab(0) = {}",
        summary(&t),
        orbit_sizes(&t),
        fixed([0, 1]),
        fixed([1, 0]),
        fixed([1, 1]),
        a.pointwise_stabilizer(zero).len()
    ))
}

fn parking_cyclic() -> Result<String, CspError> {
    let t = parking_triple(3, &Permutation::long_cycle(3))?;
    Ok(format!("{} | a0 = {} | a1 = {}", summary(&t), coefficient(&t, &[0]), coefficient(&t, &[1])))
}

fn parking_swap() -> Result<String, CspError> {
    let t = parking_triple(3, &Permutation::parse("(1,2)", Some(3))?)?;
    Ok(format!("{} | a0 = {}", summary(&t), coefficient(&t, &[0])))
}

fn matrices() -> Result<String, CspError> {
    let c = Permutation::long_cycle(2);
    let t = matrices_triple(2, 2, 2, MatrixMode::Nonnegative, &c, &c, false)?;
    Ok(format!(
        "{} | X(1,-1) = {} | X(-1,1) = {} | X(-1,-1) = {}",
        summary(&t),
        at(&t, vec![(1, 0), (2, 1)])?,
        at(&t, vec![(2, 1), (1, 0)])?,
        at(&t, vec![(2, 1), (2, 1)])?
    ))
}

fn graphs() -> Result<String, CspError> {
    let c = Permutation::long_cycle(3);
    let t = graphs_triple(3, 3, GraphVariant::III, &c, false)?;
    let nested = nested_construction(&points_triple(&c)?, 2, 3, Power::H, Power::E, false)?;
    Ok(format!(
        "{} | X(z3) = {} | nested construction agrees = {}",
        summary(&t),
        at(&t, vec![(3, 1)])?,
        nested.polynomial() == t.polynomial() && nested.action().len() == t.action().len()
    ))
}

fn tensor_power() -> Result<String, CspError> {
    let t = tensor_power_construction(&points_triple(&Permutation::long_cycle(3))?, 2, &Permutation::long_cycle(2))?;
    let w = words_triple(3, 2)?;
    Ok(format!("{} | equals words triple = {}", summary(&t), t.polynomial() == w.polynomial()))
}

fn embedding_flip() -> Result<String, CspError> {
    let group = AbelianGroupSpec::with_labels(vec![3, 3], vec!["alpha".into(), "beta".into()])?;
    let action = AbelianAction::from_rule(group, vec![vec![0], vec![1], vec![2]], |_, x| vec![(x[0] + 1) % 3])?;
    let t = CspTriple::new(action, poly("1 + u*t + u^2*t^2", &["u", "t"])?)?;
    let flipped = t.reembedded(vec![1, 2])?;
    let moved = transform_embedding(
        &t,
        &Reembedding {
            group: t.action().group().clone(),
            embedding: vec![1, 2],
            images: vec![GroupElement(vec![1, 0]), GroupElement(vec![0, 1])],
            variables: None,
        },
    )?;
    Ok(format!(
        "original = {} | flipped with X(u,t) = {} | transformed X = {} | transformed = {}",
        verdict(verify_csp(&t).verdict()),
        verdict(verify_csp(&flipped).verdict()),
        moved.polynomial(),
        verdict(verify_csp(&moved).verdict())
    ))
}

fn embedding_split() -> Result<String, CspError> {
    let t = points_triple(&Permutation::long_cycle(6))?;
    let split = transform_embedding(
        &t,
        &Reembedding {
            group: AbelianGroupSpec::new(vec![2, 3])?,
            embedding: vec![1, 1],
            images: vec![GroupElement(vec![3]), GroupElement(vec![2])],
            variables: None,
        },
    )?;
    Ok(format!("X(u,t) = {} | split = {}", split.polynomial(), verdict(verify_csp(&split).verdict())))
}

fn scan_line(n: usize, k: usize) -> Result<String, CspError> {
    let r = counterexample_scan(n, k, GraphVariant::IV)?;
    let shifts: String = r.shifts.iter().map(|s| if s.pass { 'P' } else { '.' }).collect();
    Ok(format!(
        "boundary = {} | shifts = {shifts} | |X(-1)| = {} <= {}",
        r.boundary,
        r.modulus.value.magnitude(),
        r.modulus.fixed
    ))
}

pub fn cases() -> Vec<Case> {
    vec![
        ("words n=3 len=2", words),
        ("words n=3 len=2 mod 2", words_mod_two),
        ("word 21", word_statistics),
        ("finite field q=3 len=2", finite_field),
        ("parking len=3 by (1,2,3)", parking_cyclic),
        ("parking len=3 by (1,2)", parking_swap),
        ("matrices 2x2 k=2 N", matrices),
        ("graphs iii n=3 k=3", graphs),
        ("tensor square of [3]", tensor_power),
        ("change of embedding, flip", embedding_flip),
        ("change of embedding, split", embedding_split),
        ("scan iv n=4 k=3", || scan_line(4, 3)),
        ("scan iv n=6 k=0", || scan_line(6, 0)),
        ("scan iv n=6 k=1", || scan_line(6, 1)),
        ("scan iv n=6 k=2", || scan_line(6, 2)),
        ("scan iv n=6 k=3", || scan_line(6, 3)),
        ("scan iv n=6 k=4", || scan_line(6, 4)),
        ("scan iv n=6 k=14", || scan_line(6, 14)),
        ("scan iv n=6 k=15", || scan_line(6, 15)),
    ]
}

/// Runs every case concurrently; results come back in case order.
pub fn compute() -> Vec<(&'static str, String)> {
    let cases = cases();
    thread::scope(|s| {
        let handles: Vec<_> = cases.iter().map(|&(name, run)| (name, s.spawn(run))).collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let line = match h.join() {
                    Ok(Ok(line)) => line,
                    Ok(Err(e)) => format!("error: {e}"),
                    Err(_) => "error: case panicked".into(),
                };
                (name, line)
            })
            .collect()
    })
}

/// `name: line` pairs; blank lines and `#` comments are skipped.
pub fn parse_golden(text: &str) -> Vec<(String, String)> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once(": ") {
            Some((n, v)) => (n.to_string(), v.to_string()),
            None => (l.to_string(), String::new()),
        })
        .collect()
}

pub fn render(results: &[(&str, String)]) -> String {
    results.iter().map(|(n, l)| format!("{n}: {l}\n")).collect()
}

pub struct SuiteOutcome {
    pub pass: bool,
    pub text: String,
    pub json: Value,
}

/// Compares results with the golden lines. Text output lists every case
/// and ends with a diff of the first mismatch.
pub fn compare(golden: &[(String, String)], results: &[(&str, String)]) -> SuiteOutcome {
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut first_diff: Option<String> = None;
    let len = golden.len().max(results.len());
    for i in 0..len {
        let expected = golden.get(i);
        let actual = results.get(i);
        let name = actual.map(|a| a.0.to_string()).or_else(|| expected.map(|e| e.0.clone())).unwrap_or_default();
        let pass = matches!((expected, actual), (Some(e), Some(a)) if e.0 == a.0 && e.1 == a.1);
        text.push_str(&format!("{} {name}\n", if pass { "ok  " } else { "FAIL" }));
        if !pass && first_diff.is_none() {
            let show = |x: Option<String>| x.unwrap_or_else(|| "(missing)".into());
            first_diff = Some(format!(
                "first mismatch at case {} ({name}):\n- {}\n+ {}\n",
                i + 1,
                show(expected.map(|e| format!("{}: {}", e.0, e.1))),
                show(actual.map(|a| format!("{}: {}", a.0, a.1))),
            ));
        }
        rows.push(json!({
            "name": name,
            "pass": pass,
            "expected": expected.map(|e| e.1.clone()),
            "actual": actual.map(|a| a.1.clone()),
        }));
    }
    let pass = first_diff.is_none();
    let passed = rows.iter().filter(|r| r["pass"] == true).count();
    text.push_str(&format!("{passed} of {len} cases reproduce\n"));
    if let Some(d) = first_diff {
        text.push_str(&d);
    }
    SuiteOutcome { pass, text, json: json!({ "verdict": pass, "cases": rows }) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_golden_matches() {
        let out = compare(&parse_golden(GOLDEN), &compute());
        assert!(out.pass, "{}", out.text);
    }

    #[test]
    fn corrupted_golden_reports_a_diff() {
        let mut golden = parse_golden(GOLDEN);
        golden[3].1 = golden[3].1.replace("orbits = 4", "orbits = 3");
        let out = compare(&golden, &compute());
        assert!(!out.pass);
        assert!(out.text.contains("first mismatch at case 4"));
        assert!(out.text.contains("- finite field") && out.text.contains("+ finite field"));
    }
}

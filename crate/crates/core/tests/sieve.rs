use cyclosieve::exactpoly::{CyclotomicValue, LaurentPoly};
use cyclosieve::families::{graphs_triple, words_triple, GraphVariant};
use cyclosieve::groups::{AbelianAction, AbelianGroupSpec, GroupElement, Permutation};
use cyclosieve::sieve::*;
use cyclosieve::CspError;
use num_bigint::BigInt;

fn poly(s: &str, vars: &[&str]) -> LaurentPoly {
    LaurentPoly::parse(s, Some(vars)).unwrap()
}

fn points(n: usize) -> CspTriple {
    points_triple(&Permutation::long_cycle(n)).unwrap()
}

fn both_pass(t: &CspTriple) -> bool {
    let (a, b) = verify_both(t);
    a.verdict() && b.verdict()
}

#[test]
fn words_pointwise_records() {
    let t = words_triple(3, 2).unwrap();
    let report = verify_csp(&t);
    assert!(report.verdict());
    let value_at = |g: Vec<u64>| match report.records.iter().find(|r| matches!(r, Record::Pointwise { element, .. } if element.0 == g)) {
        Some(Record::Pointwise { value, .. }) => value.clone(),
        _ => panic!("missing record"),
    };
    assert_eq!(value_at(vec![1, 0]), CyclotomicValue::integer(0));
    assert_eq!(value_at(vec![0, 1]), CyclotomicValue::integer(3));
}

#[test]
fn words_coefficient_records() {
    let t = words_triple(3, 2).unwrap();
    let report = verify_coefficient_form(&t);
    assert!(report.verdict());
    let coeff = |d: Vec<u64>| match report.records.iter().find(|r| matches!(r, Record::Coefficient { d: dd, .. } if *dd == d)) {
        Some(Record::Coefficient { coefficient, orbits, .. }) => (coefficient.clone(), *orbits),
        _ => panic!("missing record"),
    };
    assert_eq!(coeff(vec![0, 0]), (BigInt::from(2), 2));
    assert_eq!(coeff(vec![0, 1]).0, BigInt::from(1));
}

#[test]
fn wrong_polynomial_fails_at_identity() {
    let t = words_triple(3, 2).unwrap().with_polynomial(LaurentPoly::one(&["u", "t"])).unwrap();
    let report = verify_csp(&t);
    assert!(!report.verdict());
    let first = report.failures().next().unwrap();
    assert!(matches!(first, Record::Pointwise { element, fixed: 9, .. } if element.0 == vec![0, 0]));
    assert!(!verify_coefficient_form(&t).verdict());
}

#[test]
fn trivial_group_triple() {
    let group = AbelianGroupSpec::new(vec![1]).unwrap();
    let action = AbelianAction::new(group, vec![vec![1], vec![2], vec![3]], vec![Permutation::identity(3)]).unwrap();
    let t = CspTriple::new(action, poly("1 + 2*u^5", &["u"])).unwrap();
    assert!(both_pass(&t));
}

#[test]
fn triple_invariants_are_enforced() {
    let action = points(3).action().clone();
    assert!(CspTriple::new(action.clone(), poly("1 - u + u^2", &["u"])).is_err());
    assert!(CspTriple::new(action.clone(), poly("1 + t", &["u", "t"])).is_err());
    assert!(CspTriple::with_embedding(action, poly("1 + u + u^2", &["u"]), vec![3]).is_err());
}

#[test]
fn report_json_shape() {
    let json = verify_csp(&points(2)).to_json();
    assert_eq!(json["mode"], "pointwise");
    assert_eq!(json["verdict"], true);
    assert_eq!(json["records"][1]["element"], serde_json::json!([1]));
    assert_eq!(json["records"][1]["fixed"], 0);
    assert_eq!(json["records"][1]["value"], 0);
}

#[test]
fn products() {
    let t = product_construction(&points(2), &points(3)).unwrap();
    assert_eq!(t.action().len(), 6);
    assert_eq!(t.variable_names(), &["u".to_string(), "u2".to_string()]);
    assert_eq!(t.polynomial(), &poly("1 + u + u2 + u*u2 + u2^2 + u*u2^2", &["u", "u2"]));
    assert!(both_pass(&t));

    let single = CspTriple::new(
        AbelianAction::new(AbelianGroupSpec::new(vec![1]).unwrap(), vec![vec![7]], vec![Permutation::identity(1)]).unwrap(),
        poly("1", &["t"]),
    )
    .unwrap();
    let w = words_triple(2, 2).unwrap();
    let t = product_construction(&w, &single).unwrap();
    assert_eq!(t.action().len(), w.action().len());
    assert!(both_pass(&t));

    let swap = points(2);
    let t = product_construction(&swap, &swap.with_polynomial(poly("1 + t", &["t"])).unwrap()).unwrap();
    assert_eq!(t.polynomial(), &poly("1 + u + t + u*t", &["u", "t"]));
    assert!(both_pass(&t));
}

#[test]
fn powers() {
    let t = multichoose_construction(&points(3), 2).unwrap();
    assert_eq!(t.action().len(), 6);
    assert_eq!(t.polynomial(), &poly("1 + u + 2*u^2 + u^3 + u^4", &["u"]));
    assert!(both_pass(&t));

    let t = choose_construction(&points(3), 3, false).unwrap();
    assert_eq!(t.action().len(), 1);
    assert_eq!(t.polynomial(), &poly("u^3", &["u"]));
    assert!(both_pass(&t));

    assert_eq!(choose_construction(&points(4), 2, false).unwrap_err(), CspError::Parity { order: 4 });
    let t = choose_construction(&points(4), 2, true).unwrap();
    assert!(!verify_csp(&t).verdict());
    assert!(!verify_coefficient_form(&t).verdict());
}

#[test]
fn nested() {
    let t = nested_construction(&points(3), 2, 3, Power::H, Power::E, false).unwrap();
    let g = graphs_triple(3, 3, GraphVariant::III, &Permutation::long_cycle(3), false).unwrap();
    assert_eq!(t.polynomial(), g.polynomial());
    assert_eq!(t.action().len(), 20);
    assert!(both_pass(&t));

    let t = nested_construction(&points(3), 2, 0, Power::H, Power::E, false).unwrap();
    assert_eq!(t.polynomial(), &poly("1", &["u"]));
    assert_eq!(t.action().len(), 1);

    let t = nested_construction(&points(3), 2, 2, Power::E, Power::H, false).unwrap();
    assert_eq!(t.action().len(), 6);
    assert!(both_pass(&t));

    assert!(nested_construction(&points(4), 2, 2, Power::E, Power::H, false).is_err());
}

#[test]
fn tensor_powers() {
    let t = tensor_power_construction(&points(3), 2, &Permutation::long_cycle(2)).unwrap();
    let w = words_triple(3, 2).unwrap();
    assert_eq!(t.polynomial(), w.polynomial());
    assert_eq!(t.action().elements(), w.action().elements());
    assert_eq!(t.action().generators(), w.action().generators());
    assert!(both_pass(&t));

    let t = tensor_power_construction(&points(4), 1, &Permutation::identity(1)).unwrap();
    assert_eq!(t.polynomial(), &points(4).polynomial().with_variables(&["u", "t"]).unwrap());

    let t = tensor_power_construction(&points(2), 3, &Permutation::long_cycle(3)).unwrap();
    assert_eq!(t.action().len(), 8);
    assert!(both_pass(&t));

    let bad = Permutation::parse("(1,2)", Some(4)).unwrap();
    assert!(matches!(tensor_power_construction(&points(2), 4, &bad), Err(CspError::Hypothesis(_))));
}

#[test]
fn regular_elements() {
    assert!(regular_element_check(&Permutation::long_cycle(5)).unwrap());
    assert!(regular_element_check(&Permutation::parse("(1,2,3)", Some(4)).unwrap()).unwrap());
    assert!(!regular_element_check(&Permutation::parse("(1,2)(3,4,5)", Some(5)).unwrap()).unwrap());
}

#[test]
fn scan_examples() {
    let r = counterexample_scan(4, 3, GraphVariant::IV).unwrap();
    assert!(r.boundary);
    assert!(r.unshifted_passes());

    let r = counterexample_scan(6, 2, GraphVariant::IV).unwrap();
    assert!(!r.boundary);
    assert_eq!(r.shifts.len(), 6);
    assert!(!r.any_shift_passes());
    assert!(r.modulus.holds);
    assert!(r.modulus.value.magnitude() < &num_bigint::BigUint::from(r.modulus.fixed));

    let r = counterexample_scan(6, 0, GraphVariant::IV).unwrap();
    assert!(r.unshifted_passes());
    assert!(counterexample_scan(5, 2, GraphVariant::IV).is_err());
    assert!(counterexample_scan(4, 2, GraphVariant::II).unwrap().experimental);
}

fn z3_on_z3() -> CspTriple {
    let group = AbelianGroupSpec::with_labels(vec![3, 3], vec!["alpha".into(), "beta".into()]).unwrap();
    let action = AbelianAction::from_rule(group, vec![vec![0], vec![1], vec![2]], |_, x| vec![(x[0] + 1) % 3]).unwrap();
    CspTriple::new(action, poly("1 + u*t + u^2*t^2", &["u", "t"])).unwrap()
}

#[test]
fn flipped_embedding_example() {
    let t = z3_on_z3();
    assert!(both_pass(&t));
    let flipped = t.reembedded(vec![1, 2]).unwrap();
    assert!(!verify_csp(&flipped).verdict());
    let group = t.action().group().clone();
    let new = Reembedding {
        group,
        embedding: vec![1, 2],
        images: vec![GroupElement(vec![1, 0]), GroupElement(vec![0, 1])],
        variables: None,
    };
    let moved = transform_embedding(&t, &new).unwrap();
    assert_eq!(moved.polynomial(), &poly("1 + u*t^2 + u^2*t^4", &["u", "t"]));
    assert!(both_pass(&moved));
}

#[test]
fn identity_reembedding_keeps_polynomial() {
    let t = words_triple(3, 2).unwrap();
    let new = Reembedding {
        group: t.action().group().clone(),
        embedding: vec![1, 1],
        images: vec![GroupElement(vec![1, 0]), GroupElement(vec![0, 1])],
        variables: None,
    };
    assert_eq!(transform_embedding(&t, &new).unwrap().polynomial(), t.polynomial());
}

#[test]
fn splitting_a_cyclic_group() {
    let t = points(6);
    let new = Reembedding {
        group: AbelianGroupSpec::new(vec![2, 3]).unwrap(),
        embedding: vec![1, 1],
        images: vec![GroupElement(vec![3]), GroupElement(vec![2])],
        variables: None,
    };
    let split = transform_embedding(&t, &new).unwrap();
    let expect = t.polynomial().substitute_monomials(&["u", "t"], &[vec![1, 1]]).unwrap();
    assert_eq!(split.polynomial(), &expect);
    assert!(both_pass(&split));

    let bad = Reembedding { images: vec![GroupElement(vec![3]), GroupElement(vec![0])], ..new.clone() };
    assert!(transform_embedding(&t, &bad).is_err());
    let wrong_order = Reembedding { group: AbelianGroupSpec::new(vec![2, 2]).unwrap(), ..new };
    assert!(transform_embedding(&t, &wrong_order).is_err());
}

#[test]
fn verdict_does_not_depend_on_the_embedding_exponent() {
    use num_integer::Integer;
    for n in 2..=12usize {
        let cycles: Vec<Permutation> = vec![
            Permutation::long_cycle(n),
            Permutation::from_cycles(n, &[(0..n - 1).collect()]).unwrap(),
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
        ];
        for c in cycles {
            let base = points_triple(&c).unwrap();
            let order = c.order();
            let expected = verify_csp(&base).verdict();
            for e in (1..=order).filter(|e| e.gcd(&order) == 1) {
                let t = base.reembedded(vec![e]).unwrap();
                assert_eq!(verify_csp(&t).verdict(), expected, "c={c} e={e}");
            }
        }
    }
}

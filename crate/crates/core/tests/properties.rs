mod common;

use common::*;
use cyclosieve::groups::{is_nearly_free_permutation, Permutation};
use cyclosieve::sieve::{points_triple, regular_element_check, verify_both};
use proptest::prelude::*;

#[test]
fn constructions_sieve() {
    let n = construction_matrix(sieves_both_ways).unwrap();
    assert!(n > 200);
}

#[test]
fn regular_elements_up_to_six() {
    assert_eq!(regular_elements(6).unwrap(), 1 + 2 + 6 + 24 + 120 + 720);
}

#[test]
fn formulas() {
    hook_content_vs_tableaux().unwrap();
    fake_degree_vs_maj().unwrap();
    q_multinomial_vs_rearrangements().unwrap();
    cauchy_vs_plethysm().unwrap();
    rsk_transport().unwrap();
}

#[test]
fn maj_inv_equidistribution() {
    macmahon().unwrap();
}

#[test]
fn reciprocity_identity() {
    reciprocity(5, 4).unwrap();
}

#[test]
fn fuzz() {
    assert_eq!(cyclotomic_fuzz(1000).unwrap(), 1000);
    assert_eq!(action_fuzz(1000).unwrap(), 1000);
}

fn any_perm() -> impl Strategy<Value = Permutation> {
    (1usize..12)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn points_sieve_iff_nearly_free(c in any_perm()) {
        let t = points_triple(&c).unwrap();
        let (a, b) = verify_both(&t);
        prop_assert_eq!(a.verdict(), is_nearly_free_permutation(&c));
        prop_assert_eq!(a.verdict(), b.verdict());
        prop_assert_eq!(regular_element_check(&c).unwrap(), a.verdict());
    }
}

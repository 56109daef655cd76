//! Checks shared by the acceptance suite and the property tests. Each one
//! returns `Err` with a short description of the first thing that went wrong.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cyclosieve::exactpoly::{EvaluationSpec, LaurentPoly};
use cyclosieve::families::{all_words, rearrangements, word_inv, word_maj};
use cyclosieve::groups::{is_nearly_free_permutation, AbelianAction, Permutation};
use cyclosieve::sieve::*;
use cyclosieve::symfunc::{
    cauchy_matrix_genfun, fake_degree, partitions_of, plethysm_e, plethysm_h, q_multinomial_in, reciprocity_check,
    rsk, schur_by_tableaux, schur_principal, standard_tableaux, MatrixMode, SymfuncConfig,
};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn poly(s: &str, vars: &[&str]) -> LaurentPoly {
    LaurentPoly::parse(s, Some(vars)).unwrap()
}

/// Every permutation of `[n]`, in lexicographic order of image vectors.
pub fn permutations(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `sum_g |X^g| = |G| * #orbits` and `|orbit| * |stab| = |G|` for every point.
pub fn burnside(action: &AbelianAction) -> Check {
    let group = action.group();
    let order = group.order() as usize;
    let fixed: usize = group.elements().iter().map(|g| action.fixed_point_count(g)).sum();
    let orbits = action.orbits();
    ensure(fixed == order * orbits.len(), || {
        format!("Burnside: sum of fixed points {fixed} != {order} * {} orbits", orbits.len())
    })?;
    let covered: usize = orbits.iter().map(|o| o.len()).sum();
    ensure(covered == action.len(), || "orbits do not partition the carrier".into())?;
    for o in &orbits {
        for &x in &o.members {
            let stab = action.pointwise_stabilizer(x).len();
            ensure(o.len() * stab == order, || {
                format!("orbit-stabilizer at point {x}: {} * {stab} != {order}", o.len())
            })?;
        }
    }
    Ok(())
}

/// Both forms pass, agree, and the action satisfies the counting identities.
pub fn sieves_both_ways(name: &str, t: &CspTriple) -> Check {
    let a = verify_csp(t);
    let b = verify_coefficient_form(t);
    ensure(a.verdict() == b.verdict(), || format!("{name}: the two forms disagree"))?;
    ensure(a.verdict(), || format!("{name}: verification fails"))?;
    burnside(t.action()).map_err(|e| format!("{name}: {e}"))
}

/// Base triples `([n], [n]_u, <c>)` for `n <= 4`, with `c` the long cycle
/// and the `(n-1)`-cycle fixing `n`.
pub fn bases() -> Vec<(String, CspTriple)> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let mut gens = vec![Permutation::long_cycle(n)];
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(0..n - 1).collect()]).unwrap());
        } else if n == 2 {
            gens.push(Permutation::identity(2));
        }
        for c in gens {
            out.push((format!("[{n}] by {c}"), points_triple(&c).unwrap()));
        }
    }
    out
}

/// Runs every construction over the base triples with `n <= 4`, `len <= 3`,
/// `k <= 4`, `m = 2`, whenever the hypotheses hold, and hands each output to
/// `visit`. Returns the number of triples visited.
pub fn construction_matrix(mut visit: impl FnMut(&str, &CspTriple) -> Check) -> Result<usize, String> {
    let bases = bases();
    let mut count = 0;
    let mut run = |name: String, t: CspTriple| -> Check {
        count += 1;
        visit(&name, &t)
    };
    let odd = |t: &CspTriple| t.action().group().order() % 2 == 1;

    for (na, a) in &bases {
        for (nb, b) in &bases {
            let t = product_construction(a, b).map_err(|e| format!("{na} x {nb}: {e}"))?;
            run(format!("{na} x {nb}"), t)?;
        }
    }
    for (name, b) in &bases {
        for k in 0..=4 {
            let t = multichoose_construction(b, k).map_err(|e| format!("h_{k} {name}: {e}"))?;
            run(format!("h_{k} {name}"), t)?;
            if odd(b) && k <= b.action().len() {
                let t = choose_construction(b, k, false).map_err(|e| format!("e_{k} {name}: {e}"))?;
                run(format!("e_{k} {name}"), t)?;
            }
            for inner in [Power::H, Power::E] {
                for outer in [Power::H, Power::E] {
                    let uses_e = inner == Power::E || outer == Power::E;
                    if uses_e && !odd(b) {
                        continue;
                    }
                    let label = format!("{outer:?}_{k}[{inner:?}_2] {name}");
                    let mid = if inner == Power::E { binom(b.action().len(), 2) } else { usize::MAX };
                    if outer == Power::E && k > mid {
                        continue;
                    }
                    let t = nested_construction(b, 2, k, inner, outer, false).map_err(|e| format!("{label}: {e}"))?;
                    run(label, t)?;
                }
            }
        }
        for len in 1..=3 {
            for sigma in permutations(len).into_iter().filter(is_nearly_free_permutation) {
                let label = format!("{name} tensor {len} by {sigma}");
                let t = tensor_power_construction(b, len, &sigma).map_err(|e| format!("{label}: {e}"))?;
                run(label, t)?;
            }
        }
    }
    Ok(count)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Nearly free iff sieving, for every permutation of `[len]`, `len <= max`.
/// Returns the number of permutations checked.
pub fn regular_elements(max: usize) -> Result<usize, String> {
    let mut count = 0;
    for len in 1..=max {
        for c in permutations(len) {
            regular_element_check(&c).map_err(|e| e.to_string())?;
            count += 1;
        }
    }
    Ok(count)
}

pub fn hook_content_vs_tableaux() -> Check {
    let cfg = SymfuncConfig::default();
    for size in 0..=5 {
        for lambda in partitions_of(size) {
            for n in 0..=4 {
                let by_tableaux = schur_by_tableaux(&lambda, n, &cfg).map_err(|e| e.to_string())?;
                ensure(schur_principal(&lambda, n) == by_tableaux, || format!("s_{lambda:?}, n={n}"))?;
            }
        }
    }
    Ok(())
}

pub fn fake_degree_vs_maj() -> Check {
    for len in 0..=6 {
        for lambda in partitions_of(len) {
            let mut sum = LaurentPoly::zero(&["t"]);
            for t in standard_tableaux(&lambda) {
                sum.add_term(vec![t.maj() as i64], BigInt::one());
            }
            ensure(fake_degree(&lambda).with_variables(&["t"]).unwrap() == sum, || {
                format!("fake degree of {lambda:?}")
            })?;
        }
    }
    Ok(())
}

pub fn q_multinomial_vs_rearrangements() -> Check {
    for len in 0..=6 {
        for mu in partitions_of(len) {
            let w: Vec<u32> = mu.parts().iter().enumerate().flat_map(|(i, &m)| vec![i as u32 + 1; m]).collect();
            let mut sum = LaurentPoly::zero(&["q"]);
            for r in rearrangements(&w) {
                sum.add_term(vec![word_maj(&r) as i64], BigInt::one());
            }
            let formula = q_multinomial_in(len, mu.parts(), "q").map_err(|e| e.to_string())?;
            ensure(formula == sum, || format!("q-multinomial for {:?}", mu.parts()))?;
        }
    }
    Ok(())
}

/// `sum_w u^{|w|} t^{maj w} = sum_w u^{|w|} t^{inv w}` over `[n]^len`,
/// whenever `n^len <= 2000`.
pub fn macmahon() -> Check {
    for n in 1..=2000usize {
        let mut len = 1;
        while len <= 10 && (n as f64).powi(len as i32) <= 2000.0 {
            let mut maj = LaurentPoly::zero(&["u", "t"]);
            let mut inv = LaurentPoly::zero(&["u", "t"]);
            for w in all_words(n, len) {
                let weight: i64 = w.iter().map(|&x| x as i64 - 1).sum();
                maj.add_term(vec![weight, word_maj(&w) as i64], BigInt::one());
                inv.add_term(vec![weight, word_inv(&w) as i64], BigInt::one());
            }
            ensure(maj == inv, || format!("maj and inv differ on [{n}]^{len}"))?;
            len += 1;
        }
    }
    Ok(())
}

pub fn cauchy_vs_plethysm() -> Check {
    for m in 1..=3 {
        for n in 1..=3 {
            let rows = LaurentPoly::q_integer("u", m).with_variables(&["u", "t"]).unwrap();
            let cols = LaurentPoly::q_integer("t", n).with_variables(&["u", "t"]).unwrap();
            let cells = rows.multiply(&cols).unwrap();
            for k in 0..=4 {
                let h = plethysm_h(k, &cells).map_err(|e| e.to_string())?;
                let e = plethysm_e(k, &cells).map_err(|e| e.to_string())?;
                ensure(cauchy_matrix_genfun(m, n, k, MatrixMode::Nonnegative) == h, || {
                    format!("Cauchy sum, mode N, m={m} n={n} k={k}")
                })?;
                ensure(cauchy_matrix_genfun(m, n, k, MatrixMode::ZeroOne) == e, || {
                    format!("dual Cauchy sum, mode ZO, m={m} n={n} k={k}")
                })?;
            }
        }
    }
    Ok(())
}

/// RSK on `[3]^4` is injective, `P` has the word's content, and
/// `maj(w) = maj(Q)`.
pub fn rsk_transport() -> Check {
    let mut seen = BTreeMap::new();
    for w in all_words(3, 4) {
        let (p, q) = rsk(&w);
        ensure(p.is_column_strict() && q.is_standard() && p.shape() == q.shape(), || {
            format!("rsk({w:?}) has malformed tableaux")
        })?;
        ensure(word_maj(&w) == q.maj() as u64, || format!("maj not transported for {w:?}"))?;
        let mut content = p.rows().concat();
        content.sort_unstable();
        let mut sorted = w.clone();
        sorted.sort_unstable();
        ensure(content == sorted, || format!("P of {w:?} has the wrong content"))?;
        if let Some(prev) = seen.insert((p.rows().to_vec(), q.rows().to_vec()), w.clone()) {
            return Err(format!("{prev:?} and {w:?} have the same RSK image"));
        }
    }
    ensure(seen.len() == 81, || "expected 81 words".into())
}

/// Returns the number of `(lambda, n)` pairs checked.
pub fn reciprocity(max_len: usize, max_n: usize) -> Result<usize, String> {
    let mut count = 0;
    for len in 0..=max_len {
        for lambda in partitions_of(len) {
            for n in 0..=max_n {
                ensure(reciprocity_check(&lambda, len, n), || format!("reciprocity for {lambda:?}, n={n}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

pub fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-4i64..6, -4i64..6), -6i64..7), 0..7).prop_map(|ts| {
        LaurentPoly::from_terms(&["u", "t"], ts.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c))))
    })
}

pub fn spec() -> impl Strategy<Value = EvaluationSpec> {
    ((1u64..13, 0u64..13), (1u64..13, 0u64..13))
        .prop_map(|((n1, e1), (n2, e2))| EvaluationSpec::new(vec![(n1, e1), (n2, e2)]))
}

/// Evaluation at roots of unity is a ring homomorphism and factors through
/// reduction; `cases` random inputs.
pub fn cyclotomic_fuzz(cases: u32) -> Result<u32, String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner
        .run(&(small_poly(), small_poly(), spec(), 1u64..4, 1u64..4), |(p, q, s, k1, k2)| {
            let ep = p.eval_at_roots(&s).unwrap();
            let eq = q.eval_at_roots(&s).unwrap();
            prop_assert_eq!((&p * &q).eval_at_roots(&s).unwrap(), &ep * &eq);
            prop_assert_eq!((&p + &q).eval_at_roots(&s).unwrap(), &ep + &eq);
            let orders: Vec<u64> = s.assignments().iter().zip([k1, k2]).map(|(&(n, _), k)| n * k).collect();
            prop_assert_eq!(p.reduce_mod_orders(&orders).unwrap().eval_at_roots(&s).unwrap(), ep);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(cases)
}

/// Random permutations of `[n]`, `n <= 9`: Burnside holds for `<c>`.
pub fn action_fuzz(cases: u32) -> Result<u32, String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let perm = (1usize..10).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle());
    runner
        .run(&perm, |images| {
            let c = Permutation::from_images(images).unwrap();
            let action = AbelianAction::cyclic_on_points(&c).unwrap();
            prop_assert!(burnside(&action).is_ok(), "{}", c);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(cases)
}

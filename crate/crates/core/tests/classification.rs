//! Closed-form predicates against brute-force enumeration.

use keyslide::classify::{
    inv1_closed_form, is_single_term, is_strong_multiplicity_free, schur_fund_mf, two_nonzero_mf, two_term_expansion,
};
use keyslide::expansion::recursive_qkt;
use keyslide::oracle::{fundamental_expansion_of_schur, stable_limit_check};
use keyslide::{
    classify, enumerate_qkt, key_polynomial, slide_expansion, slide_polynomial, Limits, Partition, StrongComposition,
    WeakComposition,
};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn single_and_two_term_shapes() {
    for a in WeakComposition::all(5, 4) {
        let e = slide_expansion(&a, &lim()).unwrap();
        let one = e.total() == 1;
        assert_eq!(is_single_term(&a).is_some(), one, "{a}");
        if a.sum() <= 8 {
            let same = key_polynomial(&a, &lim()).unwrap() == slide_polynomial(&a, &lim()).unwrap();
            assert_eq!(same, one, "{a}");
        }
        let two = a != a.sort0()
            && e.total() == 2
            && e.distinct() == 2
            && e.multiplicity(&a) == 1
            && e.multiplicity(&a.sort0()) == 1;
        match two_term_expansion(&a) {
            Some(second) => {
                assert!(two, "{a}");
                assert_eq!(second, a.sort0(), "{a}");
            }
            None => assert!(!two, "{a}"),
        }
    }
}

#[test]
fn strong_patterns_match_multiplicities() {
    for n in 0..=10 {
        for alpha in StrongComposition::all_of_sum(n) {
            let e = slide_expansion(&alpha.as_weak(), &lim()).unwrap();
            assert_eq!(is_strong_multiplicity_free(&alpha), e.is_multiplicity_free(), "{alpha}");
            if alpha.inversion_count() == 1 {
                let mut closed = inv1_closed_form(&alpha).unwrap();
                closed.sort();
                let weights: Vec<_> = e
                    .terms()
                    .iter()
                    .map(|(w, m)| {
                        assert_eq!(*m, 1);
                        w.clone()
                    })
                    .collect();
                assert_eq!(closed, weights, "{alpha}");
            }
        }
    }
}

fn two_nonzero_universe() -> impl Iterator<Item = WeakComposition> {
    (0..=3).flat_map(|lead| {
        (0..=2).flat_map(move |gap| {
            (1..=7).flat_map(move |p| {
                (1..=7).map(move |q| {
                    let mut parts = vec![0; lead];
                    parts.push(p);
                    parts.extend(std::iter::repeat_n(0, gap));
                    parts.push(q);
                    WeakComposition::new(parts)
                })
            })
        })
    })
}

#[test]
fn two_nonzero_parts_match_multiplicities() {
    for a in two_nonzero_universe() {
        let free = slide_expansion(&a, &lim()).unwrap().is_multiplicity_free();
        let (predicted, _) = two_nonzero_mf(&a).unwrap();
        assert_eq!(predicted, free, "{a}");
    }
}

#[test]
fn schur_list_matches_descent_expansion() {
    for n in 0..=8 {
        for lambda in Partition::all_of(n) {
            let e = fundamental_expansion_of_schur(&lambda, &lim()).unwrap();
            assert_eq!(schur_fund_mf(&lambda), e.values().all(|&m| m == 1), "{lambda}");
        }
    }
}

#[test]
fn classifier_is_sound() {
    for len in 1..=5 {
        for a in WeakComposition::all(len, 4) {
            let free = slide_expansion(&a, &lim()).unwrap().is_multiplicity_free();
            if let Some(claimed) = classify(&a).verdict.is_free() {
                assert_eq!(claimed, free, "{a}");
            }
        }
    }
}

#[test]
fn recursive_algorithm_matches_enumeration() {
    for n in 0..=9 {
        for alpha in StrongComposition::all_of_sum(n) {
            let direct = enumerate_qkt(&alpha.as_weak(), &lim()).unwrap();
            assert_eq!(recursive_qkt(&alpha, &lim()).unwrap(), direct, "{alpha}");
        }
    }
}

#[test]
fn qkt_count_matches_expansion_total() {
    for a in WeakComposition::all(4, 3) {
        let count = enumerate_qkt(&a, &lim()).unwrap().len();
        assert_eq!(count, slide_expansion(&a, &lim()).unwrap().total());
    }
}

#[test]
fn limits_stabilize_to_schur() {
    for len in 1..=3 {
        for a in WeakComposition::all(len, 6).filter(|a| a.sum() <= 6) {
            for n in 2..=3 {
                let check = stable_limit_check(&a, n, 6, &lim()).unwrap();
                assert!(check.passed(), "{a} n={n}: {check:?}");
            }
        }
    }
}

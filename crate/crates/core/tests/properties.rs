//! Randomized checks on indices beyond the exhaustive universes.

use keyslide::classify::ClassificationReport;
use keyslide::expansion::{recursive_qkt, verify_expansion};
use keyslide::{
    classify, enumerate_kohnert, enumerate_qkt, key_polynomial, slide_expansion, KohnertTableau, Limits,
    SlideExpansion, StrongComposition, WeakComposition,
};
use proptest::prelude::*;

fn weak_index(max_len: usize, max_part: usize, max_sum: usize) -> impl Strategy<Value = WeakComposition> {
    prop::collection::vec(0..=max_part, 0..=max_len)
        .prop_filter("sum bound", move |p| p.iter().sum::<usize>() <= max_sum)
        .prop_map(WeakComposition::new)
}

fn strong_index(max_len: usize, max_part: usize, max_sum: usize) -> impl Strategy<Value = StrongComposition> {
    prop::collection::vec(1..=max_part, 1..=max_len)
        .prop_filter("sum bound", move |p| p.iter().sum::<usize>() <= max_sum)
        .prop_map(|p| StrongComposition::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn expansion_sums_to_key(a in weak_index(7, 3, 11)) {
        prop_assert!(verify_expansion(&a, &Limits::default()).unwrap());
    }

    #[test]
    fn tableaux_are_valid_and_counted(a in weak_index(6, 3, 9)) {
        let lim = Limits::default();
        let kt = enumerate_kohnert(&a, &lim).unwrap();
        let key = key_polynomial(&a, &lim).unwrap();
        prop_assert_eq!(kt.len() as u64, key.evaluate_all_ones().unwrap());
        prop_assert!(kt.windows(2).all(|w| w[0] < w[1]));
        let qkt = enumerate_qkt(&a, &lim).unwrap();
        for t in &qkt {
            prop_assert!(t.is_kohnert());
            prop_assert!(t.is_quasi_yamanouchi().unwrap());
            prop_assert!(kt.binary_search(t).is_ok());
        }
        let qy = kt.iter().filter(|t| t.is_quasi_yamanouchi().unwrap()).count();
        prop_assert_eq!(qy, qkt.len());
    }

    #[test]
    fn classifier_never_contradicts_enumeration(a in weak_index(7, 3, 12)) {
        let brute = slide_expansion(&a, &Limits::default()).unwrap().is_multiplicity_free();
        if let Some(free) = classify(&a).verdict.is_free() {
            prop_assert_eq!(free, brute, "{}", a);
        }
    }

    #[test]
    fn leading_zeros_never_lose_terms(a in weak_index(4, 3, 8), m in 0usize..3) {
        let lim = Limits::default();
        let padded = a.with_leading_zeros(m);
        let before = slide_expansion(&a, &lim).unwrap().total();
        let after = slide_expansion(&padded, &lim).unwrap().total();
        prop_assert!(after >= before);
    }

    #[test]
    fn recursive_algorithm_agrees(alpha in strong_index(5, 4, 12)) {
        let lim = Limits::default();
        prop_assert_eq!(
            recursive_qkt(&alpha, &lim).unwrap(),
            enumerate_qkt(&alpha.as_weak(), &lim).unwrap()
        );
    }

    #[test]
    fn json_round_trips(a in weak_index(5, 3, 9)) {
        let lim = Limits::default();
        let e = slide_expansion(&a, &lim).unwrap();
        let back: SlideExpansion = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
        prop_assert_eq!(back, e);
        for t in enumerate_qkt(&a, &lim).unwrap() {
            let back: KohnertTableau = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
            prop_assert_eq!(back, t);
        }
        let r = classify(&a);
        let back: ClassificationReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
        let key = key_polynomial(&a, &lim).unwrap();
        let back: keyslide::MonomialPolynomial = serde_json::from_str(&serde_json::to_string(&key).unwrap()).unwrap();
        prop_assert_eq!(back, key);
    }
}

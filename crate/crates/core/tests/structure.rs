mod common;

use common::brute_sum_free_sets;
use sumfree_core::groundset::{is_sum_free, GroundInterval, IntSet};
use sumfree_core::structure::{container_case, dfst_classify, greedy_removal_decompose};

#[test]
fn every_small_sum_free_set_has_a_flag() {
    for n in 1..=14 {
        let g = GroundInterval::new(n).unwrap();
        for xs in brute_sum_free_sets(n) {
            let s = IntSet::from_elements(n, xs.iter().copied()).unwrap();
            let c = dfst_classify(&s, g);
            assert!(c.any(), "n={n} S={s}");
            assert_eq!(c.alt_odd, xs.iter().all(|x| x % 2 == 1));
            assert_eq!(c.alt_min, xs.first().is_none_or(|&m| xs.len() <= m));
        }
    }
}

#[test]
fn decomposition_of_full_interval() {
    for n in 1..=40 {
        let a = IntSet::full(n);
        let d = greedy_removal_decompose(&a);
        assert!(is_sum_free(&d.b));
        assert_eq!(d.b.union(&d.c), a);
        assert!(d.b.is_disjoint(&d.c));
    }
}

#[test]
fn case_flags_follow_threshold() {
    let g = GroundInterval::new(30).unwrap();
    let a = IntSet::from_elements(30, [2, 16, 17, 18, 19, 20, 21]).unwrap();
    let d = container_case(&a, g, 0.05);
    assert_eq!(d.low_part, 1);
    assert!(d.case_a == (d.low_part as f64 <= 1.5));
    let tight = container_case(&a, g, 1.0 / 30.0);
    assert!(tight.case_a);
    let tighter = container_case(&a, g, 0.5 / 30.0);
    assert!(!tighter.case_a);
}

use std::collections::BTreeSet;

use sumfree_core::constructions::{
    ce_family, complete_to_maximal, distinct_maximal_count, quarter_family,
};
use sumfree_core::groundset::{is_maximal_sum_free, is_sum_free, GroundInterval, IntSet};

#[test]
fn family_members_are_distinct_sum_free_sets() {
    for n in [8, 12, 16, 20, 24] {
        let g = GroundInterval::new(n).unwrap();
        for fam in [ce_family(g).unwrap(), quarter_family(g).unwrap()] {
            assert!(fam.iter().all(is_sum_free));
            let distinct: BTreeSet<&IntSet> = fam.iter().collect();
            assert_eq!(distinct.len(), fam.len());
        }
    }
}

#[test]
fn completions_are_maximal_supersets() {
    for n in [8, 13, 20] {
        let g = GroundInterval::new(n).unwrap();
        for s in ce_family(g).unwrap() {
            let m = complete_to_maximal(&s, g).unwrap();
            assert!(s.is_subset(&m));
            assert!(is_maximal_sum_free(&m, g));
        }
    }
}

#[test]
fn quarter_members_complete_distinctly() {
    for n in [8, 12, 16, 20] {
        let g = GroundInterval::new(n).unwrap();
        let fam = quarter_family(g).unwrap();
        assert_eq!(distinct_maximal_count(&fam, g).unwrap(), 1 << (n / 4));
    }
}

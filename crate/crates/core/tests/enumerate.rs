mod common;

use common::{brute_maximal_sets, brute_sum_free_sets};
use sumfree_core::enumerate::{
    count_maximal_sum_free, count_sum_free, oracle_count, Algorithm, EnumerationConfig, Mode,
};
use sumfree_core::groundset::GroundInterval;
use sumfree_core::Error;

fn g(n: usize) -> GroundInterval {
    GroundInterval::new(n).unwrap()
}

fn lists(sets: Option<Vec<sumfree_core::groundset::IntSet>>) -> Vec<Vec<usize>> {
    sets.unwrap().iter().map(|s| s.to_vec()).collect()
}

#[test]
fn backtracking_matches_brute_force() {
    let cfg = EnumerationConfig::default();
    for n in 1..=14 {
        let all = count_sum_free(g(n), true, &cfg).unwrap();
        assert_eq!(lists(all.sets), brute_sum_free_sets(n), "sum-free n={n}");
        let max = count_maximal_sum_free(g(n), Algorithm::Backtracking, true, &cfg).unwrap();
        assert_eq!(lists(max.sets), brute_maximal_sets(n), "maximal n={n}");
    }
}

#[test]
fn oracle_matches_brute_force() {
    let cfg = EnumerationConfig::default();
    for n in 1..=12 {
        let r = oracle_count(g(n), Mode::AllSumFree, true, &cfg).unwrap();
        assert_eq!(lists(r.sets), brute_sum_free_sets(n));
        let r = oracle_count(g(n), Mode::MaximalSumFree, true, &cfg).unwrap();
        assert_eq!(lists(r.sets), brute_maximal_sets(n));
    }
}

#[test]
fn worker_count_does_not_change_anything() {
    let base = count_maximal_sum_free(g(26), Algorithm::Backtracking, true, &EnumerationConfig::default()).unwrap();
    for w in [2, 3, 8] {
        let r = count_maximal_sum_free(g(26), Algorithm::Backtracking, true, &EnumerationConfig::with_workers(w)).unwrap();
        assert_eq!(r.count, base.count);
        assert_eq!(r.sets, base.sets);
        assert_eq!(r.nodes_explored, base.nodes_explored);
    }
}

#[test]
fn counting_without_emission_agrees() {
    let cfg = EnumerationConfig::with_workers(4);
    for n in [10, 20, 30] {
        let a = count_sum_free(g(n), false, &cfg).unwrap();
        assert!(a.sets.is_none());
        let b = count_sum_free(g(n), true, &cfg).unwrap();
        assert_eq!(a.count, b.count);
        assert_eq!(b.sets.unwrap().len().to_string(), b.count.to_string());
    }
}

#[test]
fn ceilings_are_enforced() {
    let cfg = EnumerationConfig::default();
    let over = |r: Result<_, Error>| matches!(r, Err(Error::ResourceLimit { .. }));
    assert!(over(count_maximal_sum_free(g(35), Algorithm::Backtracking, false, &cfg)));
    assert!(over(count_maximal_sum_free(g(25), Algorithm::Oracle, false, &cfg)));
    assert!(over(count_sum_free(g(41), false, &cfg)));
    let raised = EnumerationConfig { max_n_sum_free: 1000, ..EnumerationConfig::default() };
    assert!(over(count_sum_free(g(64), false, &raised)));
}

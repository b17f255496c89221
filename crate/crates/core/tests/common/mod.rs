//! Brute-force reference implementations written straight from the definitions.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Elements of `mask` (bit `x` set means `x` is present).
pub fn elements(mask: u64) -> Vec<usize> {
    (1..64).filter(|&x| mask >> x & 1 == 1).collect()
}

pub fn naive_sum_free(a: &[usize]) -> bool {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    a.iter().all(|&x| a.iter().all(|&y| !set.contains(&(x + y))))
}

pub fn naive_maximal(a: &[usize], n: usize) -> bool {
    naive_sum_free(a)
        && (1..=n).filter(|v| !a.contains(v)).all(|v| {
            let mut b = a.to_vec();
            b.push(v);
            !naive_sum_free(&b)
        })
}

/// Sort key for the ascending order: element 1 is the most significant position
/// and an absent element sorts before a present one.
pub fn order_key(a: &[usize], n: usize) -> u64 {
    a.iter().map(|&x| 1u64 << (n - x)).sum()
}

fn all_subsets(n: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|m| elements(m << 1))
        .filter(|a| keep(a))
        .collect();
    out.sort_by_key(|a| order_key(a, n));
    out
}

pub fn brute_sum_free_sets(n: usize) -> Vec<Vec<usize>> {
    all_subsets(n, naive_sum_free)
}

pub fn brute_maximal_sets(n: usize) -> Vec<Vec<usize>> {
    all_subsets(n, |a| naive_maximal(a, n))
}

/// Link graph from the definition: `(edges, loops)` with edges as `x < y`.
pub fn link_by_definition(s: &[usize], b: &[usize]) -> (BTreeSet<(usize, usize)>, BTreeSet<usize>) {
    let ss: BTreeSet<usize> = s.iter().copied().collect();
    let mut edges = BTreeSet::new();
    let mut loops = BTreeSet::new();
    for &x in b {
        let in_sumset = s.iter().any(|&p| s.iter().any(|&q| p + q == x));
        let in_diffs = s.iter().any(|&p| s.iter().any(|&q| p > q && p - q == x));
        if ss.contains(&(2 * x)) || in_sumset || in_diffs {
            loops.insert(x);
        }
        for &y in b {
            if x < y && (ss.contains(&(x + y)) || ss.contains(&(y - x))) {
                edges.insert((x, y));
            }
        }
    }
    (edges, loops)
}

/// Maximal independent sets of a looped graph on `0..k` by subset filtering.
/// A looped vertex can never be chosen; every other non-member needs a
/// neighbour in the set.
pub fn brute_mis(k: usize, edges: &[(usize, usize)], loops: &[usize]) -> Vec<Vec<usize>> {
    let adj = |u: usize, v: usize| edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut out = Vec::new();
    for m in 0u64..1 << k {
        let set: Vec<usize> = (0..k).filter(|&v| m >> v & 1 == 1).collect();
        let independent = set.iter().all(|v| !loops.contains(v))
            && set.iter().all(|&u| set.iter().all(|&v| u == v || !adj(u, v)));
        if !independent {
            continue;
        }
        let maximal = (0..k)
            .filter(|v| !set.contains(v) && !loops.contains(v))
            .all(|v| set.iter().any(|&u| adj(u, v)));
        if maximal {
            out.push(set);
        }
    }
    out.sort();
    out
}

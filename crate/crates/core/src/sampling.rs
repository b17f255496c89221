//! Seeded random instances for the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::groundset::{is_sum_free, IntSet};
use crate::mis::LoopedGraph;

/// Greedy random sum-free subset of `pool`: candidates are visited in random
/// order and each is kept with probability `keep` if the set stays sum-free.
pub fn random_sum_free_from<R: Rng>(rng: &mut R, pool: &IntSet, keep: f64) -> IntSet {
    let mut order = pool.to_vec();
    order.shuffle(rng);
    let mut s = IntSet::empty(pool.universe());
    for v in order {
        if rng.gen_bool(keep.clamp(0.0, 1.0)) {
            s.insert(v);
            if !is_sum_free(&s) {
                s.remove(v);
            }
        }
    }
    s
}

/// Random sum-free subset of `pool` with at most `cap` elements.
pub fn random_small_sum_free<R: Rng>(rng: &mut R, pool: &IntSet, cap: usize) -> IntSet {
    let target = rng.gen_range(0..=cap);
    let mut order = pool.to_vec();
    order.shuffle(rng);
    let mut s = IntSet::empty(pool.universe());
    for v in order {
        if s.len() >= target {
            break;
        }
        s.insert(v);
        if !is_sum_free(&s) {
            s.remove(v);
        }
    }
    s
}

/// Draws `n ∈ [lo, hi]` and a sum-free set of even numbers of `[1..n]`.
///
/// Half of the draws are sparse (at most `⌈n^{1/4}⌉ + 1` elements), the rest
/// use a random acceptance rate so both small and large sources appear.
pub fn random_even_sum_free<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> (usize, IntSet) {
    let n = rng.gen_range(lo..=hi.max(lo));
    let evens = IntSet::evens(n);
    let s = if rng.gen_bool(0.5) {
        let cap = (n as f64).powf(0.25).ceil() as usize + 1;
        random_small_sum_free(rng, &evens, cap)
    } else {
        let keep = rng.gen_range(0.05..=1.0);
        random_sum_free_from(rng, &evens, keep)
    };
    (n, s)
}

/// Each vertex pair is an edge with a per-graph probability; loops likewise.
pub fn random_looped_graph<R: Rng>(rng: &mut R, k: usize) -> LoopedGraph {
    let p = rng.gen_range(0.05..0.9);
    let loop_p = if rng.gen_bool(0.5) {
        0.0
    } else {
        rng.gen_range(0.0..0.3)
    };
    let mut g = LoopedGraph::with_vertices(k);
    for u in 0..k {
        if rng.gen_bool(loop_p) {
            g.add_loop(u).expect("vertex exists");
        }
        for v in u + 1..k {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("vertex exists");
            }
        }
    }
    g
}

/// Random triangle-free graph: pairs are tried in random order and kept when
/// they close no triangle. Loops are added occasionally.
pub fn random_triangle_free_graph<R: Rng>(rng: &mut R, k: usize) -> LoopedGraph {
    let p = rng.gen_range(0.1..1.0);
    let loop_p = if rng.gen_bool(0.7) {
        0.0
    } else {
        rng.gen_range(0.0..0.2)
    };
    let mut pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut g = LoopedGraph::with_vertices(k);
    for (u, v) in pairs {
        if !rng.gen_bool(p) {
            continue;
        }
        let nu = g.neighbors(u);
        let nv = g.neighbors(v);
        if nu.iter().any(|w| nv.binary_search(w).is_ok()) {
            continue;
        }
        g.add_edge(u, v).expect("vertex exists");
    }
    for u in 0..k {
        if rng.gen_bool(loop_p) {
            g.add_loop(u).expect("vertex exists");
        }
    }
    g
}

/// `k/3` vertex-disjoint triangles on randomly permuted labels.
pub fn disjoint_triangles<R: Rng>(rng: &mut R, k: usize) -> LoopedGraph {
    let mut labels: Vec<usize> = (0..k).collect();
    labels.shuffle(rng);
    let mut g = LoopedGraph::with_vertices(k);
    for t in labels.chunks_exact(3) {
        g.add_edge(t[0], t[1]).expect("vertex exists");
        g.add_edge(t[1], t[2]).expect("vertex exists");
        g.add_edge(t[0], t[2]).expect("vertex exists");
    }
    g
}

/// A random perfect matching on `k` (even) vertices.
pub fn perfect_matching<R: Rng>(rng: &mut R, k: usize) -> LoopedGraph {
    let mut labels: Vec<usize> = (0..k).collect();
    labels.shuffle(rng);
    let mut g = LoopedGraph::with_vertices(k);
    for e in labels.chunks_exact(2) {
        g.add_edge(e[0], e[1]).expect("vertex exists");
    }
    g
}

/// Random graph with minimum degree at least one: isolated vertices get a
/// random partner or, sometimes, a loop.
pub fn random_graph_min_degree_one<R: Rng>(rng: &mut R, k: usize) -> LoopedGraph {
    let mut g = random_looped_graph(rng, k);
    for u in 0..k {
        if g.degree(u) > 0 {
            continue;
        }
        if k == 1 || rng.gen_bool(0.2) {
            g.add_loop(u).expect("vertex exists");
        } else {
            let mut v = rng.gen_range(0..k - 1);
            if v >= u {
                v += 1;
            }
            g.add_edge(u, v).expect("vertex exists");
        }
    }
    g
}

/// True iff every component is a loop-free triangle.
pub fn is_disjoint_triangle_union(g: &LoopedGraph) -> bool {
    g.loops().is_empty()
        && g.vertices().iter().all(|&v| {
            let nb = g.neighbors(v);
            nb.len() == 2 && g.has_edge(nb[0], nb[1])
        })
}

/// True iff the graph is loop-free and every vertex has exactly one neighbour.
pub fn is_perfect_matching(g: &LoopedGraph) -> bool {
    g.loops().is_empty() && g.vertices().iter().all(|&v| g.neighbors(v).len() == 1)
}

//! Graphs with optional loops, maximal independent set enumeration, and
//! finite certificates for the classical MIS counting bounds.
//!
//! A loop at `v` adds two to `deg(v)` and bars `v` from every independent set.
//! Looped vertices never block their neighbours, so `MIS(G)` equals `MIS` of
//! the graph with the looped vertices deleted.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::serde_big;

/// Simple graph plus at most one loop per vertex. Vertices carry integer labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopedGraph {
    labels: Vec<usize>,
    adj: Vec<BitSet>,
    loops: BitSet,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<usize>,
    edges: Vec<[usize; 2]>,
    loops: Vec<usize>,
}

impl Serialize for LoopedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            loops: self.loops(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LoopedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let mut g = LoopedGraph::new(raw.vertices);
        for [u, v] in raw.edges {
            g.add_edge(u, v).map_err(serde::de::Error::custom)?;
        }
        for v in raw.loops {
            g.add_loop(v).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

impl LoopedGraph {
    /// Edgeless graph on the given labels (sorted, duplicates dropped).
    pub fn new(mut labels: Vec<usize>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        let k = labels.len();
        Self {
            labels,
            adj: vec![BitSet::new(k); k],
            loops: BitSet::new(k),
        }
    }

    /// Edgeless graph on `0..k`.
    pub fn with_vertices(k: usize) -> Self {
        Self::new((0..k).collect())
    }

    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_vertices(k);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; `u == v` adds a loop. Repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (i, j) = (self.index(u)?, self.index(v)?);
        if i == j {
            self.loops.insert(i);
        } else {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize) -> Result<()> {
        self.add_edge(v, v)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.labels
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.labels.binary_search(&v).is_ok()
    }

    fn index(&self, v: usize) -> Result<usize> {
        self.labels
            .binary_search(&v)
            .map_err(|_| Error::InvalidArgument(format!("vertex {v} not in graph")))
    }

    fn indices_of(&self, vs: &[usize]) -> Result<BitSet> {
        let mut b = BitSet::new(self.vertex_count());
        for &v in vs {
            b.insert(self.index(v)?);
        }
        Ok(b)
    }

    fn labels_of(&self, b: &BitSet) -> Vec<usize> {
        b.iter().map(|i| self.labels[i]).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.index(u), self.index(v)) {
            (Ok(i), Ok(j)) if i == j => self.loops.contains(i),
            (Ok(i), Ok(j)) => self.adj[i].contains(j),
            _ => false,
        }
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.index(v).map(|i| self.loops.contains(i)).unwrap_or(false)
    }

    /// Neighbours other than `v` itself, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        match self.index(v) {
            Ok(i) => self.labels_of(&self.adj[i]),
            Err(_) => Vec::new(),
        }
    }

    /// `|N(v)| + 2·[loop at v]`.
    pub fn degree(&self, v: usize) -> usize {
        self.index(v).map(|i| self.degree_at(i)).unwrap_or(0)
    }

    fn degree_at(&self, i: usize) -> usize {
        self.adj[i].len() + 2 * usize::from(self.loops.contains(i))
    }

    /// Degree inside `G[within]`.
    fn degree_within(&self, i: usize, within: &BitSet) -> usize {
        self.adj[i].intersection_len(within) + 2 * usize::from(self.loops.contains(i))
    }

    /// `(δ(G), Δ(G))`; `(0, 0)` for the graph without vertices.
    pub fn degree_bounds(&self) -> (usize, usize) {
        let degs = (0..self.vertex_count()).map(|i| self.degree_at(i));
        let min = degs.clone().min().unwrap_or(0);
        let max = degs.max().unwrap_or(0);
        (min, max)
    }

    /// Non-loop edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count() {
            for j in self.adj[i].iter().filter(|&j| j > i) {
                out.push((self.labels[i], self.labels[j]));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn loops(&self) -> Vec<usize> {
        self.labels_of(&self.loops)
    }

    /// `G[T]`. Unknown labels are an error.
    pub fn induced(&self, keep: &[usize]) -> Result<LoopedGraph> {
        let mask = self.indices_of(keep)?;
        Ok(self.induced_mask(&mask))
    }

    fn induced_mask(&self, mask: &BitSet) -> LoopedGraph {
        let idx: Vec<usize> = mask.iter().collect();
        let mut g = LoopedGraph::new(idx.iter().map(|&i| self.labels[i]).collect());
        for (a, &i) in idx.iter().enumerate() {
            if self.loops.contains(i) {
                g.loops.insert(a);
            }
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                if self.adj[i].contains(j) {
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
        g
    }

    /// `G ∖ T`.
    pub fn without(&self, remove: &[usize]) -> Result<LoopedGraph> {
        let mut keep = BitSet::full(self.vertex_count());
        keep.difference_with(&self.indices_of(remove)?);
        Ok(self.induced_mask(&keep))
    }

    /// Triangles `(a, b, c)` with `a < b < c`; loops play no part.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count() {
            for j in self.adj[i].iter().filter(|&j| j > i) {
                let mut common = self.adj[i].clone();
                common.intersect_with(&self.adj[j]);
                for k in common.iter().filter(|&k| k > j) {
                    out.push((self.labels[i], self.labels[j], self.labels[k]));
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.vertex_count()).all(|i| {
            self.adj[i].iter().filter(|&j| j > i).all(|j| self.adj[i].is_disjoint(&self.adj[j]))
        })
    }

    /// True iff `set` has no edge and no looped vertex inside it.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let Ok(mask) = self.indices_of(set) else {
            return false;
        };
        mask.is_disjoint(&self.loops) && mask.iter().all(|i| self.adj[i].is_disjoint(&mask))
    }

    /// Independent, and every loop-free vertex outside has a neighbour inside.
    pub fn is_maximal_independent(&self, set: &[usize]) -> bool {
        let Ok(mask) = self.indices_of(set) else {
            return false;
        };
        if !self.is_independent(set) {
            return false;
        }
        (0..self.vertex_count())
            .filter(|&i| !mask.contains(i) && !self.loops.contains(i))
            .all(|i| !self.adj[i].is_disjoint(&mask))
    }
}

/// `Γ(T) = {v ∉ T : v has a neighbour in T}`.
pub fn external_neighborhood(g: &LoopedGraph, t: &[usize]) -> Result<Vec<usize>> {
    let mask = g.indices_of(t)?;
    let mut out = BitSet::new(g.vertex_count());
    for i in mask.iter() {
        out.union_with(&g.adj[i]);
    }
    out.difference_with(&mask);
    Ok(g.labels_of(&out))
}

#[derive(Clone, Debug)]
pub struct MisConfig {
    pub max_vertices: usize,
    pub workers: usize,
}

impl Default for MisConfig {
    fn default() -> Self {
        Self {
            max_vertices: 64,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MisEnumeration {
    #[serde(with = "serde_big")]
    pub count: BigUint,
    /// Sorted by indicator order over ascending labels, when requested.
    pub sets: Option<Vec<Vec<usize>>>,
    pub nodes_explored: u64,
}

/// Counts (and optionally lists) the maximal independent sets of `g`.
pub fn enumerate_mis(g: &LoopedGraph, emit: bool) -> Result<MisEnumeration> {
    enumerate_mis_with(g, emit, &MisConfig::default())
}

pub fn enumerate_mis_with(
    g: &LoopedGraph,
    emit: bool,
    config: &MisConfig,
) -> Result<MisEnumeration> {
    let limit = config.max_vertices.min(64);
    if g.vertex_count() > limit {
        return Err(Error::ResourceLimit {
            what: "graph vertices",
            requested: g.vertex_count(),
            limit,
        });
    }
    let engine = MisEngine::new(g, emit);
    let root = engine.root_tasks();
    let run = |&(r, p, x): &(u64, u64, u64)| {
        let mut acc = MisAcc::default();
        engine.expand(r, p, x, &mut acc);
        acc
    };
    let parts: Vec<MisAcc> = if config.workers <= 1 {
        root.tasks.iter().map(run).collect()
    } else {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
        {
            Ok(pool) => pool.install(|| root.tasks.par_iter().map(run).collect()),
            Err(_) => root.tasks.iter().map(run).collect(),
        }
    };
    let mut count = BigUint::from(root.leaf_count);
    let mut nodes = 1;
    let mut masks = root.leaf_sets;
    for part in parts {
        count += part.count;
        nodes += part.nodes;
        masks.extend(part.sets);
    }
    let sets = emit.then(|| {
        masks.sort_by(|&a, &b| indicator_cmp(a, b));
        masks
            .into_iter()
            .map(|m| mask_labels(g, m))
            .collect::<Vec<_>>()
    });
    Ok(MisEnumeration {
        count,
        sets,
        nodes_explored: nodes,
    })
}

fn indicator_cmp(a: u64, b: u64) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        Ordering::Equal
    } else if a & d & d.wrapping_neg() == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn mask_labels(g: &LoopedGraph, mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(g.labels[m.trailing_zeros() as usize]);
        m &= m - 1;
    }
    out
}

#[derive(Default)]
struct MisAcc {
    count: u64,
    nodes: u64,
    sets: Vec<u64>,
}

struct RootSplit {
    tasks: Vec<(u64, u64, u64)>,
    leaf_count: u64,
    leaf_sets: Vec<u64>,
}

/// Bron–Kerbosch on the complement: `R` is the current independent set, `P`
/// the loop-free vertices still addable, `X` the addable vertices already
/// explored in a sibling branch.
struct MisEngine {
    nbr: Vec<u64>,
    usable: u64,
    emit: bool,
}

impl MisEngine {
    fn new(g: &LoopedGraph, emit: bool) -> Self {
        let k = g.vertex_count();
        let nbr = (0..k)
            .map(|i| g.adj[i].iter().fold(0u64, |m, j| m | 1 << j))
            .collect();
        let usable = (0..k)
            .filter(|&i| !g.loops.contains(i))
            .fold(0u64, |m, i| m | 1 << i);
        Self { nbr, usable, emit }
    }

    /// The branching set at `(P, X)`: `P ∩ N[u]` for the pivot `u ∈ P ∪ X` with
    /// the most non-neighbours in `P` (highest degree in the complement).
    fn branch_set(&self, p: u64, x: u64) -> u64 {
        let mut best = u64::MAX;
        let mut best_size = u32::MAX;
        let mut cand = p | x;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let b = p & (self.nbr[u] | 1 << u);
            let size = b.count_ones();
            if size < best_size {
                best_size = size;
                best = b;
            }
        }
        best
    }

    fn children(&self, r: u64, mut p: u64, mut x: u64) -> Vec<(u64, u64, u64)> {
        let mut branch = self.branch_set(p, x);
        let mut out = Vec::with_capacity(branch.count_ones() as usize);
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            let bit = 1u64 << v;
            let keep = !(self.nbr[v] | bit);
            out.push((r | bit, p & keep, x & keep));
            p &= !bit;
            x |= bit;
        }
        out
    }

    fn root_tasks(&self) -> RootSplit {
        let (p, x) = (self.usable, 0);
        if p == 0 {
            return RootSplit {
                tasks: Vec::new(),
                leaf_count: 1,
                leaf_sets: if self.emit { vec![0] } else { Vec::new() },
            };
        }
        RootSplit {
            tasks: self.children(0, p, x),
            leaf_count: 0,
            leaf_sets: Vec::new(),
        }
    }

    fn expand(&self, r: u64, p: u64, x: u64, acc: &mut MisAcc) {
        acc.nodes += 1;
        if p == 0 {
            if x == 0 {
                acc.count += 1;
                if self.emit {
                    acc.sets.push(r);
                }
            }
            return;
        }
        for (r2, p2, x2) in self.children(r, p, x) {
            self.expand(r2, p2, x2, acc);
        }
    }
}

/// Greedy triangle transversal: repeatedly delete the vertex lying in the most
/// remaining triangles (ties to the smallest label) until none are left.
pub fn triangle_hitting_set(g: &LoopedGraph) -> Vec<usize> {
    let k = g.vertex_count();
    let mut alive = BitSet::full(k);
    let mut picked = Vec::new();
    loop {
        let mut hits = vec![0usize; k];
        for i in alive.iter() {
            let mut ni = g.adj[i].clone();
            ni.intersect_with(&alive);
            for j in ni.iter().filter(|&j| j > i) {
                let mut common = ni.clone();
                common.intersect_with(&g.adj[j]);
                for l in common.iter().filter(|&l| l > j) {
                    hits[i] += 1;
                    hits[j] += 1;
                    hits[l] += 1;
                }
            }
        }
        let best = (0..k)
            .filter(|&i| hits[i] > 0)
            .max_by(|&a, &b| hits[a].cmp(&hits[b]).then(b.cmp(&a)));
        match best {
            Some(i) => {
                alive.remove(i);
                picked.push(g.labels[i]);
            }
            None => break,
        }
    }
    picked.sort_unstable();
    picked
}

/// Exact comparison of `count^e <= base^p`.
fn power_le(count: &BigUint, e: u32, base: u32, p: u32) -> bool {
    count.pow(e) <= BigUint::from(base).pow(p)
}

fn power_eq(count: &BigUint, e: u32, base: u32, p: u32) -> bool {
    count.pow(e) == BigUint::from(base).pow(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub vertex_count: usize,
    #[serde(with = "serde_big")]
    pub mis_count: BigUint,
    pub log2_mis_count: f64,
    /// `3^{|G|/3}`.
    pub moon_moser_bound: f64,
    pub moon_moser_log2: f64,
    pub moon_moser_holds: bool,
    pub moon_moser_tight: bool,
    pub triangle_free: bool,
    /// `2^{|G|/2}`, only for triangle-free graphs.
    pub hujter_tuza_bound: Option<f64>,
    pub hujter_tuza_holds: Option<bool>,
    pub hujter_tuza_tight: Option<bool>,
    pub hitting_set_t: Vec<usize>,
    /// `2^{(|G|+|T|)/2}` for the greedy `T`.
    pub lemma6_bound: f64,
    pub lemma6_log2: f64,
    pub lemma6_holds: bool,
    pub all_satisfied: bool,
}

/// Computes `MIS(G)` exactly and checks it against each applicable bound.
///
/// Bound checks are exact: `MIS ≤ 3^{v/3}` is tested as `MIS³ ≤ 3^v`, and the
/// base-2 bounds as `MIS² ≤ 2^{v}` and `MIS² ≤ 2^{v+|T|}`.
pub fn extremal_bound_report(g: &LoopedGraph) -> Result<BoundReport> {
    let mis = enumerate_mis(g, false)?.count;
    let v = g.vertex_count() as u32;
    let log2_mis = log2_big(&mis);
    let mm_log2 = v as f64 * 3f64.log2() / 3.0;
    let mm_holds = power_le(&mis, 3, 3, v);
    let triangle_free = g.is_triangle_free();
    let (ht_bound, ht_holds, ht_tight) = if triangle_free {
        (
            Some(2f64.powf(v as f64 / 2.0)),
            Some(power_le(&mis, 2, 2, v)),
            Some(power_eq(&mis, 2, 2, v)),
        )
    } else {
        (None, None, None)
    };
    let t = triangle_hitting_set(g);
    let tv = t.len() as u32;
    let l6_log2 = (v + tv) as f64 / 2.0;
    let l6_holds = power_le(&mis, 2, 2, v + tv);
    let all_satisfied = mm_holds && ht_holds.unwrap_or(true) && l6_holds;
    Ok(BoundReport {
        vertex_count: g.vertex_count(),
        log2_mis_count: log2_mis,
        moon_moser_bound: 3f64.powf(v as f64 / 3.0),
        moon_moser_log2: mm_log2,
        moon_moser_holds: mm_holds,
        moon_moser_tight: power_eq(&mis, 3, 3, v),
        triangle_free,
        hujter_tuza_bound: ht_bound,
        hujter_tuza_holds: ht_holds,
        hujter_tuza_tight: ht_tight,
        hitting_set_t: t,
        lemma6_bound: 2f64.powf(l6_log2),
        lemma6_log2: l6_log2,
        lemma6_holds: l6_holds,
        all_satisfied,
        mis_count: mis,
    })
}

pub(crate) fn log2_big(x: &BigUint) -> f64 {
    x.to_f64().map_or(f64::INFINITY, f64::log2)
}

#[derive(Clone, Debug, Serialize)]
pub struct PeelPick {
    pub vertex: usize,
    /// `{v} ∪ Γ(v)` inside the current vertex set.
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PeelCertificates {
    /// `picks ≤ n / b`.
    pub picks_within_bound: bool,
    /// `I ∩ U ⊆ Z`.
    pub independent_part_in_z: bool,
    /// `I ∩ U` is a maximal independent set of `G[Z]`.
    pub independent_part_maximal_in_z: bool,
    /// `|Z| ≤ Δ·n / (δ + Δ − b)`.
    pub z_within_bound: bool,
}

impl PeelCertificates {
    pub fn all(&self) -> bool {
        self.picks_within_bound
            && self.independent_part_in_z
            && self.independent_part_maximal_in_z
            && self.z_within_bound
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeelingTranscript {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `sqrt(δ)`; threshold comparisons are done exactly on `δ`.
    pub b: f64,
    pub picks: Vec<PeelPick>,
    pub u: Vec<usize>,
    pub z: Vec<usize>,
    /// `Δ·n / (δ + Δ − b)`.
    pub z_bound: f64,
    /// `n / b`.
    pub steps_bound: f64,
    pub certificates: PeelCertificates,
}

/// Runs the high-degree peeling process for the maximal independent set `i`.
///
/// While some vertex of `I` still has degree at least `b = sqrt(δ(G))` in the
/// remaining graph, the smallest such vertex is taken and it and its remaining
/// neighbours are deleted. The residue is `U`; `Z` is the set of vertices of `U`
/// with degree below `b` in `G[U]`.
pub fn sapozhenko_peel(g: &LoopedGraph, i: &[usize]) -> Result<PeelingTranscript> {
    if !g.is_maximal_independent(i) {
        return Err(Error::NotMaximalIndependent(format!("{i:?}")));
    }
    let (delta, big_delta) = g.degree_bounds();
    if delta == 0 {
        return Err(Error::InvalidArgument(
            "peeling needs minimum degree at least 1".into(),
        ));
    }
    let n = g.vertex_count();
    let in_i = g.indices_of(i)?;
    // deg >= sqrt(δ)  ⇔  deg² >= δ
    let reaches_b = |d: usize| d * d >= delta;

    let mut alive = BitSet::full(n);
    let mut picks = Vec::new();
    loop {
        let next = in_i
            .iter()
            .find(|&v| alive.contains(v) && reaches_b(g.degree_within(v, &alive)));
        let Some(v) = next else { break };
        let mut removed = g.adj[v].clone();
        removed.intersect_with(&alive);
        removed.insert(v);
        alive.difference_with(&removed);
        picks.push(PeelPick {
            vertex: g.labels[v],
            removed: g.labels_of(&removed),
        });
    }

    let u = alive;
    let mut z = BitSet::new(n);
    for v in u.iter() {
        if !reaches_b(g.degree_within(v, &u)) {
            z.insert(v);
        }
    }

    let mut i_in_u = in_i.clone();
    i_in_u.intersect_with(&u);
    let b = (delta as f64).sqrt();

    // picks·b ≤ n  ⇔  picks²·δ ≤ n²
    let picks_within_bound = (picks.len() * picks.len()) as u128 * delta as u128
        <= (n * n) as u128;
    let independent_part_in_z = i_in_u.is_subset(&z);
    let g_z = g.induced_mask(&z);
    let independent_part_maximal_in_z = g_z.is_maximal_independent(&g.labels_of(&i_in_u));
    // |Z|(δ+Δ−b) ≤ Δn  ⇔  |Z|(δ+Δ) − Δn ≤ |Z|·b
    let zl = z.len() as i128;
    let lhs = zl * (delta + big_delta) as i128 - (big_delta * n) as i128;
    let z_within_bound = lhs <= 0 || lhs * lhs <= zl * zl * delta as i128;

    Ok(PeelingTranscript {
        n,
        min_degree: delta,
        max_degree: big_delta,
        b,
        picks,
        u: g.labels_of(&u),
        z: g.labels_of(&z),
        z_bound: (big_delta * n) as f64 / (delta as f64 + big_delta as f64 - b),
        steps_bound: n as f64 / b,
        certificates: PeelCertificates {
            picks_within_bound,
            independent_part_in_z,
            independent_part_maximal_in_z,
            z_within_bound,
        },
    })
}

/// `3^k` as an exact integer; the Moon–Moser extremal count for `k` disjoint triangles.
pub fn three_pow(k: u32) -> BigUint {
    BigUint::from(3u32).pow(k)
}

pub fn two_pow(k: u32) -> BigUint {
    BigUint::one() << k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_357() -> LoopedGraph {
        let mut g = LoopedGraph::new(vec![3, 5, 7]);
        g.add_edge(3, 5).unwrap();
        g.add_edge(5, 7).unwrap();
        g
    }

    fn disjoint_triangles(k: usize) -> LoopedGraph {
        let mut edges = Vec::new();
        for t in 0..k {
            let b = 3 * t;
            edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        LoopedGraph::from_edges(3 * k, &edges).unwrap()
    }

    fn brute_mis(g: &LoopedGraph) -> u64 {
        let k = g.vertex_count();
        (0u64..1 << k)
            .filter(|m| {
                let set: Vec<usize> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| g.vertices()[i]).collect();
                g.is_maximal_independent(&set)
            })
            .count() as u64
    }

    #[test]
    fn mis_examples() {
        let r = enumerate_mis(&path_357(), true).unwrap();
        assert_eq!(r.count, BigUint::from(2u32));
        assert_eq!(r.sets.unwrap(), vec![vec![5], vec![3, 7]]);
        for k in 0..=5 {
            assert_eq!(enumerate_mis(&disjoint_triangles(k), false).unwrap().count, three_pow(k as u32));
        }
        let mut lone = LoopedGraph::with_vertices(1);
        lone.add_loop(0).unwrap();
        let r = enumerate_mis(&lone, true).unwrap();
        assert_eq!(r.count, BigUint::one());
        assert_eq!(r.sets.unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn looped_vertices_do_not_block() {
        // 0 - 1 with a loop at 1: {0} is the only MIS.
        let mut g = LoopedGraph::from_edges(2, &[(0, 1)]).unwrap();
        g.add_loop(1).unwrap();
        let r = enumerate_mis(&g, true).unwrap();
        assert_eq!(r.sets.unwrap(), vec![vec![0]]);
        // loop at the centre of a star: leaves form the unique MIS.
        let mut star = LoopedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        star.add_loop(0).unwrap();
        assert_eq!(enumerate_mis(&star, true).unwrap().sets.unwrap(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn mis_matches_brute_force_on_fixed_graphs() {
        let petersen = LoopedGraph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(enumerate_mis(&petersen, false).unwrap().count, BigUint::from(brute_mis(&petersen)));
        let mut c7 = LoopedGraph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>()).unwrap();
        assert_eq!(enumerate_mis(&c7, false).unwrap().count, BigUint::from(brute_mis(&c7)));
        c7.add_loop(3).unwrap();
        assert_eq!(enumerate_mis(&c7, false).unwrap().count, BigUint::from(brute_mis(&c7)));
    }

    #[test]
    fn parallel_enumeration_agrees() {
        let g = disjoint_triangles(4);
        let seq = enumerate_mis(&g, true).unwrap();
        let par = enumerate_mis_with(&g, true, &MisConfig { workers: 4, ..Default::default() }).unwrap();
        assert_eq!(seq.count, par.count);
        assert_eq!(seq.sets, par.sets);
        assert_eq!(seq.nodes_explored, par.nodes_explored);
    }

    #[test]
    fn ceiling_enforced() {
        let g = LoopedGraph::with_vertices(65);
        assert!(matches!(enumerate_mis(&g, false), Err(Error::ResourceLimit { .. })));
        let g = LoopedGraph::with_vertices(64);
        assert_eq!(enumerate_mis(&g, false).unwrap().count, BigUint::one());
    }

    #[test]
    fn external_neighborhood_examples() {
        let g = path_357();
        assert!(external_neighborhood(&g, &[3, 5, 7]).unwrap().is_empty());
        assert_eq!(external_neighborhood(&g, &[5]).unwrap(), vec![3, 7]);
        assert!(external_neighborhood(&g, &[]).unwrap().is_empty());
        assert!(external_neighborhood(&g, &[4]).is_err());
    }

    #[test]
    fn hitting_set_examples() {
        assert!(triangle_hitting_set(&path_357()).is_empty());
        let tri = LoopedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle_hitting_set(&tri), vec![0]);
        assert_eq!(triangle_hitting_set(&disjoint_triangles(4)).len(), 4);
        let k4 = LoopedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = triangle_hitting_set(&k4);
        assert!(k4.without(&t).unwrap().is_triangle_free());
        assert_eq!(t, vec![0, 1]);
    }

    #[test]
    fn bound_report_examples() {
        let r = extremal_bound_report(&disjoint_triangles(3)).unwrap();
        assert_eq!(r.mis_count, BigUint::from(27u32));
        assert!(r.moon_moser_tight && r.all_satisfied);
        assert!(!r.triangle_free);
        assert_eq!(r.hitting_set_t.len(), 3);

        let matching = LoopedGraph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let r = extremal_bound_report(&matching).unwrap();
        assert_eq!(r.mis_count, BigUint::from(16u32));
        assert!(r.triangle_free);
        assert_eq!(r.hujter_tuza_tight, Some(true));
        assert!(r.all_satisfied);

        let r = extremal_bound_report(&LoopedGraph::with_vertices(5)).unwrap();
        assert_eq!(r.mis_count, BigUint::one());
        assert!(r.all_satisfied);
        assert!(r.hitting_set_t.is_empty());
    }

    #[test]
    fn peel_two_triangles() {
        let g = disjoint_triangles(2);
        let t = sapozhenko_peel(&g, &[0, 3]).unwrap();
        assert_eq!(t.picks.len(), 2);
        assert!(t.u.is_empty() && t.z.is_empty());
        assert!((t.z_bound - 12.0 / (4.0 - 2f64.sqrt())).abs() < 1e-12);
        assert!(t.certificates.all());
    }

    #[test]
    fn peel_complete_graph() {
        let k4 = LoopedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = sapozhenko_peel(&k4, &[2]).unwrap();
        assert_eq!(t.picks.len(), 1);
        assert_eq!(t.picks[0].removed, vec![0, 1, 2, 3]);
        assert!(t.z.is_empty());
        assert!(t.certificates.all());
    }

    #[test]
    fn peel_rejects_bad_input() {
        let g = disjoint_triangles(2);
        assert!(matches!(sapozhenko_peel(&g, &[0, 1]), Err(Error::NotMaximalIndependent(_))));
        assert!(matches!(sapozhenko_peel(&g, &[0]), Err(Error::NotMaximalIndependent(_))));
        let iso = LoopedGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(sapozhenko_peel(&iso, &[0, 2]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn json_shape() {
        let mut g = path_357();
        g.add_loop(7).unwrap();
        let js = serde_json::to_string(&g).unwrap();
        assert_eq!(js, r#"{"vertices":[3,5,7],"edges":[[3,5],[5,7]],"loops":[7]}"#);
        let back: LoopedGraph = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn degrees_count_loops_twice() {
        let mut g = path_357();
        g.add_loop(3).unwrap();
        assert_eq!(g.degree(3), 3);
        assert_eq!(g.degree_bounds(), (1, 3));
        assert_eq!(LoopedGraph::with_vertices(0).degree_bounds(), (0, 0));
    }
}

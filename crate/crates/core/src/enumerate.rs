//! Exact counting of sum-free and maximal sum-free subsets of `[1..n]`.
//!
//! Two independent routes are provided. The oracle walks all `2^n` subsets and
//! filters them with the reference predicates from [`crate::groundset`]. The
//! backtracking engine decides elements in ascending order, never includes an
//! element already in `A + A`, and (in maximal mode) abandons a branch as soon
//! as an excluded element can no longer be blocked by any completion.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groundset::{is_maximal_sum_free, is_sum_free, GroundInterval, IntSet};

/// Largest `n` the mask-based engine can represent.
pub const ENGINE_HARD_LIMIT: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    AllSumFree,
    MaximalSumFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Oracle,
    Backtracking,
}

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub workers: usize,
    /// Elements `1..=prefix_depth` are decided before work is split across workers.
    pub prefix_depth: usize,
    pub max_n_maximal: usize,
    pub max_n_sum_free: usize,
    pub max_n_oracle: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            prefix_depth: 8,
            max_n_maximal: 34,
            max_n_sum_free: 40,
            max_n_oracle: 24,
        }
    }
}

impl EnumerationConfig {
    pub fn with_workers(workers: usize) -> Self {
        Self {
            workers: workers.max(1),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub n: usize,
    pub mode: Mode,
    pub count: BigUint,
    /// Present when emission was requested, in ascending [`IntSet`] order.
    pub sets: Option<Vec<IntSet>>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// `f(n)`: the number of sum-free subsets of `[1..n]`, the empty set included.
pub fn count_sum_free(
    g: GroundInterval,
    emit: bool,
    config: &EnumerationConfig,
) -> Result<EnumerationReport> {
    check_ceiling("n (sum-free mode)", g.n(), config.max_n_sum_free)?;
    Ok(run_backtracking(g, Mode::AllSumFree, emit, config))
}

/// `f_max(n)`: the number of maximal sum-free subsets of `[1..n]`.
pub fn count_maximal_sum_free(
    g: GroundInterval,
    algorithm: Algorithm,
    emit: bool,
    config: &EnumerationConfig,
) -> Result<EnumerationReport> {
    match algorithm {
        Algorithm::Oracle => {
            check_ceiling("n (oracle)", g.n(), config.max_n_oracle)?;
            Ok(run_oracle(g, Mode::MaximalSumFree, emit))
        }
        Algorithm::Backtracking => {
            check_ceiling("n (maximal mode)", g.n(), config.max_n_maximal)?;
            Ok(run_backtracking(g, Mode::MaximalSumFree, emit, config))
        }
    }
}

/// Exhaustive subset filter for either mode.
pub fn oracle_count(
    g: GroundInterval,
    mode: Mode,
    emit: bool,
    config: &EnumerationConfig,
) -> Result<EnumerationReport> {
    check_ceiling("n (oracle)", g.n(), config.max_n_oracle)?;
    Ok(run_oracle(g, mode, emit))
}

fn check_ceiling(what: &'static str, n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(ENGINE_HARD_LIMIT);
    if n > limit {
        return Err(Error::ResourceLimit {
            what,
            requested: n,
            limit,
        });
    }
    Ok(())
}

fn run_oracle(g: GroundInterval, mode: Mode, emit: bool) -> EnumerationReport {
    let start = Instant::now();
    let n = g.n();
    let mut count = 0u64;
    let mut sets = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let a = IntSet::from_fn(n, |x| mask >> (x - 1) & 1 == 1);
        let keep = match mode {
            Mode::AllSumFree => is_sum_free(&a),
            Mode::MaximalSumFree => is_maximal_sum_free(&a, g),
        };
        if keep {
            count += 1;
            if emit {
                sets.push(a);
            }
        }
    }
    sets.sort();
    EnumerationReport {
        n,
        mode,
        count: BigUint::from(count),
        sets: emit.then_some(sets),
        nodes_explored: 1u64 << n,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Copy, Debug)]
struct State {
    /// Next element to decide.
    pos: usize,
    set: u128,
    /// `(set + set) ∩ [1..n]`.
    sums: u128,
    excluded: u128,
}

#[derive(Default)]
struct Partial {
    count: u64,
    nodes: u64,
    sets: Vec<u128>,
}

struct Search {
    n: usize,
    full: u128,
    maximal: bool,
    emit: bool,
}

impl Search {
    fn new(n: usize, mode: Mode, emit: bool) -> Self {
        Self {
            n,
            full: ((1u128 << (n + 1)) - 1) & !1,
            maximal: mode == Mode::MaximalSumFree,
            emit,
        }
    }

    fn root(&self) -> State {
        State {
            pos: 1,
            set: 0,
            sums: 0,
            excluded: 0,
        }
    }

    /// Elements `x ∉ set` that adding them would break: `x ∈ A+A`, `x + a ∈ A`, or `2x ∈ A`.
    fn blocked(&self, st: &State) -> u128 {
        let mut blocked = st.sums;
        let mut rest = st.set;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            blocked |= st.set >> a;
            if a.is_multiple_of(2) {
                blocked |= 1u128 << (a / 2);
            }
        }
        blocked & self.full
    }

    /// An excluded, still unblocked `x` with `x + pos > n` can only be blocked by a
    /// future `w = x + a` where `a ∈ set ∪ {x}`. If no such `w` is still available
    /// the branch has no maximal completion.
    fn is_dead(&self, st: &State) -> bool {
        let v = st.pos;
        let threshold = self.n.saturating_sub(v);
        let high = self.full & !((1u128 << (threshold + 1)) - 1);
        let suspects = st.excluded & high & !st.sums;
        if suspects == 0 {
            return false;
        }
        let mut suspects = suspects & !self.blocked(st);
        let open = self.full & !((1u128 << v) - 1) & !st.sums;
        while suspects != 0 {
            let x = suspects.trailing_zeros() as usize;
            suspects &= suspects - 1;
            let reach = ((st.set | 1u128 << x) << x) & open;
            if reach == 0 {
                return true;
            }
        }
        false
    }

    /// Children in emission order: exclude first, then include.
    fn children(&self, st: &State) -> [Option<State>; 2] {
        let v = st.pos;
        let bit = 1u128 << v;
        let exclude = State {
            pos: v + 1,
            excluded: st.excluded | bit,
            ..*st
        };
        let include = (st.sums & bit == 0).then(|| State {
            pos: v + 1,
            set: st.set | bit,
            sums: (st.sums | st.set << v | 1u128 << (2 * v)) & self.full,
            excluded: st.excluded,
        });
        [Some(exclude), include]
    }

    fn step(&self, st: State, out: &mut Partial) {
        out.nodes += 1;
        if self.maximal && self.is_dead(&st) {
            return;
        }
        if st.pos > self.n {
            out.count += 1;
            if self.emit {
                out.sets.push(st.set);
            }
            return;
        }
        for child in self.children(&st).into_iter().flatten() {
            self.step(child, out);
        }
    }

    fn frontier(&self, st: State, depth: usize, acc: &mut Vec<State>, nodes: &mut u64) {
        if st.pos > depth || st.pos > self.n {
            acc.push(st);
            return;
        }
        *nodes += 1;
        if self.maximal && self.is_dead(&st) {
            return;
        }
        for child in self.children(&st).into_iter().flatten() {
            self.frontier(child, depth, acc, nodes);
        }
    }
}

fn run_backtracking(
    g: GroundInterval,
    mode: Mode,
    emit: bool,
    config: &EnumerationConfig,
) -> EnumerationReport {
    let start = Instant::now();
    let n = g.n();
    let search = Search::new(n, mode, emit);
    let mut prefix_nodes = 0u64;
    let mut frontier = Vec::new();
    search.frontier(
        search.root(),
        config.prefix_depth,
        &mut frontier,
        &mut prefix_nodes,
    );

    let explore = |st: &State| {
        let mut p = Partial::default();
        search.step(*st, &mut p);
        p
    };
    let partials: Vec<Partial> = if config.workers <= 1 {
        frontier.iter().map(explore).collect()
    } else {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
        {
            Ok(pool) => pool.install(|| frontier.par_iter().map(explore).collect()),
            Err(_) => frontier.iter().map(explore).collect(),
        }
    };

    let mut count = BigUint::zero();
    let mut nodes = prefix_nodes;
    let mut sets = Vec::new();
    for p in partials {
        count += p.count;
        nodes += p.nodes;
        if emit {
            sets.extend(p.sets.into_iter().map(|m| IntSet::from_mask(n, m)));
        }
    }
    EnumerationReport {
        n,
        mode,
        count,
        sets: emit.then_some(sets),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    }
}

/// One row of the growth table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub f: u128,
    pub fmax: u128,
    /// `log2(fmax) / n`, rounded to six decimals.
    pub log2fmax_over_n: f64,
}

impl GrowthRow {
    pub fn new(n: usize, f: &BigUint, fmax: &BigUint) -> Self {
        let ratio = fmax.to_f64().unwrap_or(f64::INFINITY).log2() / n as f64;
        let rounded: f64 = format!("{ratio:.6}").parse().unwrap_or(ratio);
        GrowthRow {
            n,
            f: f.to_u128().unwrap_or(u128::MAX),
            fmax: fmax.to_u128().unwrap_or(u128::MAX),
            log2fmax_over_n: rounded,
        }
    }

    /// The ratio as printed in tables.
    pub fn ratio_text(&self) -> String {
        format!("{:.6}", self.log2fmax_over_n)
    }
}

/// Exact `f(n)` and `f_max(n)` (backtracking) for every `n` in `n_lo..=n_hi`.
pub fn growth_table(
    n_lo: usize,
    n_hi: usize,
    config: &EnumerationConfig,
) -> Result<Vec<GrowthRow>> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::InvalidArgument(format!(
            "growth range {n_lo}..={n_hi} must satisfy 1 <= lo <= hi"
        )));
    }
    check_ceiling("n (maximal mode)", n_hi, config.max_n_maximal)?;
    check_ceiling("n (sum-free mode)", n_hi, config.max_n_sum_free)?;
    (n_lo..=n_hi)
        .map(|n| {
            let g = GroundInterval::new(n)?;
            let f = count_sum_free(g, false, config)?.count;
            let fmax = count_maximal_sum_free(g, Algorithm::Backtracking, false, config)?.count;
            Ok(GrowthRow::new(n, &f, &fmax))
        })
        .collect()
}

pub const GROWTH_CSV_HEADER: [&str; 4] = ["n", "f", "fmax", "log2fmax_over_n"];

/// CSV with `\n` line endings and a header row.
pub fn growth_csv(rows: &[GrowthRow]) -> String {
    let mut out = String::new();
    out.push_str(&GROWTH_CSV_HEADER.join(","));
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.f, r.fmax, r.ratio_text()));
    }
    out
}

pub fn growth_json(rows: &[GrowthRow]) -> String {
    serde_json::to_string(rows).expect("growth rows serialize")
}

//! Named, seeded invariant suites. Each suite checks one family of finite
//! claims over exhaustive or randomized instances and keeps the first failing
//! instance in serialized form so it can be replayed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::enumerate::{count_maximal_sum_free, count_sum_free, Algorithm, EnumerationConfig};
use crate::error::Result;
use crate::groundset::{is_maximal_sum_free, is_sum_free, schur_triple_count, GroundInterval, IntSet};
use crate::linkgraph::{build_link_graph, color_edges, degree_profile, forced_triangles, list_triangles};
use crate::mis::{enumerate_mis, extremal_bound_report, sapozhenko_peel, LoopedGraph};
use crate::sampling::{
    disjoint_triangles, is_disjoint_triangle_union, is_perfect_matching, perfect_matching,
    random_even_sum_free, random_graph_min_degree_one, random_looped_graph, random_sum_free_from,
    random_triangle_free_graph,
};
use crate::structure::{container_case, dfst_classify, greedy_removal_decompose};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Extensions of `S` inside `B` are maximal independent sets of `L_S[B]`.
    ExtensionIsMaximalIndependent,
    /// Link graphs on `(n/2, n]` have no triangles.
    UpperHalfTriangleFree,
    /// Triangles of colored link graphs carry 0 or 2 BLUE edges.
    BlueEdgeParity,
    /// Source triples force at most 24 triangles, and every triangle is forced.
    ForcedTriangles,
    /// `δ ≥ |S|/2` and `Δ ≤ 2|S| + 2` on odd vertices.
    DegreeBounds,
    MoonMoser,
    HujterTuza,
    /// `MIS ≤ 2^{(|G|+|T|)/2}` with the greedy triangle transversal `T`.
    TriangleTransversal,
    Peeling,
    Dfst,
    Decompose,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::ExtensionIsMaximalIndependent,
        Suite::UpperHalfTriangleFree,
        Suite::BlueEdgeParity,
        Suite::ForcedTriangles,
        Suite::DegreeBounds,
        Suite::MoonMoser,
        Suite::HujterTuza,
        Suite::TriangleTransversal,
        Suite::Peeling,
        Suite::Dfst,
        Suite::Decompose,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::ExtensionIsMaximalIndependent => "lemma8",
            Suite::UpperHalfTriangleFree => "lemma10",
            Suite::BlueEdgeParity => "claim12",
            Suite::ForcedTriangles => "forced24",
            Suite::DegreeBounds => "degree-bounds",
            Suite::MoonMoser => "moon-moser",
            Suite::HujterTuza => "hujter-tuza",
            Suite::TriangleTransversal => "lemma6",
            Suite::Peeling => "peeling",
            Suite::Dfst => "dfst",
            Suite::Decompose => "decompose",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// `n` is the largest ground set or vertex count; `trials` counts random draws
    /// (per size for the graph-bound suites).
    pub fn default_params(self) -> SuiteParams {
        let (n, trials) = match self {
            Suite::ExtensionIsMaximalIndependent => (14, 1000),
            Suite::UpperHalfTriangleFree
            | Suite::BlueEdgeParity
            | Suite::ForcedTriangles
            | Suite::DegreeBounds => (200, 500),
            Suite::MoonMoser | Suite::TriangleTransversal => (21, 200),
            Suite::HujterTuza => (24, 200),
            Suite::Peeling => (16, 100),
            Suite::Dfst => (18, 0),
            Suite::Decompose => (200, 500),
        };
        SuiteParams {
            n,
            trials,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    /// Informational checks report their tally but never fail the suite.
    pub gating: bool,
    /// First failing instance, serialized.
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: 0,
            gating: true,
            counterexample: None,
        }
    }

    fn informational(name: &'static str) -> Self {
        Self {
            gating: false,
            ..Self::new(name)
        }
    }

    fn record(&mut self, ok: bool, instance: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(instance());
            }
        }
    }

    pub fn passed(&self) -> bool {
        !self.gating || self.failures == 0
    }

    fn verdict(&self) -> &'static str {
        match (self.gating, self.failures) {
            (false, _) => "INFO",
            (true, 0) => "PASS",
            (true, _) => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub params: SuiteParams,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    /// One line per check plus a verdict; failing checks print their instance.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "suite={} n={} trials={} seed={}\n",
            self.suite, self.params.n, self.params.trials, self.params.seed
        );
        for c in &self.checks {
            out.push_str(&format!(
                "check {}: checked={} failures={} {}\n",
                c.name,
                c.checked,
                c.failures,
                c.verdict()
            ));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("  counterexample: {ce}\n"));
            }
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

pub fn run_suite(suite: Suite, params: SuiteParams) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let checks = match suite {
        Suite::ExtensionIsMaximalIndependent => extension_suite(&params, &mut rng)?,
        Suite::UpperHalfTriangleFree => upper_half_suite(&params, &mut rng)?,
        Suite::BlueEdgeParity => blue_parity_suite(&params, &mut rng)?,
        Suite::ForcedTriangles => forced_suite(&params, &mut rng)?,
        Suite::DegreeBounds => degree_suite(&params, &mut rng)?,
        Suite::MoonMoser => moon_moser_suite(&params, &mut rng)?,
        Suite::HujterTuza => hujter_tuza_suite(&params, &mut rng)?,
        Suite::TriangleTransversal => transversal_suite(&params, &mut rng)?,
        Suite::Peeling => peeling_suite(&params, &mut rng)?,
        Suite::Dfst => dfst_suite(&params)?,
        Suite::Decompose => decompose_suite(&params, &mut rng)?,
    };
    Ok(SuiteReport {
        suite: suite.name(),
        params,
        checks,
    })
}

fn ground(n: usize) -> Result<GroundInterval> {
    GroundInterval::new(n)
}

fn set_mask(s: &IntSet) -> u64 {
    s.to_mask() as u64
}

fn mask_set(n: usize, m: u64) -> IntSet {
    IntSet::from_mask(n, m as u128)
}

fn pair_instance(n: usize, s: &IntSet, b: &IntSet, i: &IntSet) -> String {
    json!({"n": n, "S": s, "B": b, "I": i}).to_string()
}

fn extension_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let cfg = EnumerationConfig::default();
    let n_max = p.n.min(cfg.max_n_maximal);

    // Route 1: every disjoint sum-free pair with |S| + |B| ≤ 8. The sets I ⊆ B
    // with S ∪ I maximal are exactly M ∖ S for maximal M ⊇ S with M ∖ S ⊆ B.
    let mut exhaustive = CheckOutcome::new("small-pairs-exhaustive");
    for n in 1..=n_max {
        let g = ground(n)?;
        let sum_free: Vec<u64> = count_sum_free(g, true, &cfg)?
            .sets
            .unwrap_or_default()
            .iter()
            .map(set_mask)
            .collect();
        let maximal: Vec<u64> = count_maximal_sum_free(g, Algorithm::Backtracking, true, &cfg)?
            .sets
            .unwrap_or_default()
            .iter()
            .map(set_mask)
            .collect();
        for &s in &sum_free {
            let s_len = s.count_ones();
            if s_len > 8 {
                continue;
            }
            for &b in &sum_free {
                if s & b != 0 || s_len + b.count_ones() > 8 {
                    continue;
                }
                let extensions: Vec<u64> = maximal
                    .iter()
                    .filter(|&&m| m & s == s && (m & !s) & !b == 0)
                    .map(|&m| m & !s)
                    .collect();
                if extensions.is_empty() {
                    continue;
                }
                let (ss, bs) = (mask_set(n, s), mask_set(n, b));
                let link = build_link_graph(&ss, &bs, g)?;
                for i in extensions {
                    let is = mask_set(n, i);
                    let ok = link.graph().is_maximal_independent(&is.to_vec());
                    exhaustive.record(ok, || pair_instance(n, &ss, &bs, &is));
                }
            }
        }
    }

    // Route 2: random pairs, every I ⊆ B tested directly for maximality of S ∪ I.
    let mut random = CheckOutcome::new("random-pairs-direct");
    for _ in 0..p.trials {
        let n = rng.gen_range(1..=n_max.max(1));
        let g = ground(n)?;
        let keep = rng.gen_range(0.1..=1.0);
        let s = random_sum_free_from(rng, &IntSet::full(n), keep);
        let keep = rng.gen_range(0.1..=1.0);
        let b = random_sum_free_from(rng, &s.complement(), keep);
        let link = build_link_graph(&s, &b, g)?;
        let members = b.to_vec();
        for mask in 0u32..(1 << members.len()) {
            let i: Vec<usize> = members
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let is = IntSet::from_elements(n, i.iter().copied())?;
            if !is_maximal_sum_free(&s.union(&is), g) {
                continue;
            }
            let ok = link.graph().is_maximal_independent(&i);
            random.record(ok, || pair_instance(n, &s, &b, &is));
        }
    }
    Ok(vec![exhaustive, random])
}

fn upper_half_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut check = CheckOutcome::new("no-triangles-above-half");
    for _ in 0..p.trials {
        let n = rng.gen_range(2..=p.n.max(2));
        let g = ground(n)?;
        let keep = rng.gen_range(0.05..=1.0);
        let s = random_sum_free_from(rng, &IntSet::full(n), keep);
        let upper = IntSet::interval(n, n / 2 + 1, n).difference(&s);
        let density = rng.gen_range(0.2..=1.0);
        let b = IntSet::from_fn(n, |x| upper.contains(x) && rng.gen_bool(density));
        for base in [&upper, &b] {
            let link = build_link_graph(&s, base, g)?;
            let tris = list_triangles(&link);
            check.record(tris.is_empty(), || {
                serde_json::to_string(&link).unwrap_or_default()
            });
        }
    }
    Ok(vec![check])
}

fn odd_link_draws(
    p: &SuiteParams,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(GroundInterval, IntSet)>> {
    (0..p.trials)
        .map(|_| {
            let (n, s) = random_even_sum_free(rng, 4, p.n.max(4));
            Ok((ground(n)?, s))
        })
        .collect()
}

fn blue_parity_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut check = CheckOutcome::new("blue-count-0-or-2");
    for (g, s) in odd_link_draws(p, rng)? {
        let link = color_edges(&build_link_graph(&s, &IntSet::odds(g.n()), g)?)?;
        for t in list_triangles(&link) {
            let ok = matches!(t.blue_count, Some(0 | 2)) && t.type_tag.is_some();
            check.record(ok, || {
                json!({"n": g.n(), "S": s, "triangle": t}).to_string()
            });
        }
    }
    Ok(vec![check])
}

fn forced_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut cap = CheckOutcome::new("at-most-24-per-triple");
    let mut sound = CheckOutcome::new("forced-are-triangles");
    let mut complete = CheckOutcome::new("every-triangle-forced");
    for (g, s) in odd_link_draws(p, rng)? {
        let odds = IntSet::odds(g.n());
        let link = build_link_graph(&s, &odds, g)?;
        let graph = link.graph();
        let src = s.to_vec();
        for (i, &a) in src.iter().enumerate() {
            for (j, &b) in src.iter().enumerate().skip(i) {
                for &c in &src[j..] {
                    let forced = forced_triangles(a, b, c, &odds, g);
                    cap.record(forced.len() <= 24, || {
                        json!({"n": g.n(), "triple": [a, b, c], "forced": forced.len()}).to_string()
                    });
                    for t in &forced {
                        let ok = graph.has_edge(t.x, t.y)
                            && graph.has_edge(t.y, t.z)
                            && graph.has_edge(t.x, t.z);
                        sound.record(ok, || {
                            json!({"n": g.n(), "S": s, "triple": [a, b, c], "triangle": t})
                                .to_string()
                        });
                    }
                }
            }
        }
        let witnesses = |x: usize, y: usize| -> Vec<usize> {
            [x + y, y - x].into_iter().filter(|&v| s.contains(v)).collect()
        };
        for (x, y, z) in graph.triangles() {
            let mut found = false;
            'search: for &s1 in &witnesses(x, y) {
                for &s2 in &witnesses(y, z) {
                    for &s3 in &witnesses(x, z) {
                        if forced_triangles(s1, s2, s3, &odds, g)
                            .iter()
                            .any(|t| (t.x, t.y, t.z) == (x, y, z))
                        {
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
            complete.record(found, || {
                json!({"n": g.n(), "S": s, "triangle": [x, y, z]}).to_string()
            });
        }
    }
    Ok(vec![cap, sound, complete])
}

fn degree_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut lower = CheckOutcome::new("min-degree-at-least-half-S");
    let mut upper = CheckOutcome::new("max-degree-at-most-2S-plus-2");
    for (g, s) in odd_link_draws(p, rng)? {
        let link = build_link_graph(&s, &IntSet::odds(g.n()), g)?;
        let (min_d, max_d) = degree_profile(&link);
        let k = s.len();
        let instance = || json!({"n": g.n(), "S": s, "delta": min_d, "Delta": max_d}).to_string();
        lower.record(2 * min_d >= k, instance);
        upper.record(max_d <= 2 * k + 2, instance);
    }
    Ok(vec![lower, upper])
}

fn graph_json(g: &LoopedGraph) -> String {
    serde_json::to_string(g).unwrap_or_default()
}

fn moon_moser_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut holds = CheckOutcome::new("bound-holds");
    let mut tight_only = CheckOutcome::new("equality-only-on-triangle-unions");
    let mut tight = CheckOutcome::new("triangle-unions-attain-bound");
    for k in 1..=p.n {
        for _ in 0..p.trials {
            let g = random_looped_graph(rng, k);
            let r = extremal_bound_report(&g)?;
            holds.record(r.moon_moser_holds, || graph_json(&g));
            tight_only.record(!r.moon_moser_tight || is_disjoint_triangle_union(&g), || graph_json(&g));
        }
        if k % 3 == 0 {
            let g = disjoint_triangles(rng, k);
            let r = extremal_bound_report(&g)?;
            tight.record(r.moon_moser_tight, || graph_json(&g));
        }
    }
    Ok(vec![holds, tight_only, tight])
}

fn hujter_tuza_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut holds = CheckOutcome::new("bound-holds");
    let mut tight_only = CheckOutcome::new("equality-only-on-perfect-matchings");
    let mut tight = CheckOutcome::new("perfect-matchings-attain-bound");
    for k in 1..=p.n {
        for _ in 0..p.trials {
            let g = random_triangle_free_graph(rng, k);
            let r = extremal_bound_report(&g)?;
            holds.record(r.hujter_tuza_holds == Some(true), || graph_json(&g));
            tight_only.record(
                r.hujter_tuza_tight != Some(true) || is_perfect_matching(&g),
                || graph_json(&g),
            );
        }
        if k % 2 == 0 {
            let g = perfect_matching(rng, k);
            let r = extremal_bound_report(&g)?;
            tight.record(r.hujter_tuza_tight == Some(true), || graph_json(&g));
        }
    }
    Ok(vec![holds, tight_only, tight])
}

fn transversal_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut valid = CheckOutcome::new("greedy-set-hits-all-triangles");
    let mut holds = CheckOutcome::new("bound-holds");
    for k in 1..=p.n {
        for _ in 0..p.trials {
            let g = random_looped_graph(rng, k);
            let r = extremal_bound_report(&g)?;
            let rest = g.without(&r.hitting_set_t)?;
            valid.record(rest.is_triangle_free(), || graph_json(&g));
            holds.record(r.lemma6_holds, || graph_json(&g));
        }
    }
    Ok(vec![valid, holds])
}

fn peeling_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut picks = CheckOutcome::new("picks-at-most-n-over-b");
    let mut inside = CheckOutcome::new("I-cap-U-inside-Z");
    let mut maximal = CheckOutcome::new("I-cap-U-maximal-in-G[Z]");
    let mut z_bound = CheckOutcome::new("Z-size-bound");
    for _ in 0..p.trials {
        let k = rng.gen_range(1..=p.n.max(1));
        let g = random_graph_min_degree_one(rng, k);
        let sets = enumerate_mis(&g, true)?.sets.unwrap_or_default();
        for i in sets {
            let t = sapozhenko_peel(&g, &i)?;
            let c = &t.certificates;
            let instance = || json!({"graph": g, "I": i}).to_string();
            picks.record(c.picks_within_bound, instance);
            inside.record(c.independent_part_in_z, instance);
            maximal.record(c.independent_part_maximal_in_z, instance);
            z_bound.record(c.z_within_bound, instance);
        }
    }
    Ok(vec![picks, inside, maximal, z_bound])
}

fn dfst_suite(p: &SuiteParams) -> Result<Vec<CheckOutcome>> {
    let cfg = EnumerationConfig::default();
    let mut some_flag = CheckOutcome::new("some-alternative-holds");
    // At desk scale ε·n is a handful of elements, so this tally has exceptions.
    let mut large = CheckOutcome::informational("large-sets-in-case-a-or-b-eps-0.2");
    for n in 1..=p.n.min(cfg.max_n_sum_free) {
        let g = ground(n)?;
        for s in count_sum_free(g, true, &cfg)?.sets.unwrap_or_default() {
            some_flag.record(dfst_classify(&s, g).any(), || format!("n={n} S={s}"));
            // |A| ≥ (1/2 − 1/11)n  ⇔  22|A| ≥ 9n
            if 22 * s.len() >= 9 * n {
                let d = container_case(&s, g, 0.2);
                large.record(d.case_a || d.case_b, || format!("n={n} A={s}"));
            }
        }
    }
    Ok(vec![some_flag, large])
}

fn decompose_suite(p: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let mut partition = CheckOutcome::new("exact-partition");
    let mut sum_free = CheckOutcome::new("remainder-sum-free");
    let mut progress = CheckOutcome::new("each-removal-lowers-triple-count");
    for _ in 0..p.trials {
        let n = rng.gen_range(1..=p.n.max(1));
        let density = rng.gen_range(0.05..=1.0);
        let a = IntSet::from_fn(n, |_| rng.gen_bool(density));
        let d = greedy_removal_decompose(&a);
        let instance = || format!("n={n} A={a}");
        partition.record(
            d.b.union(&d.c) == a && d.b.is_disjoint(&d.c) && d.removal_order.len() == d.c.len(),
            instance,
        );
        sum_free.record(is_sum_free(&d.b), instance);
        let mut cur = a.clone();
        let mut last = schur_triple_count(&cur);
        let mut ok = d.removal_order.len() <= a.len();
        for r in &d.removal_order {
            cur.remove(r.element);
            let now = schur_triple_count(&cur);
            ok &= r.triples > 0 && now < last;
            last = now;
        }
        progress.record(ok, instance);
    }
    Ok(vec![partition, sum_free, progress])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        for s in Suite::ALL {
            let mut p = s.default_params();
            p.n = p.n.min(10);
            p.trials = p.trials.min(5);
            let a = run_suite(s, p).unwrap();
            let b = run_suite(s, p).unwrap();
            assert!(a.passed(), "{}", a.summary());
            assert_eq!(a.summary(), b.summary());
        }
    }
}

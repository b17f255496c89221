//! Structural classification of sum-free sets and of large near-sum-free sets.

use serde::Serialize;

use crate::groundset::{is_sum_free, schur_triple_count, GroundInterval, IntSet};

/// Which of the three structural alternatives a set satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    /// `|S| ≤ 2n/5 + 1`.
    pub alt_small: bool,
    /// Every member is odd.
    pub alt_odd: bool,
    /// `|S| ≤ min(S)`, with `min(∅) = ∞`.
    pub alt_min: bool,
}

impl StructureClass {
    pub fn any(&self) -> bool {
        self.alt_small || self.alt_odd || self.alt_min
    }
}

pub fn dfst_classify(s: &IntSet, g: GroundInterval) -> StructureClass {
    let size = s.len();
    StructureClass {
        // |S| ≤ 2n/5 + 1  ⇔  5|S| ≤ 2n + 5
        alt_small: 5 * size <= 2 * g.n() + 5,
        alt_odd: s.iter().all(|x| x % 2 == 1),
        alt_min: s.min_element().is_none_or(|m| size <= m),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub element: usize,
    /// Schur triples through `element` in the set just before its removal.
    pub triples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    /// Sum-free remainder.
    pub b: IntSet,
    /// Removed elements.
    pub c: IntSet,
    pub removal_order: Vec<Removal>,
}

/// Number of Schur triples of `a` (as `x ≤ y`, `x + y = z`) that use `v`.
fn triples_through(a: &IntSet, v: usize) -> usize {
    let as_sum = a
        .iter()
        .take_while(|&x| 2 * x <= v)
        .filter(|&x| a.contains(v - x))
        .count();
    let as_summand = a.iter().filter(|&y| a.contains(v + y)).count();
    as_sum + as_summand
}

/// Splits `A` into a sum-free `B` and a removed part `C` by repeatedly deleting
/// the element lying in the most Schur triples (ties to the smallest element).
pub fn greedy_removal_decompose(a: &IntSet) -> DecompositionResult {
    let mut b = a.clone();
    let mut c = IntSet::empty(a.universe());
    let mut removal_order = Vec::new();
    while !is_sum_free(&b) {
        let mut best: Option<(usize, usize)> = None;
        for v in b.iter() {
            let t = triples_through(&b, v);
            if best.is_none_or(|(_, bt)| t > bt) {
                best = Some((v, t));
            }
        }
        let (v, t) = best.expect("a set with a Schur triple is non-empty");
        debug_assert!(t > 0);
        b.remove(v);
        c.insert(v);
        removal_order.push(Removal {
            element: v,
            triples: t,
        });
    }
    DecompositionResult {
        b,
        c,
        removal_order,
    }
}

/// Diagnostic for the large-set dichotomy at an explicit threshold `epsilon`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseDiagnostic {
    /// `1/2 − |A|/n`.
    pub gamma: f64,
    /// `|A ∩ [1, ⌈(1/2 − γ)n⌉]|`.
    pub low_part: usize,
    /// `|A ∖ O|`.
    pub even_part: usize,
    /// `low_part ≤ ε·n`.
    pub case_a: bool,
    /// `even_part ≤ ε·n`.
    pub case_b: bool,
    pub schur_triples: usize,
}

pub fn container_case(a: &IntSet, g: GroundInterval, epsilon: f64) -> CaseDiagnostic {
    let n = g.n();
    let size = a.len();
    // (1/2 − γ)n = |A| exactly, so the ceiling is |A| itself.
    let cut = size;
    let low_part = a.iter().take_while(|&x| x <= cut).count();
    let even_part = a.iter().filter(|x| x % 2 == 0).count();
    let limit = epsilon * n as f64;
    CaseDiagnostic {
        gamma: 0.5 - size as f64 / n as f64,
        low_part,
        even_part,
        case_a: low_part as f64 <= limit,
        case_b: even_part as f64 <= limit,
        schur_triples: schur_triple_count(a),
    }
}

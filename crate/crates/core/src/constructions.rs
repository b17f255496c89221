//! The two explicit families of sum-free sets that force many maximal sum-free
//! sets, and deterministic completion of a sum-free set to a maximal one.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groundset::{is_sum_free, GroundInterval, IntSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Ce,
    Quarter,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Ce => "ce",
            FamilyKind::Quarter => "quarter",
        }
    }
}

/// `m` together with one member of each pair `{x, m − x}`, `x` odd and `x < m/2`,
/// where `m` is the even one of `n`, `n − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeFamilySpec {
    pub n: usize,
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl CeFamilySpec {
    pub fn new(g: GroundInterval) -> Result<Self> {
        let n = g.n();
        if n < 4 {
            return Err(Error::InvalidArgument(format!(
                "pair family needs n >= 4, got {n}"
            )));
        }
        let m = if n.is_multiple_of(2) { n } else { n - 1 };
        let pairs = (1..m)
            .step_by(2)
            .take_while(|&x| 2 * x < m)
            .map(|x| (x, m - x))
            .collect();
        Ok(Self { n, m, pairs })
    }

    /// `2^{#pairs}`.
    pub fn size(&self) -> u128 {
        1u128 << self.pairs.len()
    }

    /// Member for chooser index `i`: the first pair reads the most significant bit,
    /// and a set bit selects the larger element `m − x`.
    pub fn member(&self, i: u128) -> IntSet {
        let k = self.pairs.len();
        let mut s = IntSet::empty(self.n);
        s.insert(self.m);
        for (j, &(lo, hi)) in self.pairs.iter().enumerate() {
            let bit = i >> (k - 1 - j) & 1 == 1;
            s.insert(if bit { hi } else { lo });
        }
        s
    }

    pub fn members(&self) -> impl Iterator<Item = IntSet> + '_ {
        (0..self.size()).map(|i| self.member(i))
    }
}

/// `{n/4} ∪ chosen ∪ {x − n/4 : x ∈ I₂ ∖ chosen}` with `I₂ = [3n/4 + 1, n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarterFamilySpec {
    pub n: usize,
    pub quarter: usize,
    pub i1: (usize, usize),
    pub i2: (usize, usize),
}

impl QuarterFamilySpec {
    pub fn new(g: GroundInterval) -> Result<Self> {
        let n = g.n();
        if !n.is_multiple_of(4) {
            return Err(Error::InvalidArgument(format!(
                "quarter family needs 4 | n, got {n}"
            )));
        }
        let q = n / 4;
        Ok(Self {
            n,
            quarter: q,
            i1: (2 * q + 1, 3 * q),
            i2: (3 * q + 1, n),
        })
    }

    pub fn size(&self) -> u128 {
        1u128 << self.quarter
    }

    /// Member for chooser index `i`: bit for `3n/4 + 1` is the most significant;
    /// a set bit puts the element itself into the chosen subset.
    pub fn member(&self, i: u128) -> IntSet {
        let k = self.quarter;
        let mut s = IntSet::empty(self.n);
        s.insert(self.quarter);
        for (j, x) in (self.i2.0..=self.i2.1).enumerate() {
            if i >> (k - 1 - j) & 1 == 1 {
                s.insert(x);
            } else {
                s.insert(x - self.quarter);
            }
        }
        s
    }

    pub fn member_for(&self, chosen: &IntSet) -> Result<IntSet> {
        let k = self.quarter;
        let mut i = 0u128;
        for x in chosen.iter() {
            if x < self.i2.0 || x > self.i2.1 {
                return Err(Error::InvalidArgument(format!(
                    "{x} is outside [{}, {}]",
                    self.i2.0, self.i2.1
                )));
            }
            i |= 1 << (k - 1 - (x - self.i2.0));
        }
        Ok(self.member(i))
    }

    pub fn members(&self) -> impl Iterator<Item = IntSet> + '_ {
        (0..self.size()).map(|i| self.member(i))
    }
}

pub fn ce_family(g: GroundInterval) -> Result<Vec<IntSet>> {
    Ok(CeFamilySpec::new(g)?.members().collect())
}

pub fn quarter_family(g: GroundInterval) -> Result<Vec<IntSet>> {
    Ok(QuarterFamilySpec::new(g)?.members().collect())
}

/// Scans `1..=n` upwards and adds every element that keeps the set sum-free.
pub fn complete_to_maximal(s: &IntSet, g: GroundInterval) -> Result<IntSet> {
    if !is_sum_free(s) {
        return Err(Error::NotSumFree(s.to_string()));
    }
    let mut out = if s.universe() == g.n() {
        s.clone()
    } else {
        s.with_universe(g.n())?
    };
    for v in 1..=g.n() {
        if out.contains(v) {
            continue;
        }
        out.insert(v);
        if !is_sum_free(&out) {
            out.remove(v);
        }
    }
    Ok(out)
}

/// Number of distinct sets among the maximal completions of `family`.
pub fn distinct_maximal_count<'a, I>(family: I, g: GroundInterval) -> Result<usize>
where
    I: IntoIterator<Item = &'a IntSet>,
{
    let mut seen = BTreeSet::new();
    for s in family {
        seen.insert(complete_to_maximal(s, g)?);
    }
    Ok(seen.len())
}

/// Text form: a header line, then one member per line.
pub fn family_text<'a, I>(kind: FamilyKind, n: usize, size: u128, members: I) -> String
where
    I: IntoIterator<Item = &'a IntSet>,
{
    let mut out = format!("# family={} n={n} size={size}\n", kind.name());
    for m in members {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

//! The ground set `[1..n]`, integer subsets of it, and Schur triples.
//!
//! Everything here is written for clarity first: these functions are the
//! reference predicates that the faster engines are checked against.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// The interval `[1..n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroundInterval {
    n: usize,
}

impl GroundInterval {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ground set needs n >= 1".into()));
        }
        Ok(Self { n })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize) -> bool {
        (1..=self.n).contains(&x)
    }
}

/// A subset of `[1..n]`, stored as a bit vector indexed by value.
///
/// Sets compare by their indicator string `(1 ∈ A, 2 ∈ A, …, n ∈ A)` read
/// lexicographically with absent before present. Enumeration engines emit
/// sets in this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSet {
    n: usize,
    bits: BitSet,
}

impl IntSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            bits: BitSet::new(n + 1),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = BitSet::full(n + 1);
        bits.remove(0);
        Self { n, bits }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for x in elements {
            s.try_insert(x)?;
        }
        Ok(s)
    }

    /// All odd numbers of `[1..n]`.
    pub fn odds(n: usize) -> Self {
        Self::from_fn(n, |x| x % 2 == 1)
    }

    /// All even numbers of `[1..n]`.
    pub fn evens(n: usize) -> Self {
        Self::from_fn(n, |x| x % 2 == 0)
    }

    /// `[p, q] ∩ [1..n]`.
    pub fn interval(n: usize, p: usize, q: usize) -> Self {
        Self::from_fn(n, |x| p <= x && x <= q)
    }

    pub fn from_fn(n: usize, mut keep: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(n);
        for x in 1..=n {
            if keep(x) {
                s.bits.insert(x);
            }
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x >= 1 && self.bits.contains(x)
    }

    /// Panics if `x` lies outside `[1..n]`.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x >= 1 && x <= self.n, "{x} outside [1..{}]", self.n);
        self.bits.insert(x)
    }

    pub fn try_insert(&mut self, x: usize) -> Result<bool> {
        if x == 0 || x > self.n {
            return Err(Error::OutOfRange { value: x, n: self.n });
        }
        Ok(self.bits.insert(x))
    }

    pub fn remove(&mut self, x: usize) -> bool {
        x >= 1 && self.bits.remove(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_element(&self) -> Option<usize> {
        self.bits.first()
    }

    pub fn max_element(&self) -> Option<usize> {
        self.bits.last()
    }

    pub fn union(&self, other: &IntSet) -> IntSet {
        self.same_universe(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        IntSet { n: self.n, bits }
    }

    pub fn intersection(&self, other: &IntSet) -> IntSet {
        self.same_universe(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        IntSet { n: self.n, bits }
    }

    pub fn difference(&self, other: &IntSet) -> IntSet {
        self.same_universe(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        IntSet { n: self.n, bits }
    }

    pub fn complement(&self) -> IntSet {
        IntSet::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.same_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &IntSet) -> bool {
        self.same_universe(other);
        self.bits.is_disjoint(&other.bits)
    }

    /// Same members, different universe. Fails if a member does not fit.
    pub fn with_universe(&self, n: usize) -> Result<IntSet> {
        IntSet::from_elements(n, self.iter())
    }

    /// `{a + b : a, b ∈ A}` truncated to `[1..n]`.
    pub fn sumset(&self) -> IntSet {
        let mut out = BitSet::new(self.n + 1);
        for a in self.iter() {
            out.union_with(&self.bits.shifted_up(a));
        }
        IntSet { n: self.n, bits: out }
    }

    /// `{b − a : a < b, a, b ∈ A}`.
    pub fn positive_differences(&self) -> IntSet {
        let mut out = BitSet::new(self.n + 1);
        for a in self.iter() {
            out.union_with(&self.bits.shifted_down(a));
        }
        out.remove(0);
        IntSet { n: self.n, bits: out }
    }

    /// `{x : 2x ∈ A}`.
    pub fn halves(&self) -> IntSet {
        IntSet::from_fn(self.n, |x| self.contains(2 * x))
    }

    pub(crate) fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// Packs the set into a value-indexed `u128` (bit `x` set iff `x ∈ A`).
    pub(crate) fn to_mask(&self) -> u128 {
        debug_assert!(self.n < 128);
        self.iter().fold(0u128, |m, x| m | 1u128 << x)
    }

    pub(crate) fn from_mask(n: usize, mask: u128) -> IntSet {
        IntSet::from_fn(n, |x| mask >> x & 1 == 1)
    }

    /// Parses the comma-separated text form. The empty string is the empty set.
    pub fn parse(text: &str, n: usize) -> Result<IntSet> {
        let text = text.trim();
        let mut s = IntSet::empty(n);
        if text.is_empty() {
            return Ok(s);
        }
        for tok in text.split(',') {
            let v: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))?;
            s.try_insert(v)?;
        }
        Ok(s)
    }

    fn same_universe(&self, other: &IntSet) {
        assert_eq!(
            self.n, other.n,
            "set operation across universes [1..{}] and [1..{}]",
            self.n, other.n
        );
    }
}

impl Ord for IntSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.bits.cmp_indicator(&other.bits))
    }
}

impl PartialOrd for IntSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}⊆[1..{}]", self.n)
    }
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// `x + y = z` with `x ≤ y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SchurTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl SchurTriple {
    pub fn new(a: usize, b: usize) -> Self {
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        SchurTriple { x, y, z: x + y }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.x == v || self.y == v || self.z == v
    }
}

/// Every Schur triple inside `[1..n]`, sorted lexicographically.
pub fn schur_triples(g: GroundInterval) -> Vec<SchurTriple> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 1..=n / 2 {
        for y in x..=n - x {
            out.push(SchurTriple { x, y, z: x + y });
        }
    }
    out
}

/// True iff no `x, y ∈ A` (possibly equal) have `x + y ∈ A`. The empty set is sum-free.
pub fn is_sum_free(a: &IntSet) -> bool {
    a.iter().all(|x| a.bits().shifted_up(x).is_disjoint(a.bits()))
}

/// Number of triples `x ≤ y`, `x + y = z` with all three in `A`.
pub fn schur_triple_count(a: &IntSet) -> usize {
    let mut count = 0;
    for z in a.iter() {
        for x in a.iter().take_while(|&x| 2 * x <= z) {
            if a.contains(z - x) {
                count += 1;
            }
        }
    }
    count
}

/// Schur triples lying entirely in `A`, in lexicographic order.
pub fn schur_triples_in(a: &IntSet) -> Vec<SchurTriple> {
    let mut out = Vec::new();
    for x in a.iter() {
        for y in a.iter().skip_while(|&y| y < x) {
            if a.contains(x + y) {
                out.push(SchurTriple { x, y, z: x + y });
            }
        }
    }
    out
}

/// A Schur triple inside `A ∪ {v}` that uses `v`, if one exists.
///
/// For `v ∉ A` this is the reason `v` cannot be added to a sum-free `A`.
pub fn blocker_witness(a: &IntSet, v: usize) -> Option<SchurTriple> {
    let member = |t: usize| t == v || a.contains(t);
    if member(2 * v) {
        return Some(SchurTriple::new(v, v));
    }
    for x in a.iter() {
        if x < v && member(v - x) {
            return Some(SchurTriple::new(x, v - x));
        }
        if member(v + x) {
            return Some(SchurTriple::new(v, x));
        }
    }
    None
}

/// Sum-free and not properly contained in another sum-free subset of `[1..n]`.
pub fn is_maximal_sum_free(a: &IntSet, g: GroundInterval) -> bool {
    let a = if a.universe() == g.n() {
        a.clone()
    } else {
        match a.with_universe(g.n()) {
            Ok(s) => s,
            Err(_) => return false,
        }
    };
    if !is_sum_free(&a) {
        return false;
    }
    (1..=g.n()).filter(|&v| !a.contains(v)).all(|v| {
        let mut bigger = a.clone();
        bigger.insert(v);
        !is_sum_free(&bigger)
    })
}

//! Fixed-domain dense bitset used by both integer sets and graph adjacency.

use std::cmp::Ordering;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    domain: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(domain: usize) -> Self {
        Self {
            domain,
            words: vec![0; domain.div_ceil(WORD)],
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::new(domain);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    #[inline]
    pub fn domain(&self) -> usize {
        self.domain
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.domain && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.domain, "bit {i} outside domain {}", self.domain);
        let w = &mut self.words[i / WORD];
        let was = *w >> (i % WORD) & 1 == 1;
        *w |= 1 << (i % WORD);
        !was
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.domain {
            return false;
        }
        let w = &mut self.words[i / WORD];
        let was = *w >> (i % WORD) & 1 == 1;
        *w &= !(1 << (i % WORD));
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Bits shifted towards higher indices by `k`; bits pushed past the domain are dropped.
    pub fn shifted_up(&self, k: usize) -> BitSet {
        let mut out = BitSet::new(self.domain);
        let (ws, bs) = (k / WORD, k % WORD);
        for i in (ws..out.words.len()).rev() {
            let src = i - ws;
            let mut v = self.words[src] << bs;
            if bs != 0 && src > 0 {
                v |= self.words[src - 1] >> (WORD - bs);
            }
            out.words[i] = v;
        }
        out.trim();
        out
    }

    /// Bits shifted towards lower indices by `k`; bits below zero are dropped.
    pub fn shifted_down(&self, k: usize) -> BitSet {
        let mut out = BitSet::new(self.domain);
        let (ws, bs) = (k / WORD, k % WORD);
        let n = self.words.len();
        for i in 0..n.saturating_sub(ws) {
            let src = i + ws;
            let mut v = self.words[src] >> bs;
            if bs != 0 && src + 1 < n {
                v |= self.words[src + 1] << (WORD - bs);
            }
            out.words[i] = v;
        }
        out
    }

    fn trim(&mut self) {
        let rem = self.domain % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    fn check(&self, other: &BitSet) {
        debug_assert_eq!(self.domain, other.domain, "bitset domains differ");
    }

    /// Orders sets by their indicator string read from index 0 upwards, with absent < present.
    pub fn cmp_indicator(&self, other: &BitSet) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let d = a ^ b;
            if d != 0 {
                let low = d & d.wrapping_neg();
                return if a & low == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.domain.cmp(&other.domain)
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from(domain: usize, xs: &[usize]) -> BitSet {
        let mut b = BitSet::new(domain);
        for &x in xs {
            b.insert(x);
        }
        b
    }

    #[test]
    fn shifts_cross_word_boundaries() {
        let b = from(200, &[0, 63, 64, 130]);
        assert_eq!(b.shifted_up(70).iter().collect::<Vec<_>>(), vec![70, 133, 134]);
        assert_eq!(b.shifted_down(63).iter().collect::<Vec<_>>(), vec![0, 1, 67]);
        assert_eq!(b.shifted_up(0), b);
        assert!(b.shifted_up(200).is_empty());
    }

    #[test]
    fn full_respects_domain() {
        let b = BitSet::full(70);
        assert_eq!(b.len(), 70);
        assert_eq!(b.last(), Some(69));
        assert_eq!(BitSet::new(0).iter().next(), None);
    }

    #[test]
    fn indicator_order() {
        // {} < {3} < {1} < {1,3}
        let d = 5;
        let e = from(d, &[]);
        let a = from(d, &[3]);
        let b = from(d, &[1]);
        let c = from(d, &[1, 3]);
        assert!(e.cmp_indicator(&a).is_lt());
        assert!(a.cmp_indicator(&b).is_lt());
        assert!(b.cmp_indicator(&c).is_lt());
    }
}

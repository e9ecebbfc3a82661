//! Fixed-width vertex bitsets.
//!
//! Graphs up to 64 vertices use a single word per row; larger graphs (up to
//! [`MAX_VERTICES`](crate::graph::MAX_VERTICES)) spill over into further
//! words. Intersection sizes are popcounts over the word slices.

use std::fmt;

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

/// Number of common members of two equally sized word slices.
#[inline]
pub(crate) fn intersection_len(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// A subset of `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexBits {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexBits {
    pub fn new(capacity: usize) -> Self {
        VertexBits {
            capacity,
            words: vec![0; words_for(capacity)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = Self::new(capacity);
        for v in 0..capacity {
            bits.insert(v);
        }
        bits
    }

    pub fn from_members(capacity: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = Self::new(capacity);
        for v in members {
            bits.insert(v);
        }
        bits
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn intersection_len(&self, row: &[u64]) -> usize {
        intersection_len(&self.words, row)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + bit)
            })
        })
    }

    /// Complement within `0..capacity`.
    pub fn complement(&self) -> Self {
        let mut out = Self::new(self.capacity);
        for v in 0..self.capacity {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }
}

impl fmt::Debug for VertexBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_multiple_words() {
        let bits = VertexBits::from_members(130, [0, 63, 64, 129]);
        assert_eq!(bits.words().len(), 3);
        assert_eq!(bits.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(bits.len(), 4);
        assert!(bits.contains(64) && !bits.contains(65) && !bits.contains(500));
        assert_eq!(bits.complement().len(), 126);
    }

    #[test]
    fn intersection_counts_common_members() {
        let a = VertexBits::from_members(70, [1, 2, 65]);
        let b = VertexBits::from_members(70, [2, 3, 65, 66]);
        assert_eq!(a.intersection_len(b.words()), 2);
    }
}

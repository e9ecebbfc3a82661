//! Backtracking kernel shared by every exact parameter.
//!
//! [`CappedSearch`] looks for large sets `M` with `|N[v] ∩ M| <= cap(v)`.
//! With `cap = k` this is a k-limited packing; with
//! `cap(v) = floor(deg(v) / 2)` the feasible `M` are exactly the `-1`
//! classes of signed dominating functions; with `cap(v) = deg(v) + 1 - k`
//! they are the complements of k-tuple dominating sets.
//!
//! Pruning counts capacity: every member `w` uses up `|N[w]|` units of the
//! total `Σ cap(v)`, so at most as many further members fit as the smallest
//! closed neighborhoods of the remaining candidates allow.

use crate::graph::Graph;

/// Which way [`CappedSearch::first_of_size`] orders its hits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Least {
    /// Lexicographically least `M`.
    Members,
    /// `M` whose complement is lexicographically least.
    Complement,
}

pub(crate) struct CappedSearch {
    closed: Vec<Vec<usize>>,
    cap: Vec<usize>,
    allowed: Vec<bool>,
    load: Vec<usize>,
    slack: usize,
    best: usize,
    scratch: Vec<usize>,
    /// Closed neighborhoods as masks, when `n <= 64`.
    masks: Option<Vec<u64>>,
}

impl CappedSearch {
    pub fn new(g: &Graph, cap: Vec<usize>, allowed: Vec<bool>) -> Self {
        debug_assert_eq!(cap.len(), g.n());
        debug_assert_eq!(allowed.len(), g.n());
        CappedSearch {
            closed: (0..g.n()).map(|v| g.closed_neighborhood(v)).collect(),
            slack: cap.iter().sum(),
            cap,
            allowed,
            load: vec![0; g.n()],
            best: 0,
            scratch: Vec::new(),
            masks: (g.n() <= 64).then(|| (0..g.n()).map(|v| g.closed_row(v)[0]).collect()),
        }
    }

    #[inline]
    fn addable(&self, w: usize) -> bool {
        self.allowed[w] && self.closed[w].iter().all(|&u| self.load[u] < self.cap[u])
    }

    #[inline]
    fn add(&mut self, w: usize) {
        for &u in &self.closed[w] {
            self.load[u] += 1;
        }
        self.slack -= self.closed[w].len();
    }

    #[inline]
    fn remove(&mut self, w: usize) {
        for &u in &self.closed[w] {
            self.load[u] -= 1;
        }
        self.slack += self.closed[w].len();
    }

    /// Upper bound on how many of `candidates` can still join.
    fn room(&mut self, candidates: impl Iterator<Item = usize>) -> usize {
        let mut sizes = std::mem::take(&mut self.scratch);
        sizes.clear();
        let mut candidates_mask = 0u64;
        for w in candidates {
            if self.addable(w) {
                sizes.push(self.closed[w].len());
                if w < 64 {
                    candidates_mask |= 1 << w;
                }
            }
        }
        sizes.sort_unstable();
        // capacity of vertices no candidate can reach is of no use
        let mut left = match &self.masks {
            Some(masks) => masks
                .iter()
                .enumerate()
                .filter(|&(_, &mask)| mask & candidates_mask != 0)
                .map(|(v, _)| self.cap[v] - self.load[v])
                .sum(),
            None => self.slack,
        };
        let mut fit = 0;
        for &s in &sizes {
            if s > left {
                break;
            }
            left -= s;
            fit += 1;
        }
        self.scratch = sizes;
        match &self.masks {
            Some(masks) if fit > 1 => fit.min(self.partition_room(masks, candidates_mask)),
            _ => fit,
        }
    }

    /// Greedily picks vertices `v` whose remaining capacity limits the
    /// candidates inside `N[v]` the most; each chosen `v` admits at most
    /// `cap(v) - load(v)` of them, every other candidate at most one.
    fn partition_room(&self, masks: &[u64], mut left: u64) -> usize {
        let mut room = 0;
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (v, &mask) in masks.iter().enumerate() {
                let inside = (mask & left).count_ones() as usize;
                let res = self.cap[v] - self.load[v];
                if inside > res && best.is_none_or(|(saving, _)| inside - res > saving) {
                    best = Some((inside - res, v));
                }
            }
            let Some((_, v)) = best else { break };
            room += self.cap[v] - self.load[v];
            left &= !masks[v];
        }
        room + left.count_ones() as usize
    }

    /// Inclusion-maximal set built by scanning `order` once.
    pub fn greedy(&mut self, order: &[usize]) -> Vec<usize> {
        let mut picked = Vec::new();
        for &w in order {
            if self.addable(w) {
                self.add(w);
                picked.push(w);
            }
        }
        for &w in &picked {
            self.remove(w);
        }
        picked
    }

    /// Maximum feasible size, exploring `order` with inclusion first.
    /// `known` must be the size of some feasible set.
    pub fn max_size(&mut self, order: &[usize], known: usize) -> usize {
        self.best = known;
        self.branch(order, 0, 0);
        self.best
    }

    fn branch(&mut self, order: &[usize], pos: usize, size: usize) {
        if size > self.best {
            self.best = size;
        }
        if pos == order.len() {
            return;
        }
        if size + self.room(order[pos..].iter().copied()) <= self.best {
            return;
        }
        let w = order[pos];
        if self.addable(w) {
            self.add(w);
            self.branch(order, pos + 1, size + 1);
            self.remove(w);
        }
        self.branch(order, pos + 1, size);
    }

    /// The feasible set with exactly `size` members that is least in the
    /// sense of `least`.
    pub fn first_of_size(&mut self, size: usize, least: Least) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(size);
        self.lex(0, size, least, &mut chosen).then_some(chosen)
    }

    fn lex(&mut self, pos: usize, size: usize, least: Least, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == size {
            return true;
        }
        let need = size - chosen.len();
        let n = self.closed.len();
        if n - pos < need || self.room(pos..n) < need {
            return false;
        }
        let include = |s: &mut Self, chosen: &mut Vec<usize>| {
            if !s.addable(pos) {
                return false;
            }
            s.add(pos);
            chosen.push(pos);
            if s.lex(pos + 1, size, least, chosen) {
                return true;
            }
            chosen.pop();
            s.remove(pos);
            false
        };
        match least {
            Least::Members => include(self, chosen) || self.lex(pos + 1, size, least, chosen),
            Least::Complement => self.lex(pos + 1, size, least, chosen) || include(self, chosen),
        }
    }
}

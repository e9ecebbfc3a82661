use super::certificate::{is_limited_packing, is_tuple_dominating};
use super::search::{CappedSearch, Least};
use crate::bitset::VertexBits;
use crate::graph::Graph;

/// Advances `comb` to the next `comb.len()`-subset of `0..n` in
/// lexicographic order; `false` once exhausted.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let t = comb.len();
    let Some(i) = (0..t).rev().find(|&i| comb[i] < n - t + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..t {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

/// First subset of size `t` (lexicographic order) accepted by `accept`.
fn first_subset(n: usize, t: usize, mut accept: impl FnMut(&VertexBits) -> bool) -> Option<Vec<usize>> {
    let mut comb: Vec<usize> = (0..t).collect();
    loop {
        if accept(&VertexBits::from_members(n, comb.iter().copied())) {
            return Some(comb);
        }
        if !next_combination(&mut comb, n) {
            return None;
        }
    }
}

pub(super) fn cover_oracle(g: &Graph, k: usize) -> Vec<usize> {
    (0..=g.n())
        .find_map(|t| first_subset(g.n(), t, |set| is_tuple_dominating(g, set, k)))
        .expect("V is a k-tuple dominating set for k <= δ + 1")
}

pub(super) fn packing_oracle(g: &Graph, k: usize) -> Vec<usize> {
    (0..=g.n())
        .rev()
        .find_map(|t| first_subset(g.n(), t, |set| is_limited_packing(g, set, k)))
        .expect("the empty set is a limited packing")
}

/// A k-tuple dominating set is the complement of a set meeting every
/// `N[v]` in at most `deg(v) + 1 - k` vertices.
pub(super) fn cover_search(g: &Graph, k: usize) -> Vec<usize> {
    let cap = (0..g.n()).map(|v| g.degree(v) + 1 - k).collect();
    let outside = maximum(g, cap, Least::Complement);
    (0..g.n()).filter(|v| outside.binary_search(v).is_err()).collect()
}

pub(super) fn packing_search(g: &Graph, k: usize) -> Vec<usize> {
    maximum(g, vec![k; g.n()], Least::Members)
}

/// Largest set within the capacities, least in the sense of `least`.
/// Candidates are tried smallest neighborhood first.
fn maximum(g: &Graph, cap: Vec<usize>, least: Least) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| g.degree(v));
    let mut search = CappedSearch::new(g, cap, vec![true; g.n()]);
    let known = search.greedy(&order).len();
    let best = search.max_size(&order, known);
    search.first_of_size(best, least).expect("a set of the optimal size exists")
}

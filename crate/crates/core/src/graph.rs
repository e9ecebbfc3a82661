//! Simple undirected graphs on dense vertex indices `0..n`.

use crate::bitset::{intersection_len, words_for, VertexBits};
use crate::error::{Error, Result};

/// Largest vertex count the bitset representation accepts.
pub const MAX_VERTICES: usize = 512;

/// An immutable simple undirected graph.
///
/// Each vertex keeps a sorted neighbor list and a closed-neighborhood bit
/// row, so `|N[v] ∩ X|` is a popcount over at most `MAX_VERTICES / 64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    closed_rows: Vec<u64>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation).
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
                context: "the graph representation",
            });
        }
        let words = words_for(n);
        let mut closed_rows = vec![0u64; n * words];
        let mut adjacency = vec![Vec::new(); n];
        for v in 0..n {
            closed_rows[v * words + v / 64] |= 1 << (v % 64);
        }
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if closed_rows[u * words + v / 64] >> (v % 64) & 1 == 1 {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            closed_rows[u * words + v / 64] |= 1 << (v % 64);
            closed_rows[v * words + u / 64] |= 1 << (u % 64);
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            words,
            closed_rows,
            adjacency,
            edge_count,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Open neighborhood, ascending.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Closed neighborhood `N[v]` as a bit row.
    #[inline]
    pub fn closed_row(&self, v: usize) -> &[u64] {
        &self.closed_rows[v * self.words..(v + 1) * self.words]
    }

    /// Closed neighborhood members, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let split = self.adjacency[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adjacency[v][..split]);
        out.push(v);
        out.extend_from_slice(&self.adjacency[v][split..]);
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.closed_row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// `|N[v] ∩ set|`.
    #[inline]
    pub fn closed_count(&self, v: usize, set: &VertexBits) -> usize {
        intersection_len(self.closed_row(v), set.words())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let start = self.adjacency[u].partition_point(|&w| w <= u);
            self.adjacency[u][start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count == self.n - 1 && self.is_connected()
    }

    /// Vertices sorted by descending degree, ties by ascending index.
    pub fn by_descending_degree(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        order
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

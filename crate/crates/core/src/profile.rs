//! Degree-derived vertex classes of a graph.

use serde::Serialize;

use crate::graph::Graph;

/// Vertex classes and degree statistics.
///
/// `supports` holds every vertex adjacent to a leaf; `core` is what remains
/// after removing isolated vertices, leaves and supports. These are exactly
/// the vertices that a signed dominating function may label `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub isolated: Vec<usize>,
    pub leaves: Vec<usize>,
    pub supports: Vec<usize>,
    pub core: Vec<usize>,
    /// Minimum degree over `core`; `None` when the core is empty.
    pub core_min_degree: Option<usize>,
    pub odd_vertices: Vec<usize>,
    pub even_vertices: Vec<usize>,
    pub is_connected: bool,
    pub is_tree: bool,
}

impl StructuralProfile {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let is_leaf = |v: usize| g.degree(v) == 1;
        let mut isolated = Vec::new();
        let mut leaves = Vec::new();
        let mut supports = Vec::new();
        let mut core = Vec::new();
        for v in 0..n {
            if g.degree(v) == 0 {
                isolated.push(v);
            } else if is_leaf(v) {
                leaves.push(v);
                // a support can also be a leaf (K2); list it once, as a leaf
                if g.neighbors(v).iter().any(|&u| is_leaf(u)) {
                    supports.push(v);
                }
            } else if g.neighbors(v).iter().any(|&u| is_leaf(u)) {
                supports.push(v);
            } else {
                core.push(v);
            }
        }
        let core_min_degree = core.iter().map(|&v| g.degree(v)).min();
        let (odd_vertices, even_vertices) = (0..n).partition(|&v| g.degree(v) % 2 == 1);
        StructuralProfile {
            n,
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            isolated,
            leaves,
            supports,
            core,
            core_min_degree,
            odd_vertices,
            even_vertices,
            is_connected: g.is_connected(),
            is_tree: g.is_tree(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn support_count(&self) -> usize {
        self.supports.len()
    }

    pub fn odd_count(&self) -> usize {
        self.odd_vertices.len()
    }

    /// Vertices that every signed dominating function labels `+1`.
    pub fn forced_positive(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .isolated
            .iter()
            .chain(&self.leaves)
            .chain(&self.supports)
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

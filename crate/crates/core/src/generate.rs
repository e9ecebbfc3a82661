//! Deterministic graph generators and the labeled-tree enumerator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Attempts `random_connected` makes before giving up.
pub const CONNECT_RETRY_CAP: usize = 1000;

/// Largest order [`enumerate_labeled_trees`] accepts.
pub const TREE_ENUMERATION_MAX_N: usize = 9;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Complete { n: usize },
    Path { n: usize },
    /// Requires `n >= 3`.
    Cycle { n: usize },
    /// `K_{1,n-1}`, centered at vertex 0.
    Star { n: usize },
    /// `legs` paths of `leg_len` vertices each, attached to center 0.
    Spider { legs: usize, leg_len: usize },
    /// Uniform labeled tree via a random Prüfer sequence.
    RandomTree { n: usize },
    /// `G(n, p)` resampled until connected.
    RandomConnected { n: usize, p: f64 },
}

impl GraphKind {
    pub fn order(&self) -> usize {
        match *self {
            GraphKind::Complete { n }
            | GraphKind::Path { n }
            | GraphKind::Cycle { n }
            | GraphKind::Star { n }
            | GraphKind::RandomTree { n }
            | GraphKind::RandomConnected { n, .. } => n,
            GraphKind::Spider { legs, leg_len } => 1 + legs * leg_len,
        }
    }
}

/// Builds a graph; a pure function of `(kind, seed)`. Non-random kinds
/// ignore the seed.
pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    let n = kind.order();
    if n == 0 {
        return Err(Error::InvalidParameter("graphs need at least one vertex".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
            context: "the graph representation",
        });
    }
    match *kind {
        GraphKind::Complete { n } => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphKind::Path { n } => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        GraphKind::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        GraphKind::Star { n } => Graph::from_edges(n, (1..n).map(|v| (0, v))),
        GraphKind::Spider { legs, leg_len } => {
            let mut edges = Vec::with_capacity(legs * leg_len);
            for leg in 0..legs {
                let first = 1 + leg * leg_len;
                edges.push((0, first));
                edges.extend((first + 1..first + leg_len).map(|v| (v - 1, v)));
            }
            Graph::from_edges(n, edges)
        }
        GraphKind::RandomTree { n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..n.saturating_sub(2))
                .map(|_| rng.random_range(0..n))
                .collect();
            prufer_decode(n, &seq)
        }
        GraphKind::RandomConnected { n, p } => {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "edge probability must lie in (0, 1], got {p}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..CONNECT_RETRY_CAP {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.random_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, edges)?;
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(Error::RetryCapExceeded {
                attempts: CONNECT_RETRY_CAP,
            })
        }
    }
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into its tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 {
        return if seq.is_empty() {
            Graph::empty(n)
        } else {
            Err(Error::InvalidParameter("Prüfer sequence too long".into()))
        };
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence for n = {n} must have length {}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidParameter(format!("Prüfer entry {bad} outside 0..{n}")));
    }
    let mut remaining = vec![1usize; n];
    for &x in seq {
        remaining[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // pointer walk: O(n) decoding
    let mut ptr = remaining.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        remaining[x] -= 1;
        if x < ptr && remaining[x] == 1 {
            leaf = x;
        } else {
            ptr += 1;
            while remaining[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges)
}

/// Every labeled tree on `n` vertices, one per Prüfer sequence, with
/// sequences in lexicographic order.
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    if !(2..=TREE_ENUMERATION_MAX_N).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "labeled tree enumeration supports 2 <= n <= {TREE_ENUMERATION_MAX_N}, got {n}"
        )));
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n - 2],
        done: false,
    })
}

/// Number of labeled trees on `n` vertices, `n^(n-2)`.
pub fn labeled_tree_count(n: usize) -> u64 {
    if n < 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// The Prüfer sequence at position `rank` in lexicographic order.
pub fn prufer_sequence_at(n: usize, mut rank: u64) -> Vec<usize> {
    let len = n.saturating_sub(2);
    let mut seq = vec![0; len];
    for slot in seq.iter_mut().rev() {
        *slot = (rank % n as u64) as usize;
        rank /= n as u64;
    }
    seq
}

#[derive(Clone, Debug)]
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = prufer_decode(self.n, &self.seq).expect("sequence is in range");
        // odometer increment, last position fastest
        self.done = true;
        for slot in self.seq.iter_mut().rev() {
            *slot += 1;
            if *slot < self.n {
                self.done = false;
                break;
            }
            *slot = 0;
        }
        Some(tree)
    }
}

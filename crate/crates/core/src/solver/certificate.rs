//! Certificates returned by the solvers and the checks that re-verify them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::VertexBits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A `±1` labeling of the vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedFunction {
    values: Vec<i8>,
}

impl SignedFunction {
    pub fn all_positive(n: usize) -> Self {
        SignedFunction { values: vec![1; n] }
    }

    /// `-1` on `minus`, `+1` elsewhere.
    pub fn from_negative_set(n: usize, minus: impl IntoIterator<Item = usize>) -> Self {
        let mut f = Self::all_positive(n);
        for v in minus {
            f.values[v] = -1;
        }
        f
    }

    pub fn from_values(values: Vec<i8>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|&&x| x != 1 && x != -1) {
            return Err(Error::InvalidCertificate(format!(
                "signed function values must be -1 or +1, got {bad}"
            )));
        }
        Ok(SignedFunction { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, v: usize) -> i8 {
        self.values[v]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn weight(&self) -> i64 {
        self.values.iter().map(|&x| x as i64).sum()
    }

    pub fn positive(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.values[v] > 0).collect()
    }

    pub fn negative(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.values[v] < 0).collect()
    }

    pub fn negative_bits(&self) -> VertexBits {
        VertexBits::from_members(self.len(), self.negative())
    }

    pub fn positive_bits(&self) -> VertexBits {
        VertexBits::from_members(self.len(), self.positive())
    }

    /// `f(N[v])`.
    pub fn closed_sum(&self, g: &Graph, v: usize) -> i64 {
        self.values[v] as i64 + g.neighbors(v).iter().map(|&u| self.values[u] as i64).sum::<i64>()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.len() == g.n() && (0..g.n()).all(|v| self.closed_sum(g, v) >= 1)
    }
}

/// Renders as a string of `+` and `-`, one character per vertex.
impl fmt::Display for SignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.values {
            f.write_str(if x > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedFunction({self})")
    }
}

impl FromStr for SignedFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                other => Err(Error::InvalidCertificate(format!(
                    "unexpected character {other:?} in sign pattern"
                ))),
            })
            .collect::<Result<Vec<i8>>>()
            .map(|values| SignedFunction { values })
    }
}

impl Serialize for SignedFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every vertex `v` with `f(N[v]) < 1`, ascending. Empty iff `f` is a signed
/// dominating function.
pub fn verify_sdf(g: &Graph, f: &SignedFunction) -> Result<Vec<usize>> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    Ok((0..g.n()).filter(|&v| f.closed_sum(g, v) < 1).collect())
}

/// What property a [`VertexSet`] certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "role", content = "k", rename_all = "snake_case")]
pub enum SetRole {
    Dominating,
    TupleDominating(usize),
    LimitedPacking(usize),
    Packing,
}

impl fmt::Display for SetRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetRole::Dominating => f.write_str("dominating"),
            SetRole::TupleDominating(k) => write!(f, "{k}-tuple dominating"),
            SetRole::LimitedPacking(k) => write!(f, "{k}-limited packing"),
            SetRole::Packing => f.write_str("packing"),
        }
    }
}

/// A vertex subset together with the property it claims.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexSet {
    members: Vec<usize>,
    #[serde(flatten)]
    role: SetRole,
}

impl VertexSet {
    /// Members are sorted and deduplicated.
    pub fn new(role: SetRole, members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members, role }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn role(&self) -> SetRole {
        self.role
    }

    pub fn with_role(mut self, role: SetRole) -> Self {
        self.role = role;
        self
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn bits(&self, n: usize) -> VertexBits {
        VertexBits::from_members(n, self.members.iter().copied())
    }

    /// Checks the role's defining condition.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.members.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let bits = self.bits(g.n());
        match self.role {
            SetRole::Dominating => is_tuple_dominating(g, &bits, 1),
            SetRole::TupleDominating(k) => is_tuple_dominating(g, &bits, k),
            SetRole::LimitedPacking(k) => is_limited_packing(g, &bits, k),
            SetRole::Packing => is_packing(g, &self.members),
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `|N[v] ∩ set| >= k` for all `v`.
pub fn is_tuple_dominating(g: &Graph, set: &VertexBits, k: usize) -> bool {
    (0..g.n()).all(|v| g.closed_count(v, set) >= k)
}

/// `|N[v] ∩ set| <= k` for all `v`.
pub fn is_limited_packing(g: &Graph, set: &VertexBits, k: usize) -> bool {
    (0..g.n()).all(|v| g.closed_count(v, set) <= k)
}

/// Pairwise disjoint closed neighborhoods.
pub fn is_packing(g: &Graph, members: &[usize]) -> bool {
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..].iter().all(|&v| {
            u != v
                && crate::bitset::intersection_len(g.closed_row(u), g.closed_row(v)) == 0
        })
    })
}

/// Edge and degree counts of the sign partition `V+ / V-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    /// Edges with both ends labeled `+1`.
    pub positive_edges: usize,
    /// Edges with both ends labeled `-1`.
    pub negative_edges: usize,
    /// Edges crossing the partition.
    pub cut_edges: usize,
    pub odd_positive: Vec<usize>,
    pub odd_negative: Vec<usize>,
    pub even_positive: Vec<usize>,
    pub even_negative: Vec<usize>,
    /// Per vertex: neighbors labeled `+1`.
    pub positive_degree: Vec<usize>,
    /// Per vertex: neighbors labeled `-1`.
    pub negative_degree: Vec<usize>,
}

impl PartitionStats {
    pub fn odd_count(&self) -> usize {
        self.odd_positive.len() + self.odd_negative.len()
    }
}

pub fn partition_stats(g: &Graph, f: &SignedFunction) -> Result<PartitionStats> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    let mut stats = PartitionStats {
        positive_edges: 0,
        negative_edges: 0,
        cut_edges: 0,
        odd_positive: Vec::new(),
        odd_negative: Vec::new(),
        even_positive: Vec::new(),
        even_negative: Vec::new(),
        positive_degree: vec![0; g.n()],
        negative_degree: vec![0; g.n()],
    };
    for (u, v) in g.edges() {
        match (f.value(u) > 0, f.value(v) > 0) {
            (true, true) => stats.positive_edges += 1,
            (false, false) => stats.negative_edges += 1,
            _ => stats.cut_edges += 1,
        }
    }
    for v in 0..g.n() {
        let plus = g.neighbors(v).iter().filter(|&&u| f.value(u) > 0).count();
        stats.positive_degree[v] = plus;
        stats.negative_degree[v] = g.degree(v) - plus;
        let bucket = match (g.degree(v) % 2 == 1, f.value(v) > 0) {
            (true, true) => &mut stats.odd_positive,
            (true, false) => &mut stats.odd_negative,
            (false, true) => &mut stats.even_positive,
            (false, false) => &mut stats.even_negative,
        };
        bucket.push(v);
    }
    Ok(stats)
}

//! Constructive steps behind the packing upper bound and the tuple
//! domination chain.
//!
//! * A `⌊δ/2⌋`-limited packing `B` gives the signed dominating function that
//!   is `-1` exactly on `B`, of weight `n - 2|B|`.
//! * Adding any outside vertex to a k-limited packing gives a
//!   (k+1)-limited packing.
//! * Removing any member of a k-tuple dominating set gives a
//!   (k-1)-tuple dominating set.
//!
//! Where a vertex choice is free, the least index is taken.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{is_limited_packing, is_tuple_dominating, SetRole, SignedFunction, VertexSet};

/// `-1` on `packing`, `+1` elsewhere. Requires `δ >= 2` and `packing` to be a
/// `⌊δ/2⌋`-limited packing; every closed neighborhood then sums to at least
/// `deg(v) + 1 - 2⌊δ/2⌋ >= 1`.
pub fn sdf_from_limited_packing(g: &Graph, packing: &VertexSet) -> Result<SignedFunction> {
    let delta = g.min_degree();
    if delta < 2 {
        return Err(Error::InvalidParameter(format!(
            "building a signed dominating function from a packing needs δ >= 2, got δ = {delta}"
        )));
    }
    let level = delta / 2;
    if packing.members().iter().any(|&v| v >= g.n())
        || !is_limited_packing(g, &packing.bits(g.n()), level)
    {
        return Err(Error::InvalidCertificate(format!(
            "{packing} is not a {level}-limited packing"
        )));
    }
    Ok(SignedFunction::from_negative_set(g.n(), packing.members().iter().copied()))
}

/// Scans vertices in ascending order, keeping each one that leaves every
/// `|N[u] ∩ B| <= k`. The result is inclusion-maximal.
pub fn greedy_limited_packing(g: &Graph, k: usize) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::InvalidParameter("limited packing needs k >= 1".into()));
    }
    let mut load = vec![0usize; g.n()];
    let mut members = Vec::new();
    for v in 0..g.n() {
        let closed = g.closed_neighborhood(v);
        if closed.iter().all(|&u| load[u] < k) {
            for u in closed {
                load[u] += 1;
            }
            members.push(v);
        }
    }
    Ok(VertexSet::new(SetRole::LimitedPacking(k), members))
}

/// `B ∪ {u}` for the least `u ∉ B`, as a (k+1)-limited packing.
pub fn augment_packing(g: &Graph, packing: &VertexSet, k: usize) -> Result<VertexSet> {
    if k == 0 || !valid_members(g, packing) || !is_limited_packing(g, &packing.bits(g.n()), k) {
        return Err(Error::InvalidCertificate(format!(
            "{packing} is not a {k}-limited packing"
        )));
    }
    let u = (0..g.n())
        .find(|&v| !packing.contains(v))
        .ok_or_else(|| Error::InvalidParameter("cannot augment a packing that is all of V".into()))?;
    let members = packing.members().iter().copied().chain([u]);
    Ok(VertexSet::new(SetRole::LimitedPacking(k + 1), members))
}

/// `D ∖ {u}` for the least `u ∈ D`, as a (k-1)-tuple dominating set.
pub fn shrink_tuple_dominating(g: &Graph, dominating: &VertexSet, k: usize) -> Result<VertexSet> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("shrinking needs k >= 2, got {k}")));
    }
    if dominating.is_empty()
        || !valid_members(g, dominating)
        || !is_tuple_dominating(g, &dominating.bits(g.n()), k)
    {
        return Err(Error::InvalidCertificate(format!(
            "{dominating} is not a {k}-tuple dominating set"
        )));
    }
    let members = dominating.members()[1..].iter().copied();
    Ok(VertexSet::new(SetRole::TupleDominating(k - 1), members))
}

fn valid_members(g: &Graph, set: &VertexSet) -> bool {
    set.members().iter().all(|&v| v < g.n())
}

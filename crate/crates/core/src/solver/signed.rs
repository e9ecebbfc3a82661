use super::search::{CappedSearch, Least};
use super::SignedFunction;
use crate::graph::Graph;
use crate::profile::StructuralProfile;

/// Largest `-1` class a vertex's closed neighborhood tolerates:
/// `f(N[v]) = deg(v) + 1 - 2|N[v] ∩ V-| >= 1`.
fn negative_caps(g: &Graph) -> Vec<usize> {
    (0..g.n()).map(|v| g.degree(v) / 2).collect()
}

/// Tries all `2^n` labelings. `true` bits of a mask are `-1` vertices.
pub(super) fn oracle(g: &Graph) -> SignedFunction {
    let n = g.n();
    assert!(n < 64, "oracle masks are single words");
    let rows: Vec<u64> = (0..n).map(|v| g.closed_row(v)[0]).collect();
    let caps = negative_caps(g);
    let mut best: Option<u64> = None;
    for mask in 0..1u64 << n {
        let valid = rows
            .iter()
            .zip(&caps)
            .all(|(&row, &cap)| (row & mask).count_ones() as usize <= cap);
        if !valid {
            continue;
        }
        best = match best {
            None => Some(mask),
            Some(cur) if better(mask, cur) => Some(mask),
            keep => keep,
        };
    }
    let best = best.expect("the all +1 labeling is always valid");
    SignedFunction::from_negative_set(n, (0..n).filter(|&v| best >> v & 1 == 1))
}

/// More `-1` entries wins; ties go to the labeling that is `-1` at the
/// first index where the two differ.
fn better(a: u64, b: u64) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            let diff = a ^ b;
            diff != 0 && a & diff & diff.wrapping_neg() != 0
        }
    }
}

pub(super) fn branch_and_bound(g: &Graph) -> SignedFunction {
    let profile = StructuralProfile::of(g);
    if profile.core.is_empty() {
        return SignedFunction::all_positive(g.n());
    }
    // isolated vertices, leaves and supports are +1 in every valid labeling
    let mut allowed = vec![false; g.n()];
    for &v in &profile.core {
        allowed[v] = true;
    }
    let mut search = CappedSearch::new(g, negative_caps(g), allowed);
    let mut order = profile.core.clone();
    order.sort_by_key(|&v| g.degree(v));
    let seed = search.greedy(&order).len();
    let best = search.max_size(&order, seed);
    let minus = search
        .first_of_size(best, Least::Members)
        .expect("a set of the optimal size exists");
    SignedFunction::from_negative_set(g.n(), minus)
}

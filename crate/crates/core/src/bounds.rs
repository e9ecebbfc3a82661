//! Closed-form bounds on the signed domination number `γs`.
//!
//! Every formula is evaluated in exact integer and rational arithmetic.
//! Because `γs = n - 2|V-|`, the true value always has the parity of `n`;
//! [`parity_tighten`] uses that to round a raw bound to the nearest
//! achievable integer. The raw value is kept alongside the tightened one.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::profile::StructuralProfile;

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// Identifiers of the bounds, as used in reports and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundName {
    /// `n - 2⌊(2ρ + δ - 2)/2⌋`, for `δ >= 2`.
    PackingUpper,
    /// In terms of `δ*`, `Δ`, `n` and the leaf count.
    DegreeLeavesLower,
    /// As above, also counting odd-degree vertices.
    DegreeParityLower,
    /// `-n + 2 max{⌈(Δ+2)/2⌉, ⌈(δ+2γ)/2⌉}`.
    DominationLower,
    /// Trees: in terms of `δ*`, leaves and supports.
    TreeCoreLower,
    /// Trees: `(n + 4 + 2(ℓ - s)) / 3`.
    TreeSupportLower,
    /// Trees: `(n + 4) / 3`.
    TreeOrderLower,
}

impl BoundName {
    pub const ALL: [BoundName; 7] = [
        BoundName::PackingUpper,
        BoundName::DegreeLeavesLower,
        BoundName::DegreeParityLower,
        BoundName::DominationLower,
        BoundName::TreeCoreLower,
        BoundName::TreeSupportLower,
        BoundName::TreeOrderLower,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::PackingUpper => "packing_upper",
            BoundName::DegreeLeavesLower => "degree_leaves_lower",
            BoundName::DegreeParityLower => "degree_parity_lower",
            BoundName::DominationLower => "domination_lower",
            BoundName::TreeCoreLower => "tree_core_lower",
            BoundName::TreeSupportLower => "tree_support_lower",
            BoundName::TreeOrderLower => "tree_order_lower",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            BoundName::PackingUpper => BoundKind::Upper,
            _ => BoundKind::Lower,
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = BoundName::ALL.iter().map(|b| b.as_str()).collect();
                Error::InvalidParameter(format!("unknown bound {s:?}; known: {}", known.join(", ")))
            })
    }
}

impl Serialize for BoundName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

fn serialize_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

/// One evaluated bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: BoundName,
    pub kind: BoundKind,
    /// Exact value of the formula; `None` when not applicable.
    #[serde(serialize_with = "serialize_rational")]
    pub raw: Option<Rational>,
    /// `raw` rounded to an integer with the parity of `n`.
    pub tightened: Option<i64>,
    pub applicable: bool,
    /// Why the bound does not apply.
    pub reason: Option<String>,
    pub note: Option<String>,
}

impl Bound {
    fn value(name: BoundName, raw: Rational, n: usize) -> Self {
        Bound {
            name,
            kind: name.kind(),
            raw: Some(raw),
            tightened: Some(parity_tighten(raw, n, name.kind())),
            applicable: true,
            reason: None,
            note: None,
        }
    }

    pub fn not_applicable(name: BoundName, reason: impl Into<String>) -> Self {
        Bound {
            name,
            kind: name.kind(),
            raw: None,
            tightened: None,
            applicable: false,
            reason: Some(reason.into()),
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Whether `value` lies on the permitted side; `None` if not applicable.
    pub fn admits(&self, value: i64) -> Option<bool> {
        let tightened = self.tightened?;
        Some(match self.kind {
            BoundKind::Lower => tightened <= value,
            BoundKind::Upper => value <= tightened,
        })
    }

    /// Distance from `value` to the tightened bound.
    pub fn gap(&self, value: i64) -> Option<i64> {
        self.tightened.map(|t| (value - t).abs())
    }
}

/// Least (lower) or greatest (upper) integer on the admissible side of `raw`
/// that is congruent to `n` mod 2.
pub fn parity_tighten(raw: Rational, n: usize, kind: BoundKind) -> i64 {
    let parity = (n % 2) as i64;
    match kind {
        BoundKind::Lower => {
            let c = raw.ceil().to_integer();
            if c.rem_euclid(2) == parity {
                c
            } else {
                c + 1
            }
        }
        BoundKind::Upper => {
            let f = raw.floor().to_integer();
            if f.rem_euclid(2) == parity {
                f
            } else {
                f - 1
            }
        }
    }
}

fn int(x: usize) -> i64 {
    x as i64
}

/// `n - 2⌊(2ρ + δ - 2)/2⌋`; applies when `δ >= 2`.
pub fn packing_upper_bound(profile: &StructuralProfile, packing_number: usize) -> Bound {
    let name = BoundName::PackingUpper;
    let delta = profile.min_degree;
    if delta < 2 {
        return Bound::not_applicable(name, "δ<2");
    }
    let raw = int(profile.n) - 2 * ((2 * int(packing_number) + int(delta) - 2).div_euclid(2));
    Bound::value(name, Rational::from_integer(raw), profile.n)
}

/// `((⌈δ*/2⌉ - ⌊Δ/2⌋ + 1) n + 2⌊Δ/2⌋ ℓ) / (⌈δ*/2⌉ + ⌊Δ/2⌋ + 1)`; applies
/// when the core is nonempty.
pub fn degree_leaves_lower_bound(profile: &StructuralProfile) -> Bound {
    let name = BoundName::DegreeLeavesLower;
    let Some(core_delta) = profile.core_min_degree else {
        return Bound::not_applicable(name, "core empty");
    };
    let half_core = int(core_delta.div_ceil(2));
    let half_max = int(profile.max_degree / 2);
    let n = int(profile.n);
    let numer = (half_core - half_max + 1) * n + 2 * half_max * int(profile.leaf_count());
    let denom = half_core + half_max + 1;
    Bound::value(name, Rational::new(numer, denom), profile.n)
}

/// `((⌈3δ*/2⌉ - ⌊3Δ/2⌋ + 3) n + 2(⌊Δ/2⌋ ℓ + |V_o|)) / (⌈3δ*/2⌉ + ⌊3Δ/2⌋ + 3)`;
/// applies when the core is nonempty.
pub fn degree_parity_lower_bound(profile: &StructuralProfile) -> Bound {
    let name = BoundName::DegreeParityLower;
    let Some(core_delta) = profile.core_min_degree else {
        return Bound::not_applicable(name, "core empty");
    };
    let core3 = int((3 * core_delta).div_ceil(2));
    let max3 = int(3 * profile.max_degree / 2);
    let half_max = int(profile.max_degree / 2);
    let n = int(profile.n);
    let numer = (core3 - max3 + 3) * n
        + 2 * (half_max * int(profile.leaf_count()) + int(profile.odd_count()));
    let denom = core3 + max3 + 3;
    Bound::value(name, Rational::new(numer, denom), profile.n)
}

/// `-n + 2 max{⌈(Δ+2)/2⌉, ⌈(δ+2γ)/2⌉}` for the exact domination number `γ`.
pub fn domination_lower_bound(profile: &StructuralProfile, domination_number: usize) -> Bound {
    let by_max_degree = (profile.max_degree + 2).div_ceil(2);
    let by_domination = (profile.min_degree + 2 * domination_number).div_ceil(2);
    let raw = -int(profile.n) + 2 * int(by_max_degree.max(by_domination));
    Bound::value(BoundName::DominationLower, Rational::from_integer(raw), profile.n)
}

/// The three tree bounds, in the order core, support, order.
///
/// When the core is empty the core bound is reported as the exact value `n`.
pub fn tree_lower_bounds(profile: &StructuralProfile) -> Result<[Bound; 3]> {
    if !profile.is_tree {
        return Err(Error::InvalidParameter("tree bounds need a tree".into()));
    }
    if profile.n < 2 {
        return Err(Error::InvalidParameter("tree bounds need n >= 2".into()));
    }
    let n = int(profile.n);
    let excess = int(profile.leaf_count()) - int(profile.support_count());
    let core = match profile.core_min_degree {
        Some(core_delta) => {
            let half = int(core_delta.div_ceil(2));
            let raw = Rational::new((2 * half - 1) * n + 2 * (excess + 2), 2 * half + 1);
            Bound::value(BoundName::TreeCoreLower, raw, profile.n)
        }
        None => Bound::value(BoundName::TreeCoreLower, Rational::from_integer(n), profile.n)
            .with_note("core empty: every vertex is +1, exact value n"),
    };
    let support = Bound::value(
        BoundName::TreeSupportLower,
        Rational::new(n + 4 + 2 * excess, 3),
        profile.n,
    );
    let order = Bound::value(BoundName::TreeOrderLower, Rational::new(n + 4, 3), profile.n);
    Ok([core, support, order])
}

/// All bounds in [`BoundName::ALL`] order. Disconnected graphs get every
/// bound marked not applicable.
pub fn evaluate_all(
    profile: &StructuralProfile,
    packing_number: usize,
    domination_number: usize,
) -> Vec<Bound> {
    if !profile.is_connected {
        return BoundName::ALL
            .into_iter()
            .map(|name| Bound::not_applicable(name, "disconnected"))
            .collect();
    }
    let mut out = vec![
        packing_upper_bound(profile, packing_number),
        degree_leaves_lower_bound(profile),
        degree_parity_lower_bound(profile),
        domination_lower_bound(profile, domination_number),
    ];
    match tree_lower_bounds(profile) {
        Ok(tree) => out.extend(tree),
        Err(_) => {
            let reason = if profile.is_tree { "n<2" } else { "not a tree" };
            out.extend(
                [BoundName::TreeCoreLower, BoundName::TreeSupportLower, BoundName::TreeOrderLower]
                    .map(|name| Bound::not_applicable(name, reason)),
            );
        }
    }
    out
}

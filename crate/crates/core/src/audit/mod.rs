//! Per-graph and corpus-level bound audits.
//!
//! [`audit_graph`] solves every exact parameter of one graph, evaluates all
//! bounds against the exact `γs`, and re-checks a list of structural
//! invariants on the optimal signed dominating function. A bound that fails
//! to bracket `γs`, or an invariant that fails, is a violation: since each
//! of them is a proven statement, a violation points at a bug.

mod corpus;
mod report;

use std::fmt;

use serde::Serialize;

pub use corpus::{
    audit_corpus, derive_seed, hunt, BoundSummary, CheckSummary, CorpusEntry, CorpusKind,
    CorpusSpec, CorpusSummary, Skip,
};
pub use report::{CsvReportWriter, JsonReportWriter};

use crate::bounds::{evaluate_all, Bound, BoundName};
use crate::codec::to_graph6;
use crate::construct::{augment_packing, sdf_from_limited_packing};
use crate::error::Result;
use crate::graph::Graph;
use crate::profile::StructuralProfile;
use crate::solver::{
    is_limited_packing, is_tuple_dominating, partition_stats, verify_sdf, SetRole, SignedFunction,
    Solver, VertexSet,
};

/// Chains of limited packing and tuple domination numbers are only checked
/// up to this order by default.
pub const DEFAULT_CHAIN_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub solver: Solver,
    pub chain_max_n: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            solver: Solver::default(),
            chain_max_n: DEFAULT_CHAIN_MAX_N,
        }
    }
}

/// Names of the invariant checks, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    /// The optimal witness is a valid signed dominating function.
    WitnessValid,
    /// Isolated vertices, leaves and supports are all labeled `+1`.
    ForcedPositive,
    /// `(⌈δ*/2⌉+1)|V-| <= |[V+,V-]| <= ⌊Δ/2⌋ |V+ ∖ L|`.
    CutSandwich,
    /// `|V_o| + 2|V-| <= 2|E+| - 2|E-|`.
    OddDegreeBalance,
    /// `V-` is a `⌊Δ/2⌋`-limited packing.
    NegativeLimitedPacking,
    /// `V+` is a `(⌈δ/2⌉+1)`-tuple dominating set.
    PositiveTupleDominating,
    /// A maximum `⌊δ/2⌋`-limited packing yields a valid labeling of weight
    /// `n - 2L` that is at least `γs` and at most the packing upper bound.
    PackingSdfWeight,
    /// Augmenting a maximum packing `⌊δ/2⌋ - 1` times stays valid, so
    /// `L_{⌊δ/2⌋} >= ρ + ⌊δ/2⌋ - 1`.
    PackingLevelGain,
    /// `L_{k+1} >= L_k + 1` while `L_k < n`, for `k = 1..=⌊Δ/2⌋`.
    LimitedPackingChain,
    /// `γ×(k+1) >= γ×k + 1` for `k = 1..=δ`.
    TupleDominationChain,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::WitnessValid,
        CheckName::ForcedPositive,
        CheckName::CutSandwich,
        CheckName::OddDegreeBalance,
        CheckName::NegativeLimitedPacking,
        CheckName::PositiveTupleDominating,
        CheckName::PackingSdfWeight,
        CheckName::PackingLevelGain,
        CheckName::LimitedPackingChain,
        CheckName::TupleDominationChain,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::WitnessValid => "witness_valid",
            CheckName::ForcedPositive => "forced_positive",
            CheckName::CutSandwich => "cut_sandwich",
            CheckName::OddDegreeBalance => "odd_degree_balance",
            CheckName::NegativeLimitedPacking => "negative_limited_packing",
            CheckName::PositiveTupleDominating => "positive_tuple_dominating",
            CheckName::PackingSdfWeight => "packing_sdf_weight",
            CheckName::PackingLevelGain => "packing_level_gain",
            CheckName::LimitedPackingChain => "limited_packing_chain",
            CheckName::TupleDominationChain => "tuple_domination_chain",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CheckName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    #[serde(rename = "NA")]
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "NA",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: CheckName,
    pub status: CheckStatus,
    pub detail: Option<String>,
}

impl InvariantCheck {
    fn new(name: CheckName, ok: bool, detail: String) -> Self {
        InvariantCheck {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: Some(detail),
        }
    }

    fn skipped(name: CheckName, reason: &str) -> Self {
        InvariantCheck {
            name,
            status: CheckStatus::NotApplicable,
            detail: Some(reason.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileSummary {
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub delta_star: Option<usize>,
    pub leaves: usize,
    pub supports: usize,
    pub odd_vertices: usize,
    pub connected: bool,
    pub tree: bool,
}

/// A parameter value at a given level `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Leveled {
    pub k: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactValues {
    pub gamma_s: i64,
    pub gamma: usize,
    pub rho: usize,
    /// `L_k` at `k = ⌊δ/2⌋`, present when `δ >= 2`.
    pub limited_packing: Option<Leveled>,
    /// `γ×k` at `k = ⌈δ/2⌉ + 1`.
    pub tuple_domination: Leveled,
}

/// A bound together with how it compares to the exact `γs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundOutcome {
    #[serde(flatten)]
    pub bound: Bound,
    pub satisfied: Option<bool>,
    pub gap: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    /// Absent for graphs beyond the short graph6 range.
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub profile: ProfileSummary,
    pub exact: ExactValues,
    pub witness: SignedFunction,
    pub bounds: Vec<BoundOutcome>,
    pub invariant_checks: Vec<InvariantCheck>,
    pub sharp: Vec<BoundName>,
}

impl BoundReport {
    pub fn bound(&self, name: BoundName) -> Option<&BoundOutcome> {
        self.bounds.iter().find(|b| b.bound.name == name)
    }

    pub fn check(&self, name: CheckName) -> Option<&InvariantCheck> {
        self.invariant_checks.iter().find(|c| c.name == name)
    }

    /// Human-readable descriptions of every failed bound or check.
    pub fn violations(&self) -> Vec<String> {
        let bounds = self.bounds.iter().filter(|b| b.satisfied == Some(false)).map(|b| {
            format!(
                "{} {} = {} does not bracket gamma_s = {}",
                b.bound.name,
                match b.bound.kind {
                    crate::bounds::BoundKind::Lower => "lower bound",
                    crate::bounds::BoundKind::Upper => "upper bound",
                },
                b.bound.tightened.unwrap_or_default(),
                self.exact.gamma_s
            )
        });
        let checks = self
            .invariant_checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| format!("{} failed: {}", c.name, c.detail.as_deref().unwrap_or("")));
        bounds.chain(checks).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Audits one graph with the default configuration; the id is its graph6
/// string when available.
pub fn audit_graph(g: &Graph) -> Result<BoundReport> {
    let id = to_graph6(g).unwrap_or_else(|_| format!("n{}-m{}", g.n(), g.m()));
    audit_graph_with(g, &id, &AuditConfig::default())
}

pub fn audit_graph_with(g: &Graph, graph_id: &str, config: &AuditConfig) -> Result<BoundReport> {
    let solver = &config.solver;
    let profile = StructuralProfile::of(g);
    let (gamma_s, witness) = solver.signed_domination(g)?;
    let (gamma, _) = solver.domination_number(g)?;
    let (rho, rho_set) = solver.packing_number(g)?;
    let half_min = profile.min_degree / 2;
    let limited = if profile.min_degree >= 2 {
        Some(solver.limited_packing_number(g, half_min)?)
    } else {
        None
    };
    let tuple_k = profile.min_degree.div_ceil(2) + 1;
    let (tuple_value, _) = solver.tuple_domination_number(g, tuple_k)?;

    let bounds: Vec<BoundOutcome> = evaluate_all(&profile, rho, gamma)
        .into_iter()
        .map(|bound| BoundOutcome {
            satisfied: bound.admits(gamma_s),
            gap: bound.gap(gamma_s),
            bound,
        })
        .collect();
    let sharp = bounds
        .iter()
        .filter(|b| b.gap == Some(0))
        .map(|b| b.bound.name)
        .collect();

    let mut checks = witness_checks(g, &profile, &witness);
    checks.push(packing_sdf_check(g, gamma_s, rho, limited.as_ref()));
    checks.push(packing_gain_check(g, &rho_set, limited.as_ref().map(|(l, _)| *l)));
    checks.push(limited_packing_chain(g, &profile, solver, config.chain_max_n)?);
    checks.push(tuple_domination_chain(g, &profile, solver, config.chain_max_n)?);

    Ok(BoundReport {
        graph_id: graph_id.to_string(),
        graph6: to_graph6(g).ok(),
        n: g.n(),
        m: g.m(),
        profile: ProfileSummary {
            delta: profile.min_degree,
            max_degree: profile.max_degree,
            delta_star: profile.core_min_degree,
            leaves: profile.leaf_count(),
            supports: profile.support_count(),
            odd_vertices: profile.odd_count(),
            connected: profile.is_connected,
            tree: profile.is_tree,
        },
        exact: ExactValues {
            gamma_s,
            gamma,
            rho,
            limited_packing: limited.map(|(value, _)| Leveled { k: half_min, value }),
            tuple_domination: Leveled {
                k: tuple_k,
                value: tuple_value,
            },
        },
        witness,
        bounds,
        invariant_checks: checks,
        sharp,
    })
}

/// Checks that only need the graph and a signed dominating function. Valid
/// for every SDF, not just optimal ones.
pub fn witness_checks(
    g: &Graph,
    profile: &StructuralProfile,
    f: &SignedFunction,
) -> Vec<InvariantCheck> {
    let mut out = Vec::with_capacity(6);
    let violators = verify_sdf(g, f).unwrap_or_else(|_| (0..g.n()).collect());
    out.push(InvariantCheck::new(
        CheckName::WitnessValid,
        violators.is_empty(),
        format!("weight {}, violating vertices {violators:?}", f.weight()),
    ));
    if !violators.is_empty() {
        // the remaining checks presuppose validity
        return out;
    }

    let forced_bad: Vec<usize> = profile
        .forced_positive()
        .into_iter()
        .filter(|&v| f.value(v) < 0)
        .collect();
    out.push(InvariantCheck::new(
        CheckName::ForcedPositive,
        forced_bad.is_empty(),
        format!("negative forced vertices {forced_bad:?}"),
    ));

    let stats = partition_stats(g, f).expect("lengths checked above");
    let negative = f.negative();
    let positive = f.positive();

    if !profile.is_connected || g.n() < 2 {
        out.push(InvariantCheck::skipped(CheckName::CutSandwich, "needs a connected graph, n>=2"));
    } else if negative.is_empty() {
        out.push(InvariantCheck::new(CheckName::CutSandwich, stats.cut_edges == 0, "no negative vertices".into()));
    } else {
        let check = match profile.core_min_degree {
            None => InvariantCheck::new(
                CheckName::CutSandwich,
                false,
                "negative vertices present but the core is empty".into(),
            ),
            Some(core_delta) => {
                let low = (core_delta.div_ceil(2) + 1) * negative.len();
                let non_leaf_positive = positive.iter().filter(|&&v| g.degree(v) != 1).count();
                let high = profile.max_degree / 2 * non_leaf_positive;
                InvariantCheck::new(
                    CheckName::CutSandwich,
                    low <= stats.cut_edges && stats.cut_edges <= high,
                    format!("{low} <= cut {} <= {high}", stats.cut_edges),
                )
            }
        };
        out.push(check);
    }

    let lhs = (profile.odd_count() + 2 * negative.len()) as i64;
    let rhs = 2 * stats.positive_edges as i64 - 2 * stats.negative_edges as i64;
    out.push(InvariantCheck::new(
        CheckName::OddDegreeBalance,
        lhs <= rhs,
        format!("{lhs} <= {rhs}"),
    ));

    let limit = profile.max_degree / 2;
    out.push(InvariantCheck::new(
        CheckName::NegativeLimitedPacking,
        is_limited_packing(g, &f.negative_bits(), limit),
        format!("k = {limit}"),
    ));

    let level = profile.min_degree.div_ceil(2) + 1;
    out.push(InvariantCheck::new(
        CheckName::PositiveTupleDominating,
        is_tuple_dominating(g, &f.positive_bits(), level),
        format!("k = {level}"),
    ));
    out
}

fn packing_sdf_check(
    g: &Graph,
    gamma_s: i64,
    rho: usize,
    limited: Option<&(usize, VertexSet)>,
) -> InvariantCheck {
    let name = CheckName::PackingSdfWeight;
    let Some((value, packing)) = limited else {
        return InvariantCheck::skipped(name, "δ<2");
    };
    let f = match sdf_from_limited_packing(g, packing) {
        Ok(f) => f,
        Err(e) => return InvariantCheck::new(name, false, e.to_string()),
    };
    let n = g.n() as i64;
    let delta = g.min_degree() as i64;
    let weight = f.weight();
    let closed_form = n - 2 * ((2 * rho as i64 + delta - 2) / 2);
    let ok = f.is_valid(g)
        && weight == n - 2 * *value as i64
        && gamma_s <= weight
        && weight <= closed_form;
    InvariantCheck::new(
        name,
        ok,
        format!("gamma_s {gamma_s} <= weight {weight} = n - 2L <= {closed_form}"),
    )
}

fn packing_gain_check(g: &Graph, max_packing: &VertexSet, limited: Option<usize>) -> InvariantCheck {
    let name = CheckName::PackingLevelGain;
    let Some(target) = limited else {
        return InvariantCheck::skipped(name, "δ<2");
    };
    let half = g.min_degree() / 2;
    let mut set = max_packing.clone().with_role(SetRole::LimitedPacking(1));
    for k in 1..half {
        match augment_packing(g, &set, k) {
            Ok(next) if next.is_valid(g) => set = next,
            Ok(next) => return InvariantCheck::new(name, false, format!("{next} invalid at level {}", k + 1)),
            Err(e) => return InvariantCheck::new(name, false, e.to_string()),
        }
    }
    let rho = max_packing.len();
    InvariantCheck::new(
        name,
        set.len() == rho + half - 1 && set.len() <= target,
        format!("L = {target} >= rho + {} = {}", half - 1, set.len()),
    )
}

fn limited_packing_chain(
    g: &Graph,
    profile: &StructuralProfile,
    solver: &Solver,
    max_n: usize,
) -> Result<InvariantCheck> {
    let name = CheckName::LimitedPackingChain;
    if g.n() > max_n {
        return Ok(InvariantCheck::skipped(name, "n above chain limit"));
    }
    let top = profile.max_degree / 2;
    let mut values = Vec::with_capacity(top + 1);
    for k in 1..=top + 1 {
        values.push(solver.limited_packing_number(g, k)?.0);
    }
    let ok = values
        .windows(2)
        .all(|w| w[0] >= g.n() || w[1] > w[0]);
    Ok(InvariantCheck::new(name, ok, format!("L_1.. = {values:?}")))
}

fn tuple_domination_chain(
    g: &Graph,
    profile: &StructuralProfile,
    solver: &Solver,
    max_n: usize,
) -> Result<InvariantCheck> {
    let name = CheckName::TupleDominationChain;
    if g.n() > max_n {
        return Ok(InvariantCheck::skipped(name, "n above chain limit"));
    }
    let mut values = Vec::with_capacity(profile.min_degree + 1);
    for k in 1..=profile.min_degree + 1 {
        values.push(solver.tuple_domination_number(g, k)?.0);
    }
    let ok = values.windows(2).all(|w| w[1] > w[0]);
    Ok(InvariantCheck::new(name, ok, format!("gamma_x1.. = {values:?}")))
}

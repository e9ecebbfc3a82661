use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{audit_graph_with, AuditConfig, BoundReport, CheckName, CheckStatus};
use crate::bounds::BoundName;
use crate::error::{Error, Result};
use crate::generate::{
    generate, labeled_tree_count, prufer_decode, prufer_sequence_at, GraphKind,
    TREE_ENUMERATION_MAX_N,
};
use crate::graph::{Graph, MAX_VERTICES};

/// Entries audited in parallel before their reports are merged in order.
const BATCH: usize = 1024;

/// One family of graphs in a corpus; orders range over `n_min..=n_max`.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusKind {
    Complete { n_min: usize, n_max: usize },
    Paths { n_min: usize, n_max: usize },
    Cycles { n_min: usize, n_max: usize },
    Stars { n_min: usize, n_max: usize },
    /// Every labeled tree, by Prüfer sequence.
    TreesExhaustive { n_min: usize, n_max: usize },
    /// `count` uniform random trees per order.
    RandomTrees { n_min: usize, n_max: usize, count: usize },
    /// `count` connected `G(n, p)` samples per order.
    RandomConnected { n_min: usize, n_max: usize, p: f64, count: usize },
}

impl CorpusKind {
    fn range(&self) -> (usize, usize) {
        match *self {
            CorpusKind::Complete { n_min, n_max }
            | CorpusKind::Paths { n_min, n_max }
            | CorpusKind::Cycles { n_min, n_max }
            | CorpusKind::Stars { n_min, n_max }
            | CorpusKind::TreesExhaustive { n_min, n_max }
            | CorpusKind::RandomTrees { n_min, n_max, .. }
            | CorpusKind::RandomConnected { n_min, n_max, .. } => (n_min, n_max),
        }
    }

    fn label(&self) -> &'static str {
        match self {
            CorpusKind::Complete { .. } => "complete",
            CorpusKind::Paths { .. } => "path",
            CorpusKind::Cycles { .. } => "cycle",
            CorpusKind::Stars { .. } => "star",
            CorpusKind::TreesExhaustive { .. } => "tree",
            CorpusKind::RandomTrees { .. } => "random-tree",
            CorpusKind::RandomConnected { .. } => "random-connected",
        }
    }

    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.range();
        let min_order = match self {
            CorpusKind::Cycles { .. } => 3,
            CorpusKind::TreesExhaustive { .. } => 2,
            _ => 1,
        };
        if lo < min_order || lo > hi || hi > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "{} corpus needs {min_order} <= n_min <= n_max <= {MAX_VERTICES}, got {lo}..={hi}",
                self.label()
            )));
        }
        match *self {
            CorpusKind::TreesExhaustive { n_max, .. } if n_max > TREE_ENUMERATION_MAX_N => {
                Err(Error::InvalidParameter(format!(
                    "exhaustive trees are limited to n <= {TREE_ENUMERATION_MAX_N}"
                )))
            }
            CorpusKind::RandomTrees { count: 0, .. } | CorpusKind::RandomConnected { count: 0, .. } => {
                Err(Error::InvalidParameter("sample count must be at least 1".into()))
            }
            CorpusKind::RandomConnected { p, .. } if !(p > 0.0 && p <= 1.0) => Err(
                Error::InvalidParameter(format!("edge probability must lie in (0, 1], got {p}")),
            ),
            _ => Ok(()),
        }
    }
}

/// A reproducible list of graphs plus how to audit them.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub kinds: Vec<CorpusKind>,
    pub seed: u64,
    pub audit: AuditConfig,
    /// Worker threads; 0 picks the machine default.
    pub jobs: usize,
}

impl CorpusSpec {
    pub fn new(kinds: Vec<CorpusKind>, seed: u64) -> Self {
        CorpusSpec {
            kinds,
            seed,
            audit: AuditConfig::default(),
            jobs: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.kinds.is_empty() {
            return Err(Error::InvalidParameter("corpus has no graph families".into()));
        }
        self.kinds.iter().try_for_each(CorpusKind::validate)
    }

    /// Corpus members in index order, generated lazily.
    pub fn entries(&self) -> impl Iterator<Item = CorpusEntry> + '_ {
        let seed = self.seed;
        self.kinds
            .iter()
            .flat_map(|kind| {
                let (lo, hi) = kind.range();
                (lo..=hi).flat_map(move |n| {
                    let (count, recipe): (u64, Box<dyn Fn(u64) -> Recipe>) = match *kind {
                        CorpusKind::Complete { .. } => (1, Box::new(move |_| Recipe::Fixed(GraphKind::Complete { n }))),
                        CorpusKind::Paths { .. } => (1, Box::new(move |_| Recipe::Fixed(GraphKind::Path { n }))),
                        CorpusKind::Cycles { .. } => (1, Box::new(move |_| Recipe::Fixed(GraphKind::Cycle { n }))),
                        CorpusKind::Stars { .. } => (1, Box::new(move |_| Recipe::Fixed(GraphKind::Star { n }))),
                        CorpusKind::TreesExhaustive { .. } => {
                            (labeled_tree_count(n), Box::new(move |rank| Recipe::Prufer { n, rank }))
                        }
                        CorpusKind::RandomTrees { count, .. } => {
                            (count as u64, Box::new(move |_| Recipe::Seeded(GraphKind::RandomTree { n })))
                        }
                        CorpusKind::RandomConnected { p, count, .. } => (
                            count as u64,
                            Box::new(move |_| Recipe::Seeded(GraphKind::RandomConnected { n, p })),
                        ),
                    };
                    let label = kind.label();
                    (0..count).map(move |i| {
                        let id = if count == 1 {
                            format!("{label}-n{n}")
                        } else {
                            format!("{label}-n{n}-{i}")
                        };
                        (id, recipe(i))
                    })
                })
            })
            .enumerate()
            .map(move |(index, (id, recipe))| CorpusEntry {
                index,
                id,
                seed: derive_seed(seed, index as u64),
                recipe,
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Recipe {
    Fixed(GraphKind),
    Seeded(GraphKind),
    Prufer { n: usize, rank: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub index: usize,
    pub id: String,
    /// Seed for this entry, a pure function of the master seed and `index`.
    pub seed: u64,
    recipe: Recipe,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<Graph> {
        match &self.recipe {
            Recipe::Fixed(kind) => generate(kind, 0),
            Recipe::Seeded(kind) => generate(kind, self.seed),
            Recipe::Prufer { n, rank } => prufer_decode(*n, &prufer_sequence_at(*n, *rank)),
        }
    }
}

/// SplitMix64 finalizer over the master seed and the entry index.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    mix(master ^ mix(index))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub graph_id: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundSummary {
    pub name: BoundName,
    pub applicable: usize,
    pub sharp: usize,
    pub max_gap: Option<i64>,
    pub mean_gap: Option<f64>,
    #[serde(skip)]
    total_gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: CheckName,
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "NA")]
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    pub violations: usize,
    pub skipped: Vec<Skip>,
    pub bounds: Vec<BoundSummary>,
    pub checks: Vec<CheckSummary>,
}

impl CorpusSummary {
    fn new() -> Self {
        CorpusSummary {
            graphs: 0,
            violations: 0,
            skipped: Vec::new(),
            bounds: BoundName::ALL
                .into_iter()
                .map(|name| BoundSummary {
                    name,
                    applicable: 0,
                    sharp: 0,
                    max_gap: None,
                    mean_gap: None,
                    total_gap: 0,
                })
                .collect(),
            checks: CheckName::ALL
                .into_iter()
                .map(|name| CheckSummary {
                    name,
                    pass: 0,
                    fail: 0,
                    not_applicable: 0,
                })
                .collect(),
        }
    }

    fn record(&mut self, report: &BoundReport) {
        self.graphs += 1;
        for outcome in &report.bounds {
            let Some(gap) = outcome.gap else { continue };
            let entry = self
                .bounds
                .iter_mut()
                .find(|b| b.name == outcome.bound.name)
                .expect("all bound names are tracked");
            entry.applicable += 1;
            entry.sharp += (gap == 0) as usize;
            entry.total_gap += gap;
            entry.max_gap = Some(entry.max_gap.map_or(gap, |m| m.max(gap)));
            entry.mean_gap = Some(entry.total_gap as f64 / entry.applicable as f64);
        }
        for check in &report.invariant_checks {
            let entry = self
                .checks
                .iter_mut()
                .find(|c| c.name == check.name)
                .expect("all check names are tracked");
            match check.status {
                CheckStatus::Pass => entry.pass += 1,
                CheckStatus::Fail => entry.fail += 1,
                CheckStatus::NotApplicable => entry.not_applicable += 1,
            }
        }
    }

    pub fn bound(&self, name: BoundName) -> &BoundSummary {
        self.bounds.iter().find(|b| b.name == name).expect("tracked")
    }
}

impl fmt::Display for CorpusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs audited: {}", self.graphs)?;
        writeln!(f, "violations: {}", self.violations)?;
        writeln!(f, "skipped: {}", self.skipped.len())?;
        for skip in &self.skipped {
            writeln!(f, "  {}: {}", skip.graph_id, skip.reason)?;
        }
        writeln!(f, "{:<22} {:>10} {:>8} {:>8} {:>9}", "bound", "applicable", "sharp", "max_gap", "mean_gap")?;
        for b in &self.bounds {
            writeln!(
                f,
                "{:<22} {:>10} {:>8} {:>8} {:>9}",
                b.name.as_str(),
                b.applicable,
                b.sharp,
                b.max_gap.map_or("-".into(), |g| g.to_string()),
                b.mean_gap.map_or("-".into(), |g| format!("{g:.3}")),
            )?;
        }
        writeln!(f, "{:<26} {:>8} {:>6} {:>8}", "check", "pass", "fail", "NA")?;
        for c in &self.checks {
            writeln!(f, "{:<26} {:>8} {:>6} {:>8}", c.name.as_str(), c.pass, c.fail, c.not_applicable)?;
        }
        Ok(())
    }
}

/// Audits every corpus entry, handing reports to `sink` in index order.
///
/// Entries that cannot be built or exceed a solver cap are recorded as
/// skips. The first report with a violation is passed to `sink` and then
/// aborts the run with [`Error::Violation`].
pub fn audit_corpus(
    spec: &CorpusSpec,
    mut sink: impl FnMut(&BoundReport) -> Result<()>,
) -> Result<CorpusSummary> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let mut summary = CorpusSummary::new();
    let mut entries = spec.entries().peekable();
    while entries.peek().is_some() {
        let batch: Vec<CorpusEntry> = entries.by_ref().take(BATCH).collect();
        let results: Vec<Result<BoundReport>> = pool.install(|| {
            batch
                .par_iter()
                .map(|entry| {
                    let g = entry.build()?;
                    audit_graph_with(&g, &entry.id, &spec.audit)
                })
                .collect()
        });
        for (entry, result) in batch.iter().zip(results) {
            let report = match result {
                Ok(report) => report,
                Err(e @ (Error::CapExceeded { .. } | Error::RetryCapExceeded { .. } | Error::TooLarge { .. })) => {
                    summary.skipped.push(Skip {
                        graph_id: entry.id.clone(),
                        reason: e.to_string(),
                    });
                    continue;
                }
                Err(e) => return Err(e),
            };
            summary.record(&report);
            sink(&report)?;
            let violations = report.violations();
            if !violations.is_empty() {
                summary.violations += 1;
                return Err(Error::Violation {
                    graph_id: report.graph_id.clone(),
                    graph6: report.graph6.clone().unwrap_or_default(),
                    summary: violations.join("; "),
                    dump: serde_json::to_string_pretty(&report)?,
                });
            }
        }
    }
    Ok(summary)
}

/// graph6 strings of the corpus graphs on which `target` is sharp (gap 0
/// after parity tightening), sorted by order and then by string.
pub fn hunt(spec: &CorpusSpec, target: BoundName) -> Result<Vec<String>> {
    let mut found: Vec<(usize, String)> = Vec::new();
    audit_corpus(spec, |report| {
        if report.bound(target).and_then(|b| b.gap) == Some(0) {
            if let Some(g6) = &report.graph6 {
                found.push((report.n, g6.clone()));
            }
        }
        Ok(())
    })?;
    found.sort();
    found.dedup();
    Ok(found.into_iter().map(|(_, g6)| g6).collect())
}

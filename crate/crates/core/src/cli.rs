//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or runtime errors, 2 when an audit
//! finds a bound violation.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::audit::{
    audit_corpus, audit_graph_with, hunt, AuditConfig, CorpusKind, CorpusSpec, CorpusSummary,
    CsvReportWriter, JsonReportWriter,
};
use crate::bounds::{evaluate_all, Bound, BoundName};
use crate::codec::{detect_format, parse_graph, serialize_graph, Format};
use crate::error::{Error, Result};
use crate::generate::{generate, GraphKind};
use crate::graph::Graph;
use crate::profile::StructuralProfile;
use crate::solver::{Mode, Solver, SolverCaps};

#[derive(Parser, Debug)]
#[command(name = "sigdom", version, about = "Signed domination solvers and bound audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph
    Gen(GenArgs),
    /// Re-encode a graph (input format is detected)
    Convert(ConvertArgs),
    /// Compute one exact parameter with a certificate
    Solve(SolveArgs),
    /// Evaluate every bound on one graph
    Bounds(BoundsArgs),
    /// Audit a corpus (or one graph) against all bounds and invariants
    Audit(AuditArgs),
    /// List corpus graphs on which a bound is sharp
    Hunt(HuntArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Complete,
    Path,
    Cycle,
    Star,
    Spider,
    RandomTree,
    RandomConnected,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Number of vertices (all kinds except spider)
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for random-connected
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long)]
    legs: Option<usize>,
    #[arg(long)]
    leg_len: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "edgelist")]
    format: Format,
    /// Output file; stdout when absent or "-"
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArg {
    /// Graph file (edgelist or graph6), or "-" for stdin
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SolverArgs {
    #[arg(long, default_value = "bnb")]
    mode: Mode,
    /// Largest order accepted by the exhaustive solvers
    #[arg(long)]
    cap_oracle: Option<usize>,
    /// Largest order accepted by the branch-and-bound solvers
    #[arg(long)]
    cap_bnb: Option<usize>,
}

impl SolverArgs {
    fn solver(&self) -> Solver {
        let mut caps = SolverCaps::default();
        if let Some(cap) = self.cap_oracle {
            caps.signed_oracle = cap;
            caps.subset_oracle = cap;
        }
        if let Some(cap) = self.cap_bnb {
            caps.signed_bnb = cap;
            caps.subset_bnb = cap;
        }
        Solver::new(self.mode).with_caps(caps)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Param {
    GammaS,
    Gamma,
    Tuple,
    LimitedPacking,
    Rho,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum)]
    param: Param,
    /// Level for tuple and limited_packing
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    input: InputArg,
    #[command(flatten)]
    solver: SolverArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArg,
    #[command(flatten)]
    solver: SolverArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CorpusArg {
    Complete,
    Paths,
    Cycles,
    Stars,
    TreesExhaustive,
    RandomTrees,
    RandomConnected,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Graph families; repeat or comma-separate for several
    #[arg(long, value_enum, value_delimiter = ',')]
    corpus: Vec<CorpusArg>,
    /// Smallest order; defaults to 3 for cycles and 2 otherwise
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Samples per order for random families
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses all cores
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    solver: SolverArgs,
}

impl CorpusArgs {
    fn spec(&self) -> Result<CorpusSpec> {
        if self.corpus.is_empty() {
            return Err(Error::InvalidParameter("--corpus is required".into()));
        }
        let kinds = self
            .corpus
            .iter()
            .map(|kind| {
                let n_max = self.n_max;
                let n_min = self.n_min.unwrap_or(if *kind == CorpusArg::Cycles { 3 } else { 2 });
                let (count, p) = (self.count, self.p);
                match kind {
                    CorpusArg::Complete => CorpusKind::Complete { n_min, n_max },
                    CorpusArg::Paths => CorpusKind::Paths { n_min, n_max },
                    CorpusArg::Cycles => CorpusKind::Cycles { n_min, n_max },
                    CorpusArg::Stars => CorpusKind::Stars { n_min, n_max },
                    CorpusArg::TreesExhaustive => CorpusKind::TreesExhaustive { n_min, n_max },
                    CorpusArg::RandomTrees => CorpusKind::RandomTrees { n_min, n_max, count },
                    CorpusArg::RandomConnected => CorpusKind::RandomConnected { n_min, n_max, p, count },
                }
            })
            .collect();
        let mut spec = CorpusSpec::new(kinds, self.seed);
        spec.audit = AuditConfig {
            solver: self.solver.solver(),
            ..AuditConfig::default()
        };
        spec.jobs = self.jobs;
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Audit this single graph instead of a corpus
    #[arg(long, conflicts_with = "corpus")]
    input: Option<String>,
    /// Report file: JSON when the name ends in .json, CSV otherwise
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the summary as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct HuntArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Bound name, e.g. packing_upper or tree_core_lower
    #[arg(long)]
    target: BoundName,
    #[arg(long)]
    json: bool,
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 1;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(Error::Violation {
            graph_id,
            graph6,
            summary,
            dump,
        }) => {
            let _ = writeln!(stderr, "bound violation on {graph_id} ({graph6}): {summary}");
            let _ = writeln!(stderr, "{dump}");
            2
        }
        // a closed pipe downstream (`| head`) is not a failure
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    match command {
        Command::Gen(args) => gen(args, stdout),
        Command::Convert(args) => {
            let g = read_graph(&args.input.input, stdin)?;
            write_output(args.out.as_deref(), stdout, &serialize_graph(&g, args.format)?)
        }
        Command::Solve(args) => solve(args, stdin, stdout),
        Command::Bounds(args) => bounds(args, stdin, stdout),
        Command::Audit(args) => audit(args, stdin, stdout),
        Command::Hunt(args) => {
            let spec = args.corpus.spec()?;
            let found = hunt(&spec, args.target)?;
            if args.json {
                serde_json::to_writer(&mut *stdout, &found)?;
                writeln!(stdout)?;
            } else {
                for g6 in found {
                    writeln!(stdout, "{g6}")?;
                }
            }
            Ok(())
        }
    }
}

fn gen(args: GenArgs, stdout: &mut dyn Write) -> Result<()> {
    let need_n = || {
        args.n
            .ok_or_else(|| Error::InvalidParameter(format!("--n is required for {:?}", args.kind)))
    };
    let kind = match args.kind {
        KindArg::Complete => GraphKind::Complete { n: need_n()? },
        KindArg::Path => GraphKind::Path { n: need_n()? },
        KindArg::Cycle => GraphKind::Cycle { n: need_n()? },
        KindArg::Star => GraphKind::Star { n: need_n()? },
        KindArg::RandomTree => GraphKind::RandomTree { n: need_n()? },
        KindArg::RandomConnected => GraphKind::RandomConnected { n: need_n()?, p: args.p },
        KindArg::Spider => GraphKind::Spider {
            legs: args
                .legs
                .ok_or_else(|| Error::InvalidParameter("--legs is required for spider".into()))?,
            leg_len: args
                .leg_len
                .ok_or_else(|| Error::InvalidParameter("--leg-len is required for spider".into()))?,
        },
    };
    let g = generate(&kind, args.seed)?;
    write_output(args.out.as_deref(), stdout, &serialize_graph(&g, args.format)?)
}

#[derive(Serialize)]
struct SolveOutput<'a, W: Serialize> {
    param: &'a str,
    k: Option<usize>,
    mode: String,
    value: i64,
    witness: W,
}

fn solve(args: SolveArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    let g = read_graph(&args.input.input, stdin)?;
    let solver = args.solver.solver();
    let need_k = || {
        args.k
            .ok_or_else(|| Error::InvalidParameter("--k is required for this parameter".into()))
    };
    let (name, k, value, witness, valid) = match args.param {
        Param::GammaS => {
            let (w, f) = solver.signed_domination(&g)?;
            let valid = f.is_valid(&g) && f.weight() == w;
            ("gamma_s", None, w, serde_json::to_value(&f)?, valid)
        }
        param => {
            let (name, k, (value, set)) = match param {
                Param::Gamma => ("gamma", None, solver.domination_number(&g)?),
                Param::Rho => ("rho", None, solver.packing_number(&g)?),
                Param::Tuple => {
                    let k = need_k()?;
                    ("tuple", Some(k), solver.tuple_domination_number(&g, k)?)
                }
                Param::LimitedPacking => {
                    let k = need_k()?;
                    ("limited_packing", Some(k), solver.limited_packing_number(&g, k)?)
                }
                Param::GammaS => unreachable!(),
            };
            let valid = set.is_valid(&g) && set.len() == value;
            (name, k, value as i64, serde_json::to_value(set.members())?, valid)
        }
    };
    if !valid {
        return Err(Error::InvalidCertificate(format!("{name} witness failed re-verification")));
    }
    if args.json {
        let out = SolveOutput {
            param: name,
            k,
            mode: solver.mode.to_string(),
            value,
            witness,
        };
        serde_json::to_writer(&mut *stdout, &out)?;
        writeln!(stdout)?;
    } else {
        let label = match k {
            Some(k) => format!("{name}[k={k}]"),
            None => name.to_string(),
        };
        writeln!(stdout, "{label} {value}")?;
        match witness {
            serde_json::Value::String(s) => writeln!(stdout, "witness {s}")?,
            other => {
                let members: Vec<String> = other
                    .as_array()
                    .into_iter()
                    .flatten()
                    .map(|v| v.to_string())
                    .collect();
                writeln!(stdout, "witness {{{}}}", members.join(", "))?
            }
        }
    }
    Ok(())
}

fn bounds(args: BoundsArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    let g = read_graph(&args.input.input, stdin)?;
    let solver = args.solver.solver();
    let profile = StructuralProfile::of(&g);
    let (rho, _) = solver.packing_number(&g)?;
    let (gamma, _) = solver.domination_number(&g)?;
    let applicable: Vec<Bound> = evaluate_all(&profile, rho, gamma)
        .into_iter()
        .filter(|b| b.applicable)
        .collect();
    if args.json {
        serde_json::to_writer(&mut *stdout, &applicable)?;
        writeln!(stdout)?;
        return Ok(());
    }
    if applicable.is_empty() {
        writeln!(stdout, "no applicable bounds")?;
    }
    for b in applicable {
        let kind = match b.kind {
            crate::bounds::BoundKind::Lower => "lower",
            crate::bounds::BoundKind::Upper => "upper",
        };
        write!(
            stdout,
            "{} {kind} raw {} tightened {}",
            b.name,
            b.raw.expect("applicable"),
            b.tightened.expect("applicable")
        )?;
        if let Some(note) = b.note {
            write!(stdout, " ({note})")?;
        }
        writeln!(stdout)?;
    }
    Ok(())
}

enum ReportSink {
    None,
    Csv(Box<CsvReportWriter<BufWriter<File>>>),
    Json(JsonReportWriter<BufWriter<File>>),
}

fn audit(args: AuditArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    if let Some(input) = &args.input {
        let g = read_graph(input, stdin)?;
        let config = AuditConfig {
            solver: args.corpus.solver.solver(),
            ..AuditConfig::default()
        };
        let report = audit_graph_with(&g, input, &config)?;
        if let Some(path) = &args.out {
            let mut file = BufWriter::new(File::create(path)?);
            serde_json::to_writer_pretty(&mut file, &report)?;
            writeln!(file)?;
            file.flush()?;
        }
        let violations = report.violations();
        if !violations.is_empty() {
            return Err(Error::Violation {
                graph_id: report.graph_id.clone(),
                graph6: report.graph6.clone().unwrap_or_default(),
                summary: violations.join("; "),
                dump: serde_json::to_string_pretty(&report)?,
            });
        }
        if args.json {
            serde_json::to_writer(&mut *stdout, &report)?;
            writeln!(stdout)?;
        } else {
            writeln!(stdout, "{}: gamma_s {}, no violations", report.graph_id, report.exact.gamma_s)?;
            for b in report.bounds.iter().filter(|b| b.bound.applicable) {
                writeln!(
                    stdout,
                    "  {} tightened {} gap {}",
                    b.bound.name,
                    b.bound.tightened.unwrap_or_default(),
                    b.gap.unwrap_or_default()
                )?;
            }
        }
        return Ok(());
    }

    let spec = args.corpus.spec()?;
    let mut sink = match &args.out {
        None => ReportSink::None,
        Some(path) => {
            let file = BufWriter::new(File::create(path)?);
            if path.extension().is_some_and(|e| e == "json") {
                ReportSink::Json(JsonReportWriter::new(file)?)
            } else {
                ReportSink::Csv(Box::new(CsvReportWriter::new(file)?))
            }
        }
    };
    let result = audit_corpus(&spec, |report| match &mut sink {
        ReportSink::None => Ok(()),
        ReportSink::Csv(w) => w.write(report),
        ReportSink::Json(w) => w.write(report),
    });
    // write out whatever was collected, even when the run aborted
    let summary: Option<&CorpusSummary> = result.as_ref().ok();
    match sink {
        ReportSink::None => {}
        ReportSink::Csv(w) => {
            w.finish()?.flush()?;
        }
        ReportSink::Json(w) => {
            if let Some(summary) = summary {
                w.finish(summary)?;
            }
        }
    }
    let summary = result?;
    if args.json {
        serde_json::to_writer(&mut *stdout, &summary)?;
        writeln!(stdout)?;
    } else {
        write!(stdout, "{summary}")?;
    }
    Ok(())
}

fn read_graph(input: &str, stdin: &mut dyn Read) -> Result<Graph> {
    let mut text = Vec::new();
    if input == "-" {
        stdin.read_to_end(&mut text)?;
    } else {
        File::open(input)?.read_to_end(&mut text)?;
    }
    parse_graph(&text, detect_format(&text))
}

fn write_output(out: Option<&Path>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) if path != Path::new("-") => std::fs::write(path, bytes)?,
        _ => stdout.write_all(bytes)?,
    }
    Ok(())
}

//! Command-line front end: `profile`, `verify`, `sweep` and `hypercube`.
//!
//! Every command returns its output as a string plus an exit code so tests
//! can drive the exact bytes a user would see.
//!
//! Exit codes: 0 success or consistent, 1 usage or input error, 2 a report
//! that is not consistent (internal inconsistency or counterexample).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use isoperim::analysis::{
    check_symmetry, counterexample_sweep, diff_sequence, hypercube_inequality_check,
    verify_theorem, write_findings, AnalysisError, GraphSummary, ReportStatus, SweepConfig,
    VerifyOptions,
};
use isoperim::graph::{parse_graph6, parse_mix, read_graph, GeneratorSpec, SpecError};
use isoperim::solver::{all_profiles, MetricKind, SixProfiles, DEFAULT_CAP};
use isoperim::{Graph, GraphError, SolverConfig, SolverError, Strategy};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

/// Findings path used by `sweep` when `--findings` is not given.
pub const DEFAULT_FINDINGS: &str = "isoperim-findings.txt";

pub const CSV_HEADER: &str = "i,Delta,Sigma,T,Upsilon,Theta,Phi,delta,sigma,tau,upsilon,theta,phi";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Solver(#[from] SolverError),
    #[error("{0}")]
    Analysis(#[from] AnalysisError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(SolverError::PathsDisagree { .. })
            | CliError::Analysis(AnalysisError::Solver(SolverError::PathsDisagree { .. })) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "isoperim",
    version,
    about = "Exact edge-isoperimetric profiles of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the six profiles and their difference sequences.
    Profile(RunArgs),
    /// Check the regularity characterisation and the identity suite.
    Verify(RunArgs),
    /// Verify a seeded stream of generated graphs.
    Sweep(SweepArgs),
    /// Check Φ of the d-cube against i(d − log2 i).
    Hypercube(HypercubeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Graph file: graph6, `n m` edge list or DIMACS.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long, value_name = "STRING")]
    pub g6: Option<String>,
    /// Generator spec, e.g. `hypercube:3` or `random:10:0.4`.
    #[arg(long, value_name = "SPEC")]
    pub gen: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// oracle, bb, reduced or checked; defaults by graph size.
    #[arg(long, value_parser = parse_strategy)]
    pub strategy: Option<Strategy>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest vertex count the solvers accept.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Write output here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Comma-separated generator specs, used round-robin.
    #[arg(long, value_name = "SPECS")]
    pub gen: String,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Worker threads (output does not depend on this).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Where to dump non-consistent reports.
    #[arg(long, value_name = "FILE", default_value = DEFAULT_FINDINGS)]
    pub findings: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct HypercubeArgs {
    /// Cube dimension.
    #[arg(long)]
    pub dim: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse()
}

/// Where the graph comes from; exactly one source.
#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    File(PathBuf),
    Graph6(String),
    Generator(GeneratorSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: InputSource,
    pub strategy: Option<Strategy>,
    pub format: Format,
    pub seed: u64,
    pub cap: usize,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<Self, CliError> {
        let input = match (&args.input.input, &args.input.g6, &args.input.gen) {
            (Some(path), None, None) => InputSource::File(path.clone()),
            (None, Some(s), None) => InputSource::Graph6(s.clone()),
            (None, None, Some(spec)) => InputSource::Generator(spec.parse()?),
            _ => {
                return Err(CliError::Usage(
                    "exactly one of --input, --g6, --gen is required".into(),
                ))
            }
        };
        Ok(Self {
            input,
            strategy: args.common.strategy,
            format: args.common.format,
            seed: args.common.seed,
            cap: args.common.cap,
        })
    }

    pub fn load_graph(&self) -> Result<Graph, CliError> {
        Ok(match &self.input {
            InputSource::File(path) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                read_graph(&text)?
            }
            InputSource::Graph6(s) => parse_graph6(s)?,
            InputSource::Generator(spec) => spec.generate(self.seed)?,
        })
    }

    fn strategy_for(&self, g: &Graph) -> Strategy {
        self.strategy.unwrap_or(Strategy::default_for(g.n()))
    }
}

/// Output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emitted {
    pub exit: i32,
    pub text: String,
}

#[derive(Serialize)]
struct ProfileOutput<'a> {
    graph: GraphSummary,
    strategy: Strategy,
    profiles: &'a [isoperim::Profile],
    differences: Vec<isoperim::analysis::DiffSequence>,
}

pub fn profile_csv(six: &SixProfiles) -> String {
    let diffs: Vec<_> = six.profiles.iter().map(diff_sequence).collect();
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for i in 0..=six.n() {
        let mut row = vec![i.to_string()];
        row.extend(six.profiles.iter().map(|p| p.values[i].to_string()));
        row.extend(diffs.iter().map(|d| {
            if i == 0 {
                String::new()
            } else {
                d.at(i).to_string()
            }
        }));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn profile_human(g: &Graph, six: &SixProfiles) -> String {
    let diffs: Vec<_> = six.profiles.iter().map(diff_sequence).collect();
    let mut out = String::new();
    let s = GraphSummary::of(g);
    let _ = writeln!(
        out,
        "graph {}  n={} m={} min degree={} regular={} connected={}  strategy={}",
        s.graph6, s.n, s.m, s.degrees.min_degree, s.degrees.is_regular, s.connected, six.strategy
    );
    let mut header = format!("{:>3}", "i");
    for k in MetricKind::ALL {
        let _ = write!(header, " {:>4}", k.symbol());
    }
    for k in MetricKind::ALL {
        let _ = write!(header, " {:>4}", k.diff_symbol());
    }
    out.push_str(&header);
    out.push('\n');
    for i in 0..=six.n() {
        let _ = write!(out, "{i:>3}");
        for p in &six.profiles {
            let _ = write!(out, " {:>4}", p.values[i]);
        }
        if i > 0 {
            for d in &diffs {
                let _ = write!(out, " {:>4}", d.at(i));
            }
        }
        out.push('\n');
    }
    for d in &diffs {
        let v = check_symmetry(d);
        let _ = match v.violations.first() {
            None => writeln!(
                out,
                "{}: symmetric, target {}",
                d.kind.diff_symbol(),
                v.target
            ),
            Some((i, sum)) => writeln!(
                out,
                "{}: asymmetric, target {}, first violation i={i} sum={sum}",
                d.kind.diff_symbol(),
                v.target
            ),
        };
    }
    out
}

pub fn cmd_profile(config: &RunConfig) -> Result<Emitted, CliError> {
    let g = config.load_graph()?;
    let solver = SolverConfig::with_cap(config.cap);
    let six = all_profiles(&g, config.strategy_for(&g), &solver)?;
    let text = match config.format {
        Format::Csv => profile_csv(&six),
        Format::Human => profile_human(&g, &six),
        Format::Json => {
            let body = ProfileOutput {
                graph: GraphSummary::of(&g),
                strategy: six.strategy,
                profiles: &six.profiles,
                differences: six.profiles.iter().map(diff_sequence).collect(),
            };
            serde_json::to_string_pretty(&body).expect("profile serializes") + "\n"
        }
    };
    Ok(Emitted { exit: 0, text })
}

pub fn cmd_verify(config: &RunConfig) -> Result<Emitted, CliError> {
    let g = config.load_graph()?;
    let options = VerifyOptions {
        strategy: config.strategy.unwrap_or(Strategy::CrossChecked),
        solver: SolverConfig::with_cap(config.cap),
    };
    let report = verify_theorem(&g, &options)?;
    let text = match config.format {
        Format::Human => report.to_string(),
        Format::Json => report.to_json_pretty() + "\n",
        Format::Csv => {
            let mut out = String::from("sequence,regular,symmetric,target,violations,consistent\n");
            for s in &report.sequences {
                let regular = report.graph.degrees.is_regular;
                let consistent = if s.kind.is_cut() {
                    s.verdict.symmetric && s.verdict.target == 0
                } else {
                    regular == s.verdict.symmetric
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    s.name,
                    regular,
                    s.verdict.symmetric,
                    s.verdict.target,
                    s.verdict.violations.len(),
                    consistent
                );
            }
            out
        }
    };
    let exit = match report.status {
        ReportStatus::Consistent => 0,
        _ => 2,
    };
    Ok(Emitted { exit, text })
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Emitted, CliError> {
    let config = SweepConfig {
        mix: parse_mix(&args.gen)?,
        count: args.count,
        seed: args.common.seed,
        strategy: args.common.strategy,
        solver: SolverConfig::with_cap(args.common.cap),
        workers: args.jobs,
    };
    let summary = counterexample_sweep(&config)?;
    if !summary.is_clean() {
        let file = fs::File::create(&args.findings).map_err(|source| CliError::Io {
            path: args.findings.display().to_string(),
            source,
        })?;
        write_findings(&summary, std::io::BufWriter::new(file)).map_err(|source| CliError::Io {
            path: args.findings.display().to_string(),
            source,
        })?;
    }
    let text = match args.common.format {
        Format::Json => summary.to_json() + "\n",
        Format::Human | Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "sweep seed={} count={}", summary.seed, summary.count);
            let _ = writeln!(out, "mix: {}", summary.mix.join(", "));
            let _ = writeln!(
                out,
                "regular: {}  connected: {}",
                summary.regular, summary.connected
            );
            let _ = writeln!(
                out,
                "consistent: {}  counterexamples: {}  internal inconsistencies: {}",
                summary.consistent, summary.counterexamples, summary.internal_inconsistencies
            );
            for f in &summary.findings {
                let _ = writeln!(out, "finding #{} ({}) {}", f.index, f.spec, f.graph6);
            }
            if !summary.is_clean() {
                let _ = writeln!(out, "findings written to {}", args.findings.display());
            }
            out
        }
    };
    Ok(Emitted {
        exit: if summary.is_clean() { 0 } else { 2 },
        text,
    })
}

pub fn cmd_hypercube(args: &HypercubeArgs) -> Result<Emitted, CliError> {
    let report = hypercube_inequality_check(args.dim, &SolverConfig::with_cap(args.common.cap))?;
    let text = match args.common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => {
            let mut out = String::from("i,phi,bound_log2,exact,holds,tight,bound_ln,holds_ln\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{},{},{:.6},{},{},{},{:.6},{}",
                    r.i, r.phi, r.bound, r.exact, r.holds, r.tight, r.bound_ln, r.holds_ln
                );
            }
            out
        }
        Format::Human => {
            let mut out = format!(
                "Q{}: Φ(i) ≥ i(d − log₂ i)\nnote: {}\n",
                report.d, report.note
            );
            let _ = writeln!(
                out,
                "{:>3} {:>4} {:>10}  {:<6} {:>10}",
                "i", "Φ", "bound", "", "ln bound"
            );
            for r in &report.rows {
                let mark = match (r.holds, r.tight) {
                    (false, _) => "FAIL",
                    (true, true) => "tight",
                    (true, false) => "ok",
                };
                let _ = writeln!(
                    out,
                    "{:>3} {:>4} {:>10.4}  {:<6} {:>10.4}",
                    r.i, r.phi, r.bound, mark, r.bound_ln
                );
            }
            let _ = writeln!(out, "holds: {}", report.holds);
            out
        }
    };
    Ok(Emitted {
        exit: if report.holds { 0 } else { 2 },
        text,
    })
}

fn common(command: &Command) -> &CommonArgs {
    match command {
        Command::Profile(a) | Command::Verify(a) => &a.common,
        Command::Sweep(a) => &a.common,
        Command::Hypercube(a) => &a.common,
    }
}

/// Runs a parsed command, writing output to `--out` or stdout and any error
/// as one line on stderr. Returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Profile(a) => RunConfig::from_args(a).and_then(|c| cmd_profile(&c)),
        Command::Verify(a) => RunConfig::from_args(a).and_then(|c| cmd_verify(&c)),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Hypercube(a) => cmd_hypercube(a),
    };
    match result {
        Ok(emitted) => {
            if let Some(path) = &common(&cli.command).out {
                if let Err(e) = fs::write(path, &emitted.text) {
                    eprintln!("error: {}: {e}", path.display());
                    return 1;
                }
            } else {
                print!("{}", emitted.text);
            }
            emitted.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

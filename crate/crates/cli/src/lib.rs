//! Command-line verification harness for exact villainy computation.
//!
//! Subcommands either inspect one graph or sweep every isomorphism class up
//! to a bound, cross-checking the exact search against the closed-form
//! predicates and lemma bounds, and emit deterministic JSON or CSV reports.
//!
//! Exit codes: 0 clean; 2 a checked mathematical statement failed against
//! computation; 64 usage or parse error; 65 resource bound exceeded
//! (order or enumeration limits, exhausted time budget).

pub mod adjudication;
pub mod commands;
pub mod compute;
pub mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use villainy_core::villainy::DEFAULT_EXACT_BOUND;
use villainy_core::Graph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_RESOURCE: i32 = 65;

/// Default largest order for enumerated sweeps; `VILLAINY_MAX_N` overrides.
pub const DEFAULT_MAX_N: usize = 7;
pub const MAX_N_ENV: &str = "VILLAINY_MAX_N";
/// Hard ceiling on exact computation for explicitly supplied graphs.
pub const INPUT_EXACT_CEILING: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Usage(_) => EXIT_USAGE,
            HarnessError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Strong,
    Weak,
    Both,
}

impl Mode {
    pub fn strong(self) -> bool {
        matches!(self, Mode::Strong | Mode::Both)
    }

    pub fn weak(self) -> bool {
        matches!(self, Mode::Weak | Mode::Both)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Strong => "strong",
            Mode::Weak => "weak",
            Mode::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "villainy",
    version,
    about = "Exact computation and verification harness for graph-coloring villainy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report everything about one graph (graph6 text or a family expression)
    Inspect(InspectArgs),
    /// Check that every graph with B=2 lands in the twelve-case candidate list
    #[command(name = "sweep-theorem5")]
    SweepTheorem5(SweepArgs),
    /// Check the connected-bipartite closed forms against the exact search
    #[command(name = "sweep-bipartite")]
    SweepBipartite(BipartiteArgs),
    /// Check every fired lemma lower bound against the exact search
    #[command(name = "sweep-lemmas")]
    SweepLemmas(SweepArgs),
    /// Emit odd-cycle values against the conjectured B(C_{2k+1}) = k
    Cycles(CyclesArgs),
    /// Measure the parity of exact values across all small graphs
    Parity(SweepArgs),
}

#[derive(Args, Clone)]
pub struct SweepArgs {
    /// Largest order to enumerate (default 7; VILLAINY_MAX_N overrides)
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Which quantities to compute
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    pub mode: Mode,
    /// Report rendering
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cooperative time budget in seconds, checked between graphs
    #[arg(long, default_value_t = 600)]
    pub time_budget: u64,
    /// Worker threads (reports are byte-identical for any count)
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Verify graphs from a newline-separated graph6 file instead of enumerating
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct BipartiteArgs {
    #[command(flatten)]
    pub sweep: SweepArgs,
    /// Recompute the contested-family data and write it to this path
    /// instead of diffing against the frozen copy
    #[arg(long)]
    pub write_adjudication: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct CyclesArgs {
    /// Largest k; rows cover C_5 through C_{2k+1}
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct InspectArgs {
    /// graph6 text or a family expression such as "cycle(5)" or
    /// "complete(3) + empty(2)"
    pub input: String,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A sweep's fully validated working set.
pub struct ResolvedSweep {
    pub max_n: Option<usize>,
    pub mode: Mode,
    pub format: Format,
    pub time_budget: u64,
    pub workers: usize,
    pub out: Option<PathBuf>,
    pub input_label: Option<String>,
    pub bound: usize,
    /// Graphs in deterministic processing order.
    pub graphs: Vec<Graph>,
    pub notes: Vec<String>,
}

/// Applies defaults, the environment override, and the population source
/// (enumeration or input file), with a structural filter for sweeps that
/// only cover part of the population.
pub fn resolve_sweep(
    args: &SweepArgs,
    min_n: usize,
    filter: Option<&(dyn Fn(&Graph) -> bool + Sync)>,
) -> Result<ResolvedSweep, HarnessError> {
    if args.time_budget == 0 {
        return Err(HarnessError::Usage("--time-budget must be positive".into()));
    }
    if args.workers == 0 {
        return Err(HarnessError::Usage("--workers must be positive".into()));
    }
    let mut notes = Vec::new();

    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path).map_err(|e| {
            HarnessError::Usage(format!("--input {}: {e}", path.display()))
        })?;
        let parsed = villainy_core::parse_graph6_lines(&text)
            .map_err(|e| HarnessError::Usage(format!("--input {}: {e}", path.display())))?;
        let biggest = parsed.iter().map(Graph::order).max().unwrap_or(0);
        if biggest > INPUT_EXACT_CEILING {
            return Err(HarnessError::Resource(format!(
                "input contains a graph of order {biggest}; exact search is capped at \
                 order {INPUT_EXACT_CEILING}"
            )));
        }
        let total = parsed.len();
        let graphs: Vec<Graph> = match filter {
            Some(f) => parsed.into_iter().filter(|g| g.order() >= min_n && f(g)).collect(),
            None => parsed,
        };
        if graphs.len() < total {
            notes.push(format!(
                "{} of {} input graphs are outside this sweep's population and were skipped",
                total - graphs.len(),
                total
            ));
        }
        return Ok(ResolvedSweep {
            max_n: None,
            mode: args.mode,
            format: args.format,
            time_budget: args.time_budget,
            workers: args.workers,
            out: args.out.clone(),
            input_label: Some(path.display().to_string()),
            bound: DEFAULT_EXACT_BOUND.max(biggest),
            graphs,
            notes,
        });
    }

    let max_n = match args.max_n {
        Some(n) => n,
        None => match std::env::var(MAX_N_ENV) {
            Ok(raw) => raw.parse::<usize>().map_err(|_| {
                HarnessError::Usage(format!("{MAX_N_ENV}={raw} is not a valid order"))
            })?,
            Err(_) => DEFAULT_MAX_N,
        },
    };
    if max_n == 0 {
        return Err(HarnessError::Usage("--max-n must be at least 1".into()));
    }
    let mut graphs = Vec::new();
    let adapter = filter.map(|f| move |g: &Graph| f(g));
    for n in min_n..=max_n {
        let level = match &adapter {
            Some(keep) => {
                villainy_core::enumerate_nonisomorphic(n, Some(keep as &dyn Fn(&Graph) -> bool))
            }
            None => villainy_core::enumerate_nonisomorphic(n, None),
        }
        .map_err(|e| HarnessError::Resource(e.to_string()))?;
        graphs.extend(level);
    }
    Ok(ResolvedSweep {
        max_n: Some(max_n),
        mode: args.mode,
        format: args.format,
        time_budget: args.time_budget,
        workers: args.workers,
        out: args.out.clone(),
        input_label: None,
        bound: DEFAULT_EXACT_BOUND.max(max_n),
        graphs,
        notes,
    })
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Inspect(args) => commands::inspect(&args),
        Command::SweepTheorem5(args) => commands::sweep_theorem5(&args),
        Command::SweepBipartite(args) => commands::sweep_bipartite(&args),
        Command::SweepLemmas(args) => commands::sweep_lemmas(&args),
        Command::Cycles(args) => commands::cycles(&args),
        Command::Parity(args) => commands::parity(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

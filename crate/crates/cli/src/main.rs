//! `prefixdfa`: generate reduction samples, solve them, build and check
//! witnesses, convert between automaton formats.
//!
//! Exit codes: 0 pass/sat, 1 fail/unsat, 2 usage or parse error, 3 timeout.

mod commands;
mod meta;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "prefixdfa", version, about = "Consistent-DFA hardness constructions from graph coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a sample from a DIMACS graph.
    Reduce(ReduceArgs),
    /// Decide or minimize the size of a consistent DFA for a sample.
    Solve(SolveArgs),
    /// Build the automaton a coloring induces.
    Witness(WitnessArgs),
    /// Read a coloring back out of a consistent DFA.
    Extract(ExtractArgs),
    /// Check both directions of a construction on one graph.
    Verify(VerifyArgs),
    /// Convert between automaton and sample formats.
    Convert(ConvertArgs),
    /// Render an automaton as Graphviz DOT.
    Dot(DotArgs),
    /// Generate a DIMACS graph.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Zhang,
    Binary,
    Single,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Zhang => "zhang",
            Kind::Binary => "binary",
            Kind::Single => "single",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    Zhang,
    Binary,
    Single,
    TwoChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertTarget {
    Moore,
    Mealy,
    MachineSample,
    DfaSample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Empty,
    Gnp,
    Example,
}

/// `K`, `L` and `N`; `K` defaults to the chromatic number.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long = "K")]
    pub k: Option<usize>,
    #[arg(long = "L")]
    pub l: Option<usize>,
    #[arg(long = "N")]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub graph: PathBuf,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Abbadingo output; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Metadata JSON; defaults to `<out>.meta.json`.
    #[arg(long)]
    pub meta: Option<PathBuf>,
    /// Run file of the single-string instance; defaults to `<out>.run`.
    #[arg(long)]
    pub run: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Abbadingo sample.
    #[arg(long)]
    pub sample: PathBuf,
    #[arg(long)]
    pub max_m: usize,
    #[arg(long)]
    pub acyclic: bool,
    /// Report the smallest m up to --max-m.
    #[arg(long)]
    pub minimize: bool,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub budget: Option<f64>,
    /// Reduce metadata whose alphabet names the witness symbols.
    #[arg(long)]
    pub meta: Option<PathBuf>,
    /// Witness JSON, written when sat.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long, value_enum)]
    pub kind: WitnessKind,
    #[arg(long)]
    pub graph: PathBuf,
    /// Comma-separated colors in 1..=K, one per vertex; the oracle's optimal
    /// coloring when omitted.
    #[arg(long)]
    pub coloring: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Automaton JSON; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    /// Defaults to the kind recorded in the metadata.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub dfa: PathBuf,
    #[arg(long)]
    pub meta: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub graph: PathBuf,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Also run RPNI on the binary sample and check the ratio chain.
    #[arg(long)]
    pub ratio: bool,
    /// Solver budget in seconds.
    #[arg(long)]
    pub budget: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub to: ConvertTarget,
    #[arg(long)]
    pub input: PathBuf,
    /// Symbol names for run files, comma separated; binary by default.
    #[arg(long)]
    pub alphabet: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DotArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Process outcome under the exit-code contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Timeout,
}

impl From<Status> for ExitCode {
    fn from(status: Status) -> Self {
        match status {
            Status::Pass => ExitCode::SUCCESS,
            Status::Fail => ExitCode::from(1),
            Status::Timeout => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reduce(args) => commands::reduce(&args),
        Command::Solve(args) => commands::solve(&args),
        Command::Witness(args) => commands::witness(&args),
        Command::Extract(args) => commands::extract(&args),
        Command::Verify(args) => verify::verify(&args),
        Command::Convert(args) => commands::convert(&args),
        Command::Dot(args) => commands::dot(&args),
        Command::Graph(args) => commands::graph(&args),
    };
    match result {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

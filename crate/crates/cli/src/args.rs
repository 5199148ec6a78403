use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sizeramsey::Strategy;

#[derive(Debug, Parser)]
#[command(name = "sizeramsey", version, about = "Size-Ramsey experiments for monochromatic paths")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Base seed; required by every command that samples.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub trials: Option<u64>,
    /// Overrides the enumeration or search cap of the command.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    /// Fill the runtime_ms column; output is no longer byte-reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample hosts G(7rn, p) and tabulate their edge counts.
    Sample(SampleArgs),
    /// Colour hosts adversarially and search for a monochromatic path.
    RamseyTrial(TrialArgs),
    /// Check the pair-density property, or re-validate a certificate.
    CheckExpansion(ExpansionArgs),
    /// Tabulate upper and lower bound coefficients.
    Bounds(BoundsArgs),
    /// Exhaustive oracles for tiny instances.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Clone, Args)]
pub struct HostArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: u32,
    /// Explicit edge probability instead of 22 ln(r) / n.
    #[arg(long)]
    pub p: Option<f64>,
    /// Accept an explicit probability; without it `--p` exits with code 2.
    #[arg(long)]
    pub allow_out_of_regime: bool,
    #[arg(long, default_value_t = sizeramsey::DEFAULT_RETRY_LIMIT)]
    pub retry_limit: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpansionMode {
    None,
    Exact,
    MonteCarlo,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub host: HostArgs,
    /// Keep the first draw even when its edge count is outside the window.
    #[arg(long)]
    pub raw: bool,
    #[arg(long, value_enum, default_value = "none")]
    pub expansion: ExpansionMode,
    /// Random pairs per host for `--expansion monte-carlo`.
    #[arg(long, default_value_t = 10_000)]
    pub expansion_trials: u64,
    /// Write `host-<trial>.json` and `report-<trial>.json` here.
    #[arg(long)]
    pub graph_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TrialArgs {
    #[command(flatten)]
    pub host: HostArgs,
    #[arg(long, default_value = "uniform-random", value_parser = parse_strategy)]
    pub adversary: Strategy,
    /// Try every colour, largest class first, before giving up.
    #[arg(long)]
    pub all_colours: bool,
    /// Use this host instead of sampling; runs a single trial.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Use this colouring of `--graph` instead of the adversary.
    #[arg(long, requires = "graph")]
    pub colouring: Option<PathBuf>,
    /// Write `cert-<trial>.json` for every trial here.
    #[arg(long)]
    pub certificates: Option<PathBuf>,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: sizeramsey::oracle::OracleError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMethod {
    Exact,
    MonteCarlo,
}

#[derive(Debug, Clone, Args)]
pub struct ExpansionArgs {
    /// Graph JSON, or an edge list for any other extension.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Edge budget; defaults to 70 ln(r) n when `--r` is given.
    #[arg(long)]
    pub budget: Option<f64>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, value_enum, default_value = "exact")]
    pub method: CheckMethod,
    /// Re-validate a certificate written by `ramsey-trial` instead.
    #[arg(long, requires = "colouring")]
    pub certificate: Option<PathBuf>,
    #[arg(long)]
    pub colouring: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[arg(long = "r", alias = "r-from")]
    pub r_from: u32,
    /// Last r of the range; defaults to `--r`.
    #[arg(long)]
    pub r_to: Option<u32>,
    /// Log-spaced sample of this many r values instead of every integer.
    #[arg(long)]
    pub points: Option<usize>,
    /// Fixed Krivelevich constant instead of the minimizing one.
    #[arg(long)]
    pub c: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerationArg {
    Canonical,
    Exhaustive,
}

#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    #[arg(long, conflicts_with = "complete")]
    pub graph: Option<PathBuf>,
    /// Use the complete graph on this many vertices.
    #[arg(long)]
    pub complete: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Decide whether every r-colouring contains a monochromatic P_n.
    Arrows {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "canonical")]
        method: EnumerationArg,
    },
    /// Smallest edge count of an arrowing graph on few vertices.
    MinRamsey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 5)]
        vertex_cap: usize,
    },
    /// Exact longest simple path.
    LongestPath {
        #[command(flatten)]
        source: GraphSource,
    },
}

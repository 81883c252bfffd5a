use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semitotal_core::reductions::GadgetKind;
use semitotal_core::DominationKind;

#[derive(Debug, Parser)]
#[command(name = "semitotal", version, about = "Semitotal domination solvers, verifiers and reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a (semi)total or ordinary dominating set.
    Solve(SolveArgs),
    /// Check a vertex set against a domination condition.
    Verify(VerifyArgs),
    /// Build a gadget graph and write it with a role-map sidecar.
    Reduce(ReduceArgs),
    /// Compare optimum values on both sides of a reduction.
    CheckReduction(CheckReductionArgs),
    /// Generate a seeded instance.
    Gen(GenArgs),
    /// Time a solver over a range of instance sizes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Exact,
    Interval,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Intervals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(alias = "dominating")]
    Dom,
    Total,
    #[value(alias = "semi")]
    Semitotal,
}

impl From<Kind> for DominationKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Dom => DominationKind::Dominating,
            Kind::Total => DominationKind::Total,
            Kind::Semitotal => DominationKind::Semitotal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gadget {
    Gp4,
    Bipartite,
    Split,
    Ln,
    Apx,
}

impl From<Gadget> for GadgetKind {
    fn from(g: Gadget) -> Self {
        match g {
            Gadget::Gp4 => GadgetKind::Gp4,
            Gadget::Bipartite => GadgetKind::Bipartite,
            Gadget::Split => GadgetKind::Split,
            Gadget::Ln => GadgetKind::Ln,
            Gadget::Apx => GadgetKind::Apx,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Instance file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[command(flatten)]
    pub input: InputArgs,
    /// Domination condition; `interval` supports only semitotal, `approx`
    /// supports semitotal and dom.
    #[arg(long, value_enum, default_value = "semitotal")]
    pub kind: Kind,
    /// Exhaustive subset size for the dominating-set approximation.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Set file, or an inline list such as `0,3,4`.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,
    #[arg(long, value_enum)]
    pub kind: Kind,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub kind: Gadget,
    /// Source graph as an edge list.
    #[arg(long)]
    pub input: PathBuf,
    /// Split partition file (`K ids` / `I ids`), required for `split`.
    #[arg(long)]
    pub partition: Option<PathBuf>,
    /// Destination of the gadget edge list; roles go to `<output>.roles.json`.
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct CheckReductionArgs {
    #[arg(long, value_enum)]
    pub kind: Gadget,
    /// Single source graph as an edge list.
    #[arg(long, conflicts_with_all = ["all_connected", "clique"])]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "input")]
    pub partition: Option<PathBuf>,
    /// Every labelled connected graph with up to this many vertices.
    #[arg(long, conflicts_with = "clique")]
    pub all_connected: Option<usize>,
    /// Clique size of generated split sources.
    #[arg(long, requires = "ind")]
    pub clique: Option<usize>,
    /// Independent-set size of generated split sources.
    #[arg(long, requires = "clique")]
    pub ind: Option<usize>,
    /// Vertex count of generated connected sources.
    #[arg(long)]
    pub size: Option<usize>,
    /// Edge probability (cross-edge density for split sources).
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of generated sources; instance `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Gp4,
    Connected,
    Interval,
    Split,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (base size for `gp4`, clique size for `split`).
    #[arg(long)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge probability for `connected`, cross density for `split`.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    /// Independent-set size for `split`.
    #[arg(long, default_value_t = 1)]
    pub ind: usize,
    /// Write the instance here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Where to write the split partition (`split` only).
    #[arg(long)]
    pub partition_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgo {
    Interval,
    Approx,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "interval")]
    pub algo: BenchAlgo,
    #[arg(long, value_delimiter = ',', default_values_t = [500, 1000, 2000])]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Timed repetitions per size; the minimum and median are reported.
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
}

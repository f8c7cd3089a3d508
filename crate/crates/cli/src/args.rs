use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "rectlevel", version, about = "Level complexity of axis-parallel rectangle families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated instance file.
    Generate(GenerateArgs),
    /// Vertex depths, piercing lines, packing number and contribution counts.
    Analyze(AnalyzeArgs),
    /// Check every bound and structural property; exit 1 on any failure.
    Verify(VerifyArgs),
    /// Time the arrangement engines over increasing sizes.
    Bench(BenchArgs),
    /// Draw an instance as a standalone SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Grid,
    Staircase,
    Tightness,
    Random,
    Clustered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Oracle,
    Sweep,
    Both,
}

#[derive(Debug, Args)]
pub struct GenParams {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Slabs per direction (grid) or rectangle count (staircase).
    #[arg(long)]
    pub m: Option<usize>,
    /// Rectangle count (tightness, random, clustered).
    #[arg(long)]
    pub n: Option<usize>,
    /// Tightness parameter: `4(p-2)` must divide `n`.
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub clusters: Option<usize>,
    #[arg(long, env = "RECTLEVEL_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Maximum side length in coordinate ranks (random).
    #[arg(long)]
    pub span: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub params: GenParams,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Comma-separated depth thresholds.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub k: Vec<u32>,
    #[arg(long, value_enum, default_value_t = EngineChoice::Sweep)]
    pub engine: EngineChoice,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Largest family for which the exact packing number is computed.
    #[arg(long, default_value_t = rectlevel_core::piercing::DEFAULT_EXACT_LIMIT)]
    pub exact_limit: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub k: Vec<u32>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long, default_value_t = rectlevel_core::piercing::DEFAULT_EXACT_LIMIT)]
    pub exact_limit: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Kind::Random)]
    pub kind: Kind,
    /// Comma-separated ascending family sizes.
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000")]
    pub sizes: Vec<usize>,
    #[arg(long, env = "RECTLEVEL_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Tightness parameter used when `--kind tightness`.
    #[arg(long, default_value_t = 6)]
    pub p: usize,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Largest size timed with the brute-force engine.
    #[arg(long, default_value_t = 1500)]
    pub oracle_cap: usize,
    #[arg(long, value_enum, default_value_t = EngineChoice::Sweep)]
    pub engine: EngineChoice,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Draw the greedy piercing lines.
    #[arg(long)]
    pub show_lines: bool,
    /// Largest vertex depth drawn.
    #[arg(long, default_value_t = 0)]
    pub k: u32,
}

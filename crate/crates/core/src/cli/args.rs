use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "invgen", version, about = "Invariable generation experiments for Weyl and classical groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sampled class labels, one per line.
    Sample(SampleArgs),
    /// Print the achievable proper fixed-subset sizes of one cycle type.
    Fixedsets(FixedsetsArgs),
    /// Estimate one event probability by Monte Carlo.
    Estimate(EstimateArgs),
    /// Estimate an event probability over a list of n.
    Sweep(SweepArgs),
    /// Exact Prob(J^l) for small n.
    Exact(ExactArgs),
    /// Lower bounds for classical groups and the K_G^4 threshold.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    /// A, B, C, D+ or D-
    #[arg(long, allow_hyphen_values = true)]
    pub family: String,
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// Decimal or 0x-prefixed hex.
    #[arg(long)]
    pub seed: Option<String>,
}

#[derive(Debug, Args)]
pub struct FixedsetsArgs {
    /// "3,1" or, with --signed, "3+,1-".
    #[arg(long, allow_hyphen_values = true)]
    pub cycles: String,
    #[arg(long)]
    pub signed: bool,
}

/// Flags shared by `estimate` and `sweep`; unset flags fall back to the config file.
#[derive(Debug, Args, Default)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub family: Option<String>,
    /// J, J_and_not_N, N, all_even or all_positive
    #[arg(long)]
    pub event: Option<String>,
    #[arg(long)]
    pub trials: Option<u64>,
    /// Decimal or 0x-prefixed hex.
    #[arg(long)]
    pub seed: Option<String>,
    /// Worker threads; 0 uses every core. Output does not depend on this.
    #[arg(long)]
    pub threads: Option<usize>,
    /// csv or jsonl
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub confidence: Option<f64>,
    /// TOML file whose keys mirror these flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Defaults of the original GAP runs: l = 4, 100 trials, type A.
    #[arg(long)]
    pub gap_compat: bool,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub common: ExperimentArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated list of n.
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    #[command(flatten)]
    pub common: ExperimentArgs,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub family: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// SL, SU, Sp, SO, SO+ or SO-
    #[arg(long, allow_hyphen_values = true)]
    pub family: String,
    #[arg(long)]
    pub q: Option<u64>,
    /// Print the K_G^4 threshold instead of the bound at one q.
    #[arg(long)]
    pub solve_k: bool,
    /// Parity of q selecting the table row for --solve-k (Sp and SO only).
    #[arg(long, default_value = "odd")]
    pub q_parity: String,
    /// Assumed lower bound on Prob(J^4); decimal or p/q.
    #[arg(long, default_value = "1/3")]
    pub b_j4: String,
    /// Also report the three-element upper bound for this Prob(J^3).
    #[arg(long)]
    pub j3: Option<String>,
    /// Use the sharper bound without the 1/8 term where it holds.
    #[arg(long)]
    pub sharp_a: bool,
    /// printed or leading
    #[arg(long, default_value = "leading")]
    pub expansion: String,
    #[arg(long)]
    pub json: bool,
}

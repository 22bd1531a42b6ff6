//! Resolution of experiment flags against an optional TOML config file.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::args::ExperimentArgs;
use crate::combinatorics::WeylFamily;
use crate::error::{Error, Result};
use crate::montecarlo::{Event, ExperimentSpec, DEFAULT_CONFIDENCE};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_TRIALS: u64 = 10_000;
pub const GAP_TRIALS: u64 = 100;
pub const DEFAULT_L: usize = 4;

/// Keys accepted in a config file. Flags given on the command line win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<usize>,
    pub ns: Option<Vec<usize>>,
    pub l: Option<usize>,
    pub family: Option<String>,
    pub event: Option<String>,
    pub trials: Option<u64>,
    pub seed: Option<SeedValue>,
    pub threads: Option<usize>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub confidence: Option<f64>,
    pub gap_compat: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SeedValue {
    Int(u64),
    Text(String),
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text)
            .map_err(|e| Error::validation(format!("config file {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "json" => Ok(OutputFormat::Jsonl),
            other => Err(Error::validation(format!("unknown format {other:?} (expected csv or jsonl)"))),
        }
    }
}

/// Fully resolved experiment settings; the part that determines the numbers
/// is echoed into every output file.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub ns: Vec<usize>,
    pub l: usize,
    pub family: WeylFamily,
    pub event: Event,
    pub trials: u64,
    pub seed: u64,
    pub confidence: f64,
    pub format: OutputFormat,
    pub gap_compat: bool,
    #[serde(skip)]
    pub threads: usize,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn specs(&self) -> Vec<ExperimentSpec> {
        self.ns
            .iter()
            .map(|&n| {
                ExperimentSpec::new(n, self.l, self.family, self.event, self.trials, self.seed)
                    .with_confidence(self.confidence)
            })
            .collect()
    }
}

pub fn parse_seed(s: &str) -> Result<u64> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse::<u64>(),
    };
    parsed.map_err(|_| Error::validation(format!("bad seed {s:?} (expected a 64-bit decimal or 0x-hex value)")))
}

pub fn resolve(command: &'static str, ns_flag: Option<Vec<usize>>, args: &ExperimentArgs) -> Result<RunConfig> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let gap_compat = args.gap_compat || file.gap_compat.unwrap_or(false);

    let ns = match ns_flag {
        Some(ns) => ns,
        None if command == "estimate" => file.n.map(|n| vec![n]).or(file.ns).unwrap_or_default(),
        None => file.ns.or(file.n.map(|n| vec![n])).unwrap_or_default(),
    };
    if ns.is_empty() {
        return Err(Error::validation(format!("{command} needs n (flag or config key)")));
    }
    let family = match args.family.as_deref().or(file.family.as_deref()) {
        Some(f) => f.parse()?,
        None => WeylFamily::A,
    };
    let event = match args.event.as_deref().or(file.event.as_deref()) {
        Some(e) => e.parse()?,
        None => Event::J,
    };
    let seed = match (&args.seed, &file.seed) {
        (Some(s), _) => parse_seed(s)?,
        (None, Some(SeedValue::Int(v))) => *v,
        (None, Some(SeedValue::Text(s))) => parse_seed(s)?,
        (None, None) => DEFAULT_SEED,
    };
    let format = match args.format.as_deref().or(file.format.as_deref()) {
        Some(f) => f.parse()?,
        None => OutputFormat::Csv,
    };
    let default_trials = if gap_compat { GAP_TRIALS } else { DEFAULT_TRIALS };
    Ok(RunConfig {
        command,
        ns,
        l: args.l.or(file.l).unwrap_or(DEFAULT_L),
        family,
        event,
        trials: args.trials.or(file.trials).unwrap_or(default_trials),
        seed,
        confidence: args.confidence.or(file.confidence).unwrap_or(DEFAULT_CONFIDENCE),
        format,
        gap_compat,
        threads: args.threads.or(file.threads).unwrap_or(0),
        out: args.out.clone().or(file.out),
    })
}

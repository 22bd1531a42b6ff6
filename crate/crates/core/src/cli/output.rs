//! Row output for Monte Carlo runs.
//!
//! CSV files start with `#`-prefixed metadata lines followed by a header row.
//! JSON-lines files start with one `{"meta": ...}` object followed by one
//! object per estimate.

use std::io::Write;

use serde::Serialize;

use super::config::{OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::montecarlo::Estimate;

pub const TOOL: &str = "invgen";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
struct Meta<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub n: usize,
    pub l: usize,
    pub family: String,
    pub event: String,
    pub trials: u64,
    pub successes: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

impl From<&Estimate> for Row {
    fn from(e: &Estimate) -> Self {
        Row {
            n: e.spec.n,
            l: e.spec.l,
            family: e.spec.family.to_string(),
            event: e.spec.event.to_string(),
            trials: e.spec.trials,
            successes: e.successes,
            p_hat: e.p_hat,
            ci_low: e.ci_low,
            ci_high: e.ci_high,
            seed: e.spec.master_seed,
        }
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Io(e.into())
}

pub fn write_rows(out: &mut dyn Write, config: &RunConfig, estimates: &[Estimate]) -> Result<()> {
    let meta = Meta {
        tool: TOOL,
        version: VERSION,
        config,
    };
    match config.format {
        OutputFormat::Csv => {
            writeln!(out, "# tool: {TOOL} {VERSION}")?;
            writeln!(out, "# config: {}", serde_json::to_string(config).map_err(json_err)?)?;
            let mut w = csv::Writer::from_writer(&mut *out);
            for e in estimates {
                w.serialize(Row::from(e)).map_err(|e| Error::Io(e.into()))?;
            }
            w.flush()?;
        }
        OutputFormat::Jsonl => {
            writeln!(out, "{}", serde_json::json!({ "meta": meta }))?;
            for e in estimates {
                writeln!(out, "{}", serde_json::to_string(&Row::from(e)).map_err(json_err)?)?;
            }
        }
    }
    Ok(())
}

//! Command-line surface. The `invgen` binary only forwards to [`run`].

mod args;
mod config;
mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::Parser;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub use args::{Cli, Command};
pub use config::{parse_seed, resolve, FileConfig, OutputFormat, RunConfig, DEFAULT_SEED};
pub use output::{write_rows, Row, TOOL, VERSION};

use crate::bounds::{self, BoundOptions, ClassicalFamily, ClassicalKind, Parity};
use crate::combinatorics::{fixed_sizes, signed_fixed_sets, Partition, SignedCycleType, WeylFamily};
use crate::error::{Error, Result};
use crate::exact;
use crate::montecarlo;
use crate::sampling::{sample_partition, sample_signed, sample_signed_conditioned, RngState};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_RUNTIME
            }
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Sample(a) => cmd_sample(a, out),
        Command::Fixedsets(a) => cmd_fixedsets(a, out),
        Command::Estimate(a) => {
            let cfg = resolve("estimate", a.n.map(|n| vec![n]), &a.common)?;
            cmd_experiment(&cfg, out)
        }
        Command::Sweep(a) => {
            let cfg = resolve("sweep", a.ns.clone(), &a.common)?;
            cmd_experiment(&cfg, out)
        }
        Command::Exact(a) => cmd_exact(a, out),
        Command::Bounds(a) => cmd_bounds(a, out),
    }
}

fn cmd_sample(a: &args::SampleArgs, out: &mut dyn Write) -> Result<()> {
    let family: WeylFamily = a.family.parse()?;
    let seed = a.seed.as_deref().map(parse_seed).transpose()?.unwrap_or(DEFAULT_SEED);
    if a.n == 0 {
        return Err(Error::validation("n must be at least 1"));
    }
    // One stream per emitted label, like one stream per trial.
    for i in 0..a.count {
        let mut rng = RngState::new(seed, i);
        let line = match family {
            WeylFamily::A => sample_partition(a.n, &mut rng)?.to_string(),
            WeylFamily::B | WeylFamily::C => sample_signed(a.n, &mut rng)?.to_string(),
            WeylFamily::DPlus | WeylFamily::DMinus => {
                let sign = family.required_sign().expect("D sectors fix a sign");
                sample_signed_conditioned(a.n, sign, &mut rng)?.to_string()
            }
        };
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn cmd_fixedsets(a: &args::FixedsetsArgs, out: &mut dyn Write) -> Result<()> {
    let line = if a.signed {
        let s: SignedCycleType = a.cycles.parse()?;
        let mut pairs = signed_fixed_sets(&s).pairs();
        // Largest sizes first, `+` before `-`.
        pairs.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        pairs
            .iter()
            .map(|(k, sign)| format!("({k},{sign})"))
            .collect::<Vec<_>>()
            .join(" ")
    } else {
        let p: Partition = a.cycles.parse()?;
        fixed_sizes(&p)
            .sizes()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "{line}")?;
    Ok(())
}

/// Run the experiments of `cfg` and write rows to `cfg.out` or `out`.
pub fn cmd_experiment(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let specs = cfg.specs();
    for (i, spec) in specs.iter().enumerate() {
        spec.validate().map_err(|e| Error::InSpec {
            index: i,
            source: Box::new(e),
        })?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let estimates = pool.install(|| {
        if cfg.command == "estimate" {
            specs.iter().map(montecarlo::run).collect::<Result<Vec<_>>>()
        } else {
            montecarlo::sweep(&specs)
        }
    })?;
    match &cfg.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_rows(&mut w, cfg, &estimates)?;
            w.flush()?;
        }
        None => write_rows(out, cfg, &estimates)?,
    }
    Ok(())
}

fn decimal(r: &BigRational) -> String {
    format!("{:.12}", r.to_f64().unwrap_or(f64::NAN))
}

fn cmd_exact(a: &args::ExactArgs, out: &mut dyn Write) -> Result<()> {
    let family: WeylFamily = a.family.parse()?;
    let p = exact::exact_prob_j(a.n, a.l, family)?;
    if a.json {
        let v = serde_json::json!({
            "n": a.n, "l": a.l, "family": family.name(),
            "prob_j": p.to_string(), "decimal": p.to_f64(),
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "{p}")?;
        writeln!(out, "{}", decimal(&p))?;
    }
    Ok(())
}

/// Accepts a decimal (`0.333`) or a fraction (`1/3`).
pub fn parse_probability(s: &str) -> Result<f64> {
    let t = s.trim();
    let value = match t.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| Error::validation(format!("bad fraction {s:?}")))?;
            let q: f64 = q.trim().parse().map_err(|_| Error::validation(format!("bad fraction {s:?}")))?;
            p / q
        }
        None => t.parse().map_err(|_| Error::validation(format!("bad probability {s:?}")))?,
    };
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::validation(format!("probability {s:?} is outside [0, 1]")));
    }
    Ok(value)
}

fn parse_parity(s: &str) -> Result<Parity> {
    match s.trim().to_ascii_lowercase().as_str() {
        "odd" => Ok(Parity::Odd),
        "even" => Ok(Parity::Even),
        other => Err(Error::validation(format!("unknown parity {other:?} (expected odd or even)"))),
    }
}

fn cmd_bounds(a: &args::BoundsArgs, out: &mut dyn Write) -> Result<()> {
    let kind: ClassicalKind = a.family.parse()?;
    let b_j4 = parse_probability(&a.b_j4)?;
    let opts = BoundOptions {
        expansion: a.expansion.parse()?,
        sharp_a: a.sharp_a,
    };
    if a.solve_k {
        let parity = parse_parity(&a.q_parity)?;
        let k = bounds::solve_k4(kind, parity, b_j4, &opts)?;
        if a.json {
            let v = serde_json::json!({
                "family": kind.name(), "q_parity": parity, "b_j4": b_j4,
                "expansion": opts.expansion, "sharp_a": opts.sharp_a, "K": k,
            });
            writeln!(out, "{v}")?;
        } else {
            writeln!(out, "K = {k}")?;
        }
        return Ok(());
    }
    let q = a
        .q
        .ok_or_else(|| Error::validation("bounds needs --q or --solve-k"))?;
    let family = ClassicalFamily::new(kind, q)?;
    let report = bounds::i4_lower_bound(&family, b_j4, &opts)?;
    let i3 = a
        .j3
        .as_deref()
        .map(|j| bounds::i3_upper_bound(&family, parse_probability(j)?, opts.expansion))
        .transpose()?;
    if a.json {
        let mut v = serde_json::to_value(report).map_err(|e| Error::Io(e.into()))?;
        if let Some(i3) = i3 {
            v["i3_upper"] = serde_json::json!(i3);
        }
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "family       {} (q = {})", kind, q)?;
        writeln!(out, "weyl_family  {}", report.weyl_family)?;
        writeln!(out, "expansion    {}", opts.expansion)?;
        writeln!(out, "s            {:.6}{}", report.s, if report.s_clamped { " (clamped)" } else { "" })?;
        writeln!(out, "b_J4         {:.6}", report.b_j4)?;
        writeln!(out, "i4_lower     {:.6}", report.i4_lower)?;
        if let Some(i3) = i3 {
            writeln!(out, "i3_upper     {i3:.6}")?;
        }
    }
    Ok(())
}

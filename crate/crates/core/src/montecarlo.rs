//! Monte Carlo estimation of fixed-set events for tuples of random elements.
//!
//! Trial `t` of a run draws from stream `t` of the run's master seed, so the
//! success count does not depend on how trials are spread over threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::combinatorics::{fixed_sizes_into, signed_fixed_sets_into, Sign, WeylFamily};
use crate::error::{Error, Result};
use crate::sampling::{
    sample_conditioned_into, sample_lengths_into, sample_signed_into, Conditioning, RngState,
};
use crate::stats::{wilson_interval, z_for_confidence};

pub const DEFAULT_CONFIDENCE: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    /// No common proper fixed (signed) subset size.
    J,
    /// `J` and not all total signs equal.
    JAndNotN,
    /// All total signs equal.
    N,
    /// Every cycle of every element has even length.
    AllEven,
    /// Every cycle of every element is positive.
    AllPositive,
}

impl Event {
    pub fn name(self) -> &'static str {
        match self {
            Event::J => "J",
            Event::JAndNotN => "J_and_not_N",
            Event::N => "N",
            Event::AllEven => "all_even",
            Event::AllPositive => "all_positive",
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Event {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "j" => Ok(Event::J),
            "j_and_not_n" | "j-and-not-n" => Ok(Event::JAndNotN),
            "n" => Ok(Event::N),
            "all_even" | "all-even" => Ok(Event::AllEven),
            "all_positive" | "all-positive" => Ok(Event::AllPositive),
            other => Err(Error::validation(format!(
                "unknown event {other:?} (expected J, J_and_not_N, N, all_even, all_positive)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub n: usize,
    pub l: usize,
    pub family: WeylFamily,
    pub event: Event,
    pub trials: u64,
    pub master_seed: u64,
    pub confidence: f64,
}

impl ExperimentSpec {
    pub fn new(n: usize, l: usize, family: WeylFamily, event: Event, trials: u64, master_seed: u64) -> Self {
        ExperimentSpec {
            n,
            l,
            family,
            event,
            trials,
            master_seed,
            confidence: DEFAULT_CONFIDENCE,
        }
    }

    pub fn with_confidence(mut self, confidence: f64) -> Self {
        self.confidence = confidence;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::validation("n must be at least 1"));
        }
        if self.l == 0 {
            return Err(Error::validation("l must be at least 1"));
        }
        if self.trials == 0 {
            return Err(Error::validation("trials must be at least 1"));
        }
        if !(self.confidence > 0.0 && self.confidence < 1.0) {
            return Err(Error::validation("confidence must lie in (0, 1)"));
        }
        let needs_signs = matches!(self.event, Event::JAndNotN | Event::N | Event::AllPositive);
        if needs_signs && !self.family.is_signed() {
            return Err(Error::validation(format!(
                "event {} needs a signed family, got {}",
                self.event, self.family
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub spec: ExperimentSpec,
    pub successes: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    fn from_count(spec: ExperimentSpec, successes: u64) -> Self {
        let (ci_low, ci_high) = wilson_interval(successes, spec.trials, z_for_confidence(spec.confidence));
        Estimate {
            spec,
            successes,
            p_hat: successes as f64 / spec.trials as f64,
            ci_low,
            ci_high,
        }
    }

    /// Binomial standard error at the point estimate.
    pub fn sigma(&self) -> f64 {
        (self.p_hat * (1.0 - self.p_hat) / self.spec.trials as f64).sqrt()
    }

    /// Wilson interval at `z` standard deviations.
    pub fn wilson_band(&self, z: f64) -> (f64, f64) {
        wilson_interval(self.successes, self.spec.trials, z)
    }

    /// True iff `p` lies in the Wilson band at `z` standard deviations.
    pub fn consistent_with(&self, p: f64, z: f64) -> bool {
        let (lo, hi) = self.wilson_band(z);
        lo <= p && p <= hi
    }
}

/// Per-thread buffers reused across trials.
struct Scratch {
    lengths: Vec<usize>,
    cycles: Vec<(usize, Sign)>,
    acc_plus: Bitset,
    acc_minus: Bitset,
    plus: Bitset,
    minus: Bitset,
}

impl Scratch {
    fn new() -> Self {
        Scratch {
            lengths: Vec::new(),
            cycles: Vec::new(),
            acc_plus: Bitset::new(0),
            acc_minus: Bitset::new(0),
            plus: Bitset::new(0),
            minus: Bitset::new(0),
        }
    }
}

/// Outcome of a single trial.
fn run_trial(spec: &ExperimentSpec, trial: u64, s: &mut Scratch) -> bool {
    let mut rng = RngState::new(spec.master_seed, trial);
    let n = spec.n;
    let mut first_sign = None;
    let mut same_sign = true;
    let mut all_even = true;
    let mut all_positive = true;
    // While true, the common achievable set may still be non-empty.
    let mut shared = true;
    let needs_profiles = matches!(spec.event, Event::J | Event::JAndNotN);

    for i in 0..spec.l {
        match spec.family {
            WeylFamily::A => {
                sample_lengths_into(n, &mut rng, &mut s.lengths);
            }
            WeylFamily::B | WeylFamily::C => sample_signed_into(n, &mut rng, &mut s.cycles),
            WeylFamily::DPlus => sample_conditioned_into(n, Sign::Plus, Conditioning::SignFlip, &mut rng, &mut s.cycles),
            WeylFamily::DMinus => {
                sample_conditioned_into(n, Sign::Minus, Conditioning::SignFlip, &mut rng, &mut s.cycles)
            }
        }
        if spec.family.is_signed() {
            let total = s.cycles.iter().fold(Sign::Plus, |acc, c| acc * c.1);
            match first_sign {
                None => first_sign = Some(total),
                Some(f) => same_sign &= f == total,
            }
            all_even &= s.cycles.iter().all(|c| c.0 % 2 == 0);
            all_positive &= s.cycles.iter().all(|c| c.1 == Sign::Plus);
        } else {
            all_even &= s.lengths.iter().all(|&len| len % 2 == 0);
        }

        match spec.event {
            Event::AllEven if !all_even => return false,
            Event::AllPositive if !all_positive => return false,
            Event::N if !same_sign => return false,
            _ => {}
        }
        if !needs_profiles || !shared {
            continue;
        }

        match spec.family {
            WeylFamily::A | WeylFamily::C => {
                if spec.family == WeylFamily::C {
                    s.lengths.clear();
                    s.lengths.extend(s.cycles.iter().map(|c| c.0));
                }
                let target = if i == 0 { &mut s.acc_plus } else { &mut s.plus };
                fixed_sizes_into(&s.lengths, target);
                if i > 0 {
                    s.acc_plus.and_assign(&s.plus);
                }
                shared = !s.acc_plus.none();
            }
            WeylFamily::B | WeylFamily::DPlus | WeylFamily::DMinus => {
                if i == 0 {
                    signed_fixed_sets_into(&s.cycles, &mut s.acc_plus, &mut s.acc_minus);
                } else {
                    signed_fixed_sets_into(&s.cycles, &mut s.plus, &mut s.minus);
                    s.acc_plus.and_assign(&s.plus);
                    s.acc_minus.and_assign(&s.minus);
                }
                shared = !(s.acc_plus.none() && s.acc_minus.none());
            }
        }
    }

    match spec.event {
        Event::J => !shared,
        Event::JAndNotN => !shared && !same_sign,
        Event::N => same_sign,
        Event::AllEven => all_even,
        Event::AllPositive => all_positive,
    }
}

/// Run every trial of `spec` on the current rayon pool.
pub fn run(spec: &ExperimentSpec) -> Result<Estimate> {
    spec.validate()?;
    let successes: u64 = (0..spec.trials)
        .into_par_iter()
        .map_init(Scratch::new, |scratch, t| u64::from(run_trial(spec, t, scratch)))
        .sum();
    Ok(Estimate::from_count(*spec, successes))
}

/// Outcome of trial `trial` alone; `run` counts these over `0..trials`.
pub fn trial_outcome(spec: &ExperimentSpec, trial: u64) -> Result<bool> {
    spec.validate()?;
    Ok(run_trial(spec, trial, &mut Scratch::new()))
}

/// SplitMix64 finalizer applied to `seed + (index + 1) * golden`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Run each spec with the seed `derive_seed(spec.master_seed, index)`.
///
/// The returned estimates carry the derived seed, so any row can be
/// reproduced on its own with `run`.
pub fn sweep(specs: &[ExperimentSpec]) -> Result<Vec<Estimate>> {
    if specs.is_empty() {
        return Err(Error::validation("sweep needs at least one spec"));
    }
    specs
        .iter()
        .enumerate()
        .map(|(i, spec)| {
            let derived = ExperimentSpec {
                master_seed: derive_seed(spec.master_seed, i as u64),
                ..*spec
            };
            run(&derived).map_err(|e| Error::InSpec {
                index: i,
                source: Box::new(e),
            })
        })
        .collect()
}

//! Seeded samplers for class labels of uniform random Weyl group elements.
//!
//! Every draw comes from a ChaCha8 stream keyed by a 64-bit master seed and
//! a 64-bit stream index, so a given `(seed, stream)` pair yields the same
//! labels on every platform and under any thread schedule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{Partition, Sign, SignedCycleType};
use crate::error::{Error, Result};

/// Deterministic generator state for one stream.
#[derive(Debug, Clone)]
pub struct RngState {
    rng: ChaCha8Rng,
}

impl RngState {
    pub fn new(master_seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        rng.set_stream(stream);
        RngState { rng }
    }

    /// Uniform on `1..=m`.
    #[inline]
    fn uniform_1_to(&mut self, m: u64) -> u64 {
        self.rng.random_range(1..=m)
    }

    #[inline]
    fn fair_sign(&mut self) -> Sign {
        if self.rng.random::<bool>() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// How to condition a signed sample on its total sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Conditioning {
    /// Flip the sign of the last emitted cycle when the total sign is wrong.
    #[default]
    SignFlip,
    /// Redraw until the total sign matches.
    Rejection,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::validation("n must be at least 1"))
    } else {
        Ok(())
    }
}

/// Cycle lengths of a uniform element of `S_n`, in emission order: the cycle
/// through the smallest remaining point has length uniform on what is left.
pub(crate) fn sample_lengths_into(n: usize, rng: &mut RngState, out: &mut Vec<usize>) {
    out.clear();
    let mut remaining = n as u64;
    while remaining > 0 {
        let len = rng.uniform_1_to(remaining);
        out.push(len as usize);
        remaining -= len;
    }
}

/// Signed cycles of a uniform element of the hyperoctahedral group, in
/// emission order. Lengths are drawn first, then one fair sign per cycle.
pub(crate) fn sample_signed_into(n: usize, rng: &mut RngState, out: &mut Vec<(usize, Sign)>) {
    out.clear();
    let mut remaining = n as u64;
    while remaining > 0 {
        let len = rng.uniform_1_to(remaining);
        out.push((len as usize, Sign::Plus));
        remaining -= len;
    }
    for c in out.iter_mut() {
        c.1 = rng.fair_sign();
    }
}

pub(crate) fn sample_conditioned_into(
    n: usize,
    want: Sign,
    method: Conditioning,
    rng: &mut RngState,
    out: &mut Vec<(usize, Sign)>,
) {
    loop {
        sample_signed_into(n, rng, out);
        let total = out.iter().fold(Sign::Plus, |acc, c| acc * c.1);
        if total == want {
            return;
        }
        match method {
            Conditioning::SignFlip => {
                let last = out.last_mut().expect("n >= 1 gives at least one cycle");
                last.1 = last.1.flip();
                return;
            }
            Conditioning::Rejection => continue,
        }
    }
}

pub fn sample_partition(n: usize, rng: &mut RngState) -> Result<Partition> {
    check_n(n)?;
    let mut parts = Vec::new();
    sample_lengths_into(n, rng, &mut parts);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition::from_sorted_unchecked(parts))
}

pub fn sample_signed(n: usize, rng: &mut RngState) -> Result<SignedCycleType> {
    check_n(n)?;
    let mut cycles = Vec::new();
    sample_signed_into(n, rng, &mut cycles);
    SignedCycleType::new(cycles)
}

pub fn sample_signed_conditioned(n: usize, want_sign: Sign, rng: &mut RngState) -> Result<SignedCycleType> {
    sample_signed_conditioned_with(n, want_sign, Conditioning::SignFlip, rng)
}

pub fn sample_signed_conditioned_with(
    n: usize,
    want_sign: Sign,
    method: Conditioning,
    rng: &mut RngState,
) -> Result<SignedCycleType> {
    check_n(n)?;
    let mut cycles = Vec::new();
    sample_conditioned_into(n, want_sign, method, rng, &mut cycles);
    SignedCycleType::new(cycles)
}

//! Achievable sizes of proper fixed subsets of a single element.
//!
//! A subset fixed by an element of `S_n` is a union of its cycles, so the
//! achievable sizes are the subset sums of the cycle lengths. For a signed
//! element the sign of a fixed subset is the product of the signs of the
//! cycles it is made of. Sizes `0` and `n` are never recorded.

use super::{Partition, Sign, SignedCycleType};
use crate::bitset::Bitset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile {
    n: usize,
    achievable: Bitset,
}

impl SizeProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, k: usize) -> bool {
        self.achievable.get(k)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.achievable.iter_ones().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.achievable.none()
    }

    /// Bits `0..=n`; bits `0` and `n` are always clear.
    pub fn bits(&self) -> &Bitset {
        &self.achievable
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSizeProfile {
    n: usize,
    plus: Bitset,
    minus: Bitset,
    total_sign: Sign,
}

impl SignedSizeProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total_sign(&self) -> Sign {
        self.total_sign
    }

    pub fn contains(&self, k: usize, sign: Sign) -> bool {
        match sign {
            Sign::Plus => self.plus.get(k),
            Sign::Minus => self.minus.get(k),
        }
    }

    pub fn plus(&self) -> &Bitset {
        &self.plus
    }

    pub fn minus(&self) -> &Bitset {
        &self.minus
    }

    /// All achievable `(size, sign)` pairs, ordered by size then `+` first.
    pub fn pairs(&self) -> Vec<(usize, Sign)> {
        let mut out: Vec<(usize, Sign)> = self
            .plus
            .iter_ones()
            .map(|k| (k, Sign::Plus))
            .chain(self.minus.iter_ones().map(|k| (k, Sign::Minus)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.plus.none() && self.minus.none()
    }
}

pub fn fixed_sizes(p: &Partition) -> SizeProfile {
    let mut bits = Bitset::new(0);
    fixed_sizes_into(p.parts(), &mut bits);
    SizeProfile {
        n: p.n(),
        achievable: bits,
    }
}

pub fn signed_fixed_sets(s: &SignedCycleType) -> SignedSizeProfile {
    let mut plus = Bitset::new(0);
    let mut minus = Bitset::new(0);
    signed_fixed_sets_into(s.cycles(), &mut plus, &mut minus);
    SignedSizeProfile {
        n: s.n(),
        plus,
        minus,
        total_sign: s.total_sign(),
    }
}

/// Subset sums of `parts` into `bits` (resized to `n + 1` bits, `0` and `n` cleared).
///
/// Parts are folded in from the back so that, for non-increasing input, the
/// short cycles run while the reachable prefix is still small.
pub(crate) fn fixed_sizes_into(parts: &[usize], bits: &mut Bitset) {
    let n: usize = parts.iter().sum();
    bits.reset(n + 1);
    bits.set(0);
    let mut reach = 1;
    for &len in parts.iter().rev() {
        bits.shift_or(len, reach);
        reach += len;
    }
    bits.clear(0);
    bits.clear(n);
}

pub(crate) fn signed_fixed_sets_into(cycles: &[(usize, Sign)], plus: &mut Bitset, minus: &mut Bitset) {
    let n: usize = cycles.iter().map(|c| c.0).sum();
    plus.reset(n + 1);
    minus.reset(n + 1);
    plus.set(0);
    let mut reach = 1;
    for &(len, sign) in cycles.iter().rev() {
        match sign {
            Sign::Plus => {
                plus.shift_or(len, reach);
                minus.shift_or(len, reach);
            }
            Sign::Minus => Bitset::cross_shift_or(plus, minus, len, reach),
        }
        reach += len;
    }
    for b in [plus, minus] {
        b.clear(0);
        b.clear(n);
    }
}

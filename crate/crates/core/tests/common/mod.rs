//! Test-only brute force: explicit group elements, explicit subset enumeration.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub mod props;

/// Every permutation of `0..n` as an image vector.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycles of a signed permutation `(perm, flips)` as `(length, is_negative)`,
/// where a cycle is negative iff it contains an odd number of flipped points.
pub fn signed_cycles(perm: &[usize], flips: u32) -> Vec<(usize, bool)> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut neg, mut i) = (0, false, start);
        while !seen[i] {
            seen[i] = true;
            len += 1;
            neg ^= flips >> i & 1 == 1;
            i = perm[i];
        }
        out.push((len, neg));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Class label -> number of elements, for `S_n` (signs all positive) or the
/// full hyperoctahedral group. `sector` keeps only one total sign.
pub fn brute_classes(n: usize, signed: bool, sector: Option<bool>) -> BTreeMap<Vec<(usize, bool)>, u64> {
    let mut out = BTreeMap::new();
    for perm in permutations(n) {
        let flip_range = if signed { 0..1u32 << n } else { 0..1 };
        for flips in flip_range {
            let cyc = signed_cycles(&perm, flips);
            let total_neg = cyc.iter().filter(|c| c.1).count() % 2 == 1;
            if sector.is_some_and(|want_neg| want_neg != total_neg) {
                continue;
            }
            *out.entry(cyc).or_default() += 1;
        }
    }
    out
}

/// Achievable proper `(size, negative)` pairs by enumerating every cycle subset.
pub fn brute_signed_profile(cycles: &[(usize, bool)]) -> BTreeSet<(usize, bool)> {
    let n: usize = cycles.iter().map(|c| c.0).sum();
    let r = cycles.len();
    (0u64..1 << r)
        .filter_map(|mask| {
            let (mut k, mut neg) = (0, false);
            for (i, c) in cycles.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    k += c.0;
                    neg ^= c.1;
                }
            }
            (k > 0 && k < n).then_some((k, neg))
        })
        .collect()
}

pub fn brute_unsigned_profile(lengths: &[usize]) -> BTreeSet<usize> {
    let cycles: Vec<(usize, bool)> = lengths.iter().map(|&l| (l, false)).collect();
    brute_signed_profile(&cycles).into_iter().map(|p| p.0).collect()
}

/// `Prob(J^l)` by enumerating every `l`-tuple of classes and intersecting
/// their profiles directly.
pub fn brute_prob_j(classes: &BTreeMap<Vec<(usize, bool)>, u64>, l: usize, use_signs: bool) -> BigRational {
    let total: u64 = classes.values().sum();
    let profiles: Vec<(BTreeSet<(usize, bool)>, u64)> = classes
        .iter()
        .map(|(cyc, &count)| {
            let prof = if use_signs {
                brute_signed_profile(cyc)
            } else {
                let lengths: Vec<usize> = cyc.iter().map(|c| c.0).collect();
                brute_unsigned_profile(&lengths).into_iter().map(|k| (k, false)).collect()
            };
            (prof, count)
        })
        .collect();

    fn rec(
        profiles: &[(BTreeSet<(usize, bool)>, u64)],
        depth: usize,
        acc: &BTreeSet<(usize, bool)>,
        weight: &BigInt,
        sum: &mut BigInt,
    ) {
        if depth == 0 {
            if acc.is_empty() {
                *sum += weight;
            }
            return;
        }
        for (prof, count) in profiles {
            let next: BTreeSet<_> = acc.intersection(prof).cloned().collect();
            rec(profiles, depth - 1, &next, &(weight * BigInt::from(*count)), sum);
        }
    }

    let mut sum = BigInt::zero();
    for (prof, count) in &profiles {
        rec(&profiles, l - 1, prof, &BigInt::from(*count), &mut sum);
    }
    BigRational::new(sum, num_traits::pow(BigInt::from(total), l))
}

pub fn one() -> BigRational {
    BigRational::one()
}

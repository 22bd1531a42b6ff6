use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sign of a cycle of a signed permutation, or of a whole element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A multiset of cycle lengths summing to `n`, stored in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    n: usize,
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::validation("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::validation("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(Partition { n, parts })
    }

    /// Caller guarantees `parts` is non-empty, positive and sorted non-increasing.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition {
            n: parts.iter().sum(),
            parts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_cycles(&self) -> usize {
        self.parts.len()
    }

    /// `m[j]` is the number of parts equal to `j`, for `j` in `0..=n`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.n + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

pub fn make_partition(parts: &[usize]) -> Result<Partition> {
    Partition::new(parts.to_vec())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = split_tokens(s)?
            .into_iter()
            .map(|tok| parse_length(tok, s))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Cycle lengths decorated with signs: the class label in the hyperoctahedral group.
///
/// Cycles are kept sorted by length descending, then `+` before `-`, so equal
/// classes compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCycleType {
    n: usize,
    cycles: Vec<(usize, Sign)>,
}

impl SignedCycleType {
    pub fn new(mut cycles: Vec<(usize, Sign)>) -> Result<Self> {
        if cycles.is_empty() {
            return Err(Error::validation("a signed cycle type needs at least one cycle"));
        }
        if cycles.iter().any(|&(len, _)| len == 0) {
            return Err(Error::validation("cycle lengths must be positive"));
        }
        cycles.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let n = cycles.iter().map(|c| c.0).sum();
        Ok(SignedCycleType { n, cycles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[(usize, Sign)] {
        &self.cycles
    }

    pub fn total_sign(&self) -> Sign {
        self.cycles.iter().fold(Sign::Plus, |acc, &(_, s)| acc * s)
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// Underlying cycle lengths with the signs dropped.
    pub fn project(&self) -> Partition {
        // Already non-increasing by length.
        Partition::from_sorted_unchecked(self.cycles.iter().map(|c| c.0).collect())
    }
}

pub fn project(s: &SignedCycleType) -> Partition {
    s.project()
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (len, sign)) in self.cycles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{len}{sign}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedCycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = split_tokens(s)?
            .into_iter()
            .map(|tok| {
                let sign = match tok.chars().last() {
                    Some('+') => Sign::Plus,
                    Some('-') => Sign::Minus,
                    _ => {
                        return Err(Error::validation(format!(
                            "token {tok:?} in {s:?} must end in '+' or '-'"
                        )))
                    }
                };
                Ok((parse_length(&tok[..tok.len() - 1], s)?, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedCycleType::new(cycles)
    }
}

fn split_tokens(s: &str) -> Result<Vec<&str>> {
    let toks: Vec<&str> = s.split(',').map(str::trim).collect();
    if toks.iter().any(|t| t.is_empty()) {
        return Err(Error::validation(format!("malformed cycle list {s:?}")));
    }
    Ok(toks)
}

fn parse_length(tok: &str, whole: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::validation(format!("bad cycle length {tok:?} in {whole:?}")))
}

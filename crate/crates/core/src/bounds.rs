//! Lower bounds on invariable generation of finite classical groups.
//!
//! For `l = 4` random elements of `G`,
//!
//! ```text
//! Prob(I_G^4) >= (7/8) Prob(J^4) - Prob(not all separable)
//! ```
//!
//! where `J` is the fixed-set event in the Weyl group. The chance that some
//! element is not separable is modelled as `1 - s^4`, with `s` the limiting
//! proportion of separable elements of one random element.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::WeylFamily;
use crate::error::{Error, Result};

/// Default assumed lower bound for `Prob(J^4)`.
pub const DEFAULT_B_J4: f64 = 1.0 / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalKind {
    SL,
    SU,
    Sp,
    /// `SO_{2n+1}`.
    SOOddDim,
    /// `SO_{2n}^+`.
    SOEvenDimPlus,
    /// `SO_{2n}^-`.
    SOEvenDimMinus,
}

impl ClassicalKind {
    pub const ALL: [ClassicalKind; 6] = [
        ClassicalKind::SL,
        ClassicalKind::SU,
        ClassicalKind::Sp,
        ClassicalKind::SOOddDim,
        ClassicalKind::SOEvenDimPlus,
        ClassicalKind::SOEvenDimMinus,
    ];

    pub fn weyl_family(self) -> WeylFamily {
        match self {
            ClassicalKind::SL | ClassicalKind::SU => WeylFamily::A,
            ClassicalKind::Sp => WeylFamily::C,
            ClassicalKind::SOOddDim => WeylFamily::B,
            ClassicalKind::SOEvenDimPlus => WeylFamily::DPlus,
            ClassicalKind::SOEvenDimMinus => WeylFamily::DMinus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassicalKind::SL => "SL",
            ClassicalKind::SU => "SU",
            ClassicalKind::Sp => "Sp",
            ClassicalKind::SOOddDim => "SO",
            ClassicalKind::SOEvenDimPlus => "SO+",
            ClassicalKind::SOEvenDimMinus => "SO-",
        }
    }
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "SL" => Ok(ClassicalKind::SL),
            "SU" => Ok(ClassicalKind::SU),
            "Sp" | "SP" => Ok(ClassicalKind::Sp),
            "SO" => Ok(ClassicalKind::SOOddDim),
            "SO+" => Ok(ClassicalKind::SOEvenDimPlus),
            "SO-" => Ok(ClassicalKind::SOEvenDimMinus),
            other => Err(Error::validation(format!(
                "unknown classical family {other:?} (expected SL, SU, Sp, SO, SO+ or SO-)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(q: u64) -> Parity {
        if q.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Rows of the separable-proportion table, selected by group and parity of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeparableRow {
    /// `1 - 1/q`, for SL and SU.
    Linear,
    /// `1 - 2/q + 2/q^2`: Sp and SO with even `q`.
    EvenQ,
    /// `1 - 3/q + 5/q^2`: Sp with odd `q`.
    SpOddQ,
    /// `1 - 2/(q-1) - 1/(q-1)^2`: SO with odd `q`, an explicit lower bound.
    SOOddQ,
}

impl SeparableRow {
    pub fn for_kind(kind: ClassicalKind, parity: Parity) -> SeparableRow {
        match (kind, parity) {
            (ClassicalKind::SL | ClassicalKind::SU, _) => SeparableRow::Linear,
            (ClassicalKind::Sp, Parity::Odd) => SeparableRow::SpOddQ,
            (_, Parity::Even) => SeparableRow::EvenQ,
            (_, Parity::Odd) => SeparableRow::SOOddQ,
        }
    }

    /// Unclamped value at `q`.
    pub fn eval(self, q: f64, expansion: Expansion) -> f64 {
        let leading = expansion == Expansion::Leading;
        match self {
            SeparableRow::Linear => 1.0 - 1.0 / q,
            SeparableRow::EvenQ if leading => 1.0 - 2.0 / q,
            SeparableRow::EvenQ => 1.0 - 2.0 / q + 2.0 / (q * q),
            SeparableRow::SpOddQ if leading => 1.0 - 3.0 / q,
            SeparableRow::SpOddQ => 1.0 - 3.0 / q + 5.0 / (q * q),
            SeparableRow::SOOddQ => {
                let r = q - 1.0;
                1.0 - 2.0 / r - 1.0 / (r * r)
            }
        }
    }
}

/// How much of each asymptotic expansion to keep.
///
/// `Printed` keeps every printed term and drops only the `O(1/q^3)` remainder.
/// `Leading` keeps terms through `1/q`. The SO odd-`q` row is an explicit
/// bound rather than an expansion and is used as is in both modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Expansion {
    Printed,
    Leading,
}

impl FromStr for Expansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "printed" => Ok(Expansion::Printed),
            "leading" => Ok(Expansion::Leading),
            other => Err(Error::validation(format!(
                "unknown expansion {other:?} (expected printed or leading)"
            ))),
        }
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expansion::Printed => "printed",
            Expansion::Leading => "leading",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalFamily {
    pub kind: ClassicalKind,
    pub q: u64,
}

impl ClassicalFamily {
    pub fn new(kind: ClassicalKind, q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::validation(format!("q must be at least 2, got {q}")));
        }
        Ok(ClassicalFamily { kind, q })
    }

    /// Sp with `q` of the stated parity; errors when `q` has the other parity.
    pub fn sp_with_parity(q: u64, parity: Parity) -> Result<Self> {
        if Parity::of(q) != parity {
            return Err(Error::validation(format!("Sp with {parity:?} q needs a q of that parity, got {q}")));
        }
        ClassicalFamily::new(ClassicalKind::Sp, q)
    }

    pub fn row(&self) -> SeparableRow {
        SeparableRow::for_kind(self.kind, Parity::of(self.q))
    }
}

pub fn weyl_family_of(f: &ClassicalFamily) -> WeylFamily {
    f.kind.weyl_family()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparableProportion {
    pub value: f64,
    /// The formula went negative at this `q` and was raised to zero.
    pub clamped: bool,
}

pub fn separable_proportion(f: &ClassicalFamily, expansion: Expansion) -> SeparableProportion {
    let raw = f.row().eval(f.q as f64, expansion);
    SeparableProportion {
        value: raw.clamp(0.0, 1.0),
        clamped: raw < 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundOptions {
    pub expansion: Expansion,
    /// Use `Prob(I_G^4) >= Prob(J^4) - Prob(S^c)` where that sharper form
    /// holds (SL, SU, even-dimensional SO, Sp with odd `q`).
    pub sharp_a: bool,
}

impl BoundOptions {
    pub fn new(expansion: Expansion) -> Self {
        BoundOptions {
            expansion,
            sharp_a: false,
        }
    }
}

fn sharp_applies(kind: ClassicalKind, parity: Parity) -> bool {
    match kind {
        ClassicalKind::SL | ClassicalKind::SU | ClassicalKind::SOEvenDimPlus | ClassicalKind::SOEvenDimMinus => true,
        ClassicalKind::Sp => parity == Parity::Odd,
        ClassicalKind::SOOddDim => false,
    }
}

/// Multiplier on `Prob(J^4)` for the chosen form of the bound.
fn j_factor(kind: ClassicalKind, parity: Parity, opts: &BoundOptions) -> Result<f64> {
    if !opts.sharp_a {
        // 1 - 2^{1-l} with l = 4
        return Ok(7.0 / 8.0);
    }
    if sharp_applies(kind, parity) {
        Ok(1.0)
    } else {
        Err(Error::validation(format!(
            "the sharper bound does not hold for {kind} with {parity:?} q"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub family: ClassicalFamily,
    pub weyl_family: WeylFamily,
    pub s: f64,
    pub s_clamped: bool,
    pub b_j4: f64,
    pub l: usize,
    pub i4_lower: f64,
    pub options: BoundOptions,
}

fn check_unit(name: &str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::validation(format!("{name} must lie in [0, 1], got {x}")))
    }
}

/// Lower bound on `Prob(I_G^4)`; negative values mean no conclusion at this `q`.
pub fn i4_lower_bound(f: &ClassicalFamily, b_j4: f64, opts: &BoundOptions) -> Result<BoundReport> {
    check_unit("b_J4", b_j4)?;
    let factor = j_factor(f.kind, Parity::of(f.q), opts)?;
    let sep = separable_proportion(f, opts.expansion);
    let i4_lower = factor * b_j4 - (1.0 - sep.value.powi(4));
    Ok(BoundReport {
        family: *f,
        weyl_family: weyl_family_of(f),
        s: sep.value,
        s_clamped: sep.clamped,
        b_j4,
        l: 4,
        i4_lower,
        options: *opts,
    })
}

/// Upper bound `Prob(J^3) + (1 - s^3)` on `Prob(I_G^3)`.
pub fn i3_upper_bound(f: &ClassicalFamily, j3: f64, expansion: Expansion) -> Result<f64> {
    check_unit("j3", j3)?;
    let s = separable_proportion(f, expansion).value;
    Ok(j3 + (1.0 - s.powi(3)))
}

/// Every row is non-decreasing in `q` from here on.
const MONOTONE_FROM: u64 = 4;
const SCAN_LIMIT: u64 = 1 << 53;

/// Largest integer `q >= 2` at which the four-element bound is not positive,
/// so that the bound is positive for every `q` above it.
///
/// `q` ranges over all integers; `parity` only picks the table row.
pub fn solve_k4(kind: ClassicalKind, parity: Parity, b_j4: f64, opts: &BoundOptions) -> Result<u64> {
    if !(b_j4 > 0.0 && b_j4 <= 1.0) {
        return Err(Error::validation(format!("b_J4 must lie in (0, 1], got {b_j4}")));
    }
    let factor = j_factor(kind, parity, opts)?;
    let row = SeparableRow::for_kind(kind, parity);
    let bound = |q: u64| {
        let s = row.eval(q as f64, opts.expansion).clamp(0.0, 1.0);
        factor * b_j4 - (1.0 - s.powi(4))
    };

    let mut last_nonpositive = None;
    for q in 2..MONOTONE_FROM {
        if bound(q) <= 0.0 {
            last_nonpositive = Some(q);
        }
    }
    if bound(MONOTONE_FROM) > 0.0 {
        return last_nonpositive
            .ok_or_else(|| Error::NoSolution(format!("the bound for {kind} is positive for every q >= 2")));
    }
    // Monotone region: gallop to a positive value, then bisect.
    let mut lo = MONOTONE_FROM;
    let mut hi = MONOTONE_FROM * 2;
    while bound(hi) <= 0.0 {
        lo = hi;
        hi *= 2;
        if hi > SCAN_LIMIT {
            return Err(Error::NoSolution(format!(
                "bound for {kind} with b_J4 = {b_j4} stays non-positive up to q = {SCAN_LIMIT}"
            )));
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if bound(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

//! Exact small-`n` ground truth.
//!
//! Class tables are enumerated with integer class sizes over a common
//! denominator (the group order, or half of it for a D sector), so nothing
//! here touches floating point. `Prob(J^l)` is computed by inclusion-exclusion
//! over the lattice of achievable-size items:
//!
//! ```text
//! Prob(no common item) = sum over item sets K of (-1)^|K| * Prob(mask ⊇ K)^l
//! ```
//!
//! with `Prob(mask ⊇ K)` obtained for every `K` by a superset-sum transform.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{
    fixed_sizes, signed_fixed_sets, Partition, Sign, SignedCycleType, WeylFamily,
};
use crate::error::{Error, Result};

/// Largest `n` accepted for types A and C.
pub const UNSIGNED_LIMIT: usize = 24;
/// Largest `n` accepted for types B, D+ and D-.
pub const SIGNED_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassLabel {
    Unsigned(Partition),
    Signed(SignedCycleType),
}

impl ClassLabel {
    pub fn lengths(&self) -> Partition {
        match self {
            ClassLabel::Unsigned(p) => p.clone(),
            ClassLabel::Signed(s) => s.project(),
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassLabel::Unsigned(p) => p.fmt(f),
            ClassLabel::Signed(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub label: ClassLabel,
    /// Number of group elements in the class.
    pub count: u128,
}

/// Conjugacy classes of one family at one `n`, with their proportions.
#[derive(Debug, Clone)]
pub struct ClassTable {
    n: usize,
    family: WeylFamily,
    denominator: u128,
    entries: Vec<ClassEntry>,
}

impl ClassTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> WeylFamily {
        self.family
    }

    /// Size of the group (or coset) the counts are taken over.
    pub fn denominator(&self) -> u128 {
        self.denominator
    }

    pub fn entries(&self) -> &[ClassEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn probability(&self, entry: &ClassEntry) -> BigRational {
        ratio(entry.count, self.denominator)
    }

    pub fn probabilities(&self) -> impl Iterator<Item = (&ClassLabel, BigRational)> + '_ {
        self.entries.iter().map(|e| (&e.label, self.probability(e)))
    }

    /// Exact probability that one element satisfies `pred`.
    fn mass_where(&self, pred: impl Fn(&ClassLabel) -> bool) -> BigRational {
        let num: u128 = self.entries.iter().filter(|e| pred(&e.label)).map(|e| e.count).sum();
        ratio(num, self.denominator)
    }
}

fn ratio(num: u128, den: u128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn check_capacity(n: usize, family: WeylFamily) -> Result<()> {
    if n == 0 {
        return Err(Error::validation("n must be at least 1"));
    }
    let (limit, what) = if family.uses_signed_profiles() {
        (SIGNED_LIMIT, "exact computation for types B/D")
    } else {
        (UNSIGNED_LIMIT, "exact computation for types A/C")
    };
    if n > limit {
        return Err(Error::Capacity { what, n, limit });
    }
    Ok(())
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n`, each non-increasing.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(cur.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `prod_j j^{m_j} m_j!`, the centralizer order of a permutation of cycle type `p`.
fn centralizer_unsigned(p: &Partition) -> u128 {
    p.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &m)| (j as u128).pow(m as u32) * factorial(m))
        .product()
}

fn unsigned_table(n: usize) -> Vec<ClassEntry> {
    let order = factorial(n);
    partitions(n)
        .into_iter()
        .map(|p| {
            let count = order / centralizer_unsigned(&p);
            ClassEntry {
                label: ClassLabel::Unsigned(p),
                count,
            }
        })
        .collect()
}

/// Signed classes of the hyperoctahedral group: every way of splitting each
/// multiplicity `m_j` into `m_j^+ + m_j^-`. Class size is
/// `2^n n! / prod_j (2j)^{m_j} m_j^+! m_j^-!`.
fn signed_table(n: usize, sector: Option<Sign>) -> Vec<ClassEntry> {
    let order = (1u128 << n) * factorial(n);
    let mut out = Vec::new();
    for p in partitions(n) {
        let mult = p.multiplicities();
        let lengths: Vec<usize> = (1..=n).rev().filter(|&j| mult[j] > 0).collect();
        let mut split = vec![0usize; lengths.len()];
        loop {
            let mut cycles = Vec::with_capacity(p.num_cycles());
            let mut centralizer: u128 = 1;
            for (&j, &plus) in lengths.iter().zip(&split) {
                let minus = mult[j] - plus;
                cycles.extend(std::iter::repeat_n((j, Sign::Plus), plus));
                cycles.extend(std::iter::repeat_n((j, Sign::Minus), minus));
                centralizer *= (2 * j as u128).pow(mult[j] as u32) * factorial(plus) * factorial(minus);
            }
            let label = SignedCycleType::new(cycles).expect("non-empty positive cycles");
            if sector.is_none_or(|s| label.total_sign() == s) {
                out.push(ClassEntry {
                    label: ClassLabel::Signed(label),
                    count: order / centralizer,
                });
            }
            // Odometer over the splits.
            let mut i = 0;
            while i < split.len() {
                if split[i] < mult[lengths[i]] {
                    split[i] += 1;
                    break;
                }
                split[i] = 0;
                i += 1;
            }
            if i == split.len() {
                break;
            }
        }
    }
    // Longest cycles first, then `+` before `-`.
    out.sort_by_cached_key(|e| match &e.label {
        ClassLabel::Signed(s) => s
            .cycles()
            .iter()
            .map(|&(len, sign)| (std::cmp::Reverse(len), sign))
            .collect::<Vec<_>>(),
        ClassLabel::Unsigned(_) => unreachable!(),
    });
    out
}

pub fn enumerate_classes(n: usize, family: WeylFamily) -> Result<ClassTable> {
    check_capacity(n, family)?;
    let (entries, denominator) = match family {
        WeylFamily::A => (unsigned_table(n), factorial(n)),
        WeylFamily::B | WeylFamily::C => (signed_table(n, None), (1u128 << n) * factorial(n)),
        WeylFamily::DPlus | WeylFamily::DMinus => {
            let sector = family.required_sign();
            // Each sign sector holds exactly half of the group.
            (signed_table(n, sector), (1u128 << (n - 1)) * factorial(n))
        }
    };
    let total: u128 = entries.iter().map(|e| e.count).sum();
    assert_eq!(
        total, denominator,
        "class sizes of family {family} at n = {n} do not add up to the group order"
    );
    Ok(ClassTable {
        n,
        family,
        denominator,
        entries,
    })
}

/// Bitmask over the item lattice for one class.
///
/// Unsigned profiles are symmetric under `k -> n - k`, so the item `k` stands
/// for the pair `{k, n - k}` with `1 <= k <= n/2`. Signed items are the pairs
/// `(k, sign)` for `1 <= k < n`.
fn item_mask(label: &ClassLabel, signed: bool) -> u64 {
    let mut mask = 0u64;
    if signed {
        let ClassLabel::Signed(s) = label else {
            unreachable!("signed lattice over unsigned labels")
        };
        let prof = signed_fixed_sets(s);
        for (k, sign) in prof.pairs() {
            mask |= 1 << (2 * (k - 1) + usize::from(sign == Sign::Minus));
        }
    } else {
        let prof = fixed_sizes(&label.lengths());
        let half = prof.n() / 2;
        for k in prof.sizes().into_iter().filter(|&k| k <= half) {
            mask |= 1 << (k - 1);
        }
    }
    mask
}

fn item_count(n: usize, signed: bool) -> usize {
    if signed {
        2 * (n - 1)
    } else {
        n / 2
    }
}

pub fn exact_prob_j(n: usize, l: usize, family: WeylFamily) -> Result<BigRational> {
    if l == 0 {
        return Err(Error::validation("l must be at least 1"));
    }
    let table = enumerate_classes(n, family)?;
    let signed = family.uses_signed_profiles();
    let items = item_count(n, signed);

    // Probability mass (numerator over the table denominator) per exact mask,
    // aggregated before the transform.
    let mut by_mask: BTreeMap<u64, u128> = BTreeMap::new();
    for e in table.entries() {
        *by_mask.entry(item_mask(&e.label, signed)).or_default() += e.count;
    }
    let mut superset = vec![0u128; 1 << items];
    for (&mask, &count) in &by_mask {
        superset[mask as usize] += count;
    }
    for bit in 0..items {
        let step = 1usize << bit;
        for k in 0..superset.len() {
            if k & step == 0 {
                superset[k] += superset[k | step];
            }
        }
    }

    // Many item sets share the same superset mass; sum their signs first.
    let mut coeff: BTreeMap<u128, i64> = BTreeMap::new();
    for (k, &mass) in superset.iter().enumerate() {
        if mass != 0 {
            let sign = if k.count_ones() % 2 == 0 { 1 } else { -1 };
            *coeff.entry(mass).or_default() += sign;
        }
    }
    let mut num = BigInt::zero();
    for (&mass, &c) in &coeff {
        if c != 0 {
            num += BigInt::from(c) * num_traits::pow(BigInt::from(mass), l);
        }
    }
    let den = num_traits::pow(BigInt::from(table.denominator()), l);
    Ok(BigRational::new(num, den))
}

/// Single-element predicates and the `l`-element same-sign event.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    AllEven,
    AllPositive,
    SameSign(usize),
}

pub fn exact_prob_predicate(n: usize, family: WeylFamily, predicate: Predicate) -> Result<BigRational> {
    let needs_signs = !matches!(predicate, Predicate::AllEven);
    if needs_signs && !family.is_signed() {
        return Err(Error::validation(format!(
            "{predicate:?} is only defined for signed families, not {family}"
        )));
    }
    let table = enumerate_classes(n, family)?;
    match predicate {
        Predicate::AllEven => Ok(table.mass_where(|lab| lab.lengths().parts().iter().all(|&p| p % 2 == 0))),
        Predicate::AllPositive => Ok(table.mass_where(|lab| match lab {
            ClassLabel::Signed(s) => crate::combinatorics::all_cycles_positive(s),
            ClassLabel::Unsigned(_) => unreachable!(),
        })),
        Predicate::SameSign(l) => {
            if l == 0 {
                return Err(Error::validation("l must be at least 1"));
            }
            let total_sign = |want: Sign| {
                move |lab: &ClassLabel| matches!(lab, ClassLabel::Signed(s) if s.total_sign() == want)
            };
            let plus = table.mass_where(total_sign(Sign::Plus));
            let minus = table.mass_where(total_sign(Sign::Minus));
            let pow = |r: &BigRational| (0..l).fold(BigRational::one(), |acc, _| acc * r);
            Ok(pow(&plus) + pow(&minus))
        }
    }
}

//! Fixed-set events over tuples of elements.

use super::{Partition, Sign, SignedCycleType, SignedSizeProfile, SizeProfile, WeylFamily};
use crate::error::{Error, Result};

/// A profile of either flavour, for mixed-input entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Profile {
    Unsigned(SizeProfile),
    Signed(SignedSizeProfile),
}

impl Profile {
    pub fn n(&self) -> usize {
        match self {
            Profile::Unsigned(p) => p.n(),
            Profile::Signed(p) => p.n(),
        }
    }
}

impl From<SizeProfile> for Profile {
    fn from(p: SizeProfile) -> Self {
        Profile::Unsigned(p)
    }
}

impl From<SignedSizeProfile> for Profile {
    fn from(p: SignedSizeProfile) -> Self {
        Profile::Signed(p)
    }
}

/// True iff the elements share no proper fixed (signed) subset size, i.e.
/// the intersection of their achievable sets is empty.
///
/// Types A and C take unsigned profiles (for C, of the projections); B and
/// the two D sectors take signed profiles.
pub fn event_j(profiles: &[Profile], family: WeylFamily) -> Result<bool> {
    let first = profiles
        .first()
        .ok_or_else(|| Error::validation("event J needs at least one profile"))?;
    let n = first.n();
    if let Some(bad) = profiles.iter().position(|p| p.n() != n) {
        return Err(Error::validation(format!(
            "profile {bad} has n = {}, expected {n}",
            profiles[bad].n()
        )));
    }
    if family.uses_signed_profiles() {
        let signed = profiles
            .iter()
            .map(|p| match p {
                Profile::Signed(s) => Ok(s),
                Profile::Unsigned(_) => Err(Error::validation(format!(
                    "family {family} needs signed profiles"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(want) = family.required_sign() {
            if signed.iter().any(|s| s.total_sign() != want) {
                return Err(Error::validation(format!(
                    "family {family} requires total sign {want}"
                )));
            }
        }
        let mut plus = signed[0].plus().clone();
        let mut minus = signed[0].minus().clone();
        for s in &signed[1..] {
            plus.and_assign(s.plus());
            minus.and_assign(s.minus());
        }
        Ok(plus.none() && minus.none())
    } else {
        let unsigned = profiles
            .iter()
            .map(|p| match p {
                Profile::Unsigned(u) => Ok(u),
                Profile::Signed(_) => Err(Error::validation(format!(
                    "family {family} needs unsigned profiles"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut acc = unsigned[0].bits().clone();
        for u in &unsigned[1..] {
            acc.and_assign(u.bits());
        }
        Ok(acc.none())
    }
}

pub fn all_cycles_even(p: &Partition) -> bool {
    p.parts().iter().all(|&len| len % 2 == 0)
}

pub fn all_cycles_positive(s: &SignedCycleType) -> bool {
    s.cycles().iter().all(|&(_, sign)| sign == Sign::Plus)
}

/// True iff every element has the same total sign.
pub fn event_n(types: &[SignedCycleType]) -> Result<bool> {
    let first = types
        .first()
        .ok_or_else(|| Error::validation("event N needs at least one element"))?;
    if types.iter().any(|t| t.n() != first.n()) {
        return Err(Error::validation("event N needs elements of a common n"));
    }
    let sign = first.total_sign();
    Ok(types.iter().all(|t| t.total_sign() == sign))
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Sign;
use crate::error::Error;

/// Weyl group families. `DPlus` is the total-sign `+1` subgroup of the
/// hyperoctahedral group and `DMinus` its negative coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylFamily {
    A,
    B,
    C,
    DPlus,
    DMinus,
}

impl WeylFamily {
    pub const ALL: [WeylFamily; 5] = [
        WeylFamily::A,
        WeylFamily::B,
        WeylFamily::C,
        WeylFamily::DPlus,
        WeylFamily::DMinus,
    ];

    /// Families whose class labels are signed cycle types.
    pub fn is_signed(self) -> bool {
        !matches!(self, WeylFamily::A)
    }

    /// Families whose fixed-set events look at signed subsets.
    pub fn uses_signed_profiles(self) -> bool {
        matches!(self, WeylFamily::B | WeylFamily::DPlus | WeylFamily::DMinus)
    }

    /// Total sign every class label must carry, if the family restricts it.
    pub fn required_sign(self) -> Option<Sign> {
        match self {
            WeylFamily::DPlus => Some(Sign::Plus),
            WeylFamily::DMinus => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeylFamily::A => "A",
            WeylFamily::B => "B",
            WeylFamily::C => "C",
            WeylFamily::DPlus => "D+",
            WeylFamily::DMinus => "D-",
        }
    }
}

impl fmt::Display for WeylFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeylFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(WeylFamily::A),
            "B" | "b" => Ok(WeylFamily::B),
            "C" | "c" => Ok(WeylFamily::C),
            "D+" | "d+" | "D" | "d" => Ok(WeylFamily::DPlus),
            "D-" | "d-" => Ok(WeylFamily::DMinus),
            other => Err(Error::validation(format!(
                "unknown Weyl family {other:?} (expected A, B, C, D+ or D-)"
            ))),
        }
    }
}

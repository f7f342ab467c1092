//! The Cantor-set families and their textual spec form.
//!
//! Each family knows how to build its stage-`n` set through its own
//! representation: cumulative gap removal for [`Gamma1`] and [`Gamma2`], the
//! endpoint recursion for [`Gamma3`], and address composition for
//! [`DigitIfs`]. The verification module compares these paths against each
//! other, so they deliberately share no construction code.

mod digit;
mod gamma3;
mod thin;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use digit::{digit_expansions, Address, DigitIfs};
pub use gamma3::{EndpointRow, EndpointTable, Gamma3};
pub use thin::{Gamma1, Gamma2, Gamma2Formula};

use crate::error::{Error, Result};
use crate::interval::IntervalSet;

/// Tagged description of one family member.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FamilySpec {
    Gamma1(Gamma1),
    Gamma2(Gamma2),
    Gamma3(Gamma3),
    Digit(DigitIfs),
}

impl FamilySpec {
    /// Stage-`n` set via the family's native representation.
    pub fn stage(&self, n: u32) -> Result<IntervalSet> {
        match self {
            FamilySpec::Gamma1(g) => g.stage(n),
            FamilySpec::Gamma2(g) => g.stage(n),
            FamilySpec::Gamma3(g) => Ok(g.endpoints(n).stage_set()),
            FamilySpec::Digit(d) => Ok(d.stage(n)),
        }
    }

    /// The digit-IFS presentation by definition, where one exists.
    ///
    /// `Gamma3` is excluded: its digit description is only a comparison
    /// target, not its definition.
    pub fn digit_ifs(&self) -> Option<DigitIfs> {
        match self {
            FamilySpec::Gamma1(g) => Some(g.digit_ifs()),
            FamilySpec::Gamma2(g) => Some(g.digit_ifs()),
            FamilySpec::Gamma3(_) => None,
            FamilySpec::Digit(d) => Some(d.clone()),
        }
    }

    /// Number of pieces each construction step splits a component into.
    pub fn map_count(&self) -> usize {
        match self {
            FamilySpec::Gamma3(_) => 2,
            other => other.digit_ifs().expect("digit presentation").alphabet().len(),
        }
    }

    /// Base `q` used when rendering in the un-reduced `x/q^n` style.
    pub fn display_base(&self) -> u32 {
        match self {
            FamilySpec::Gamma1(g) => g.q(),
            FamilySpec::Gamma2(g) => g.q(),
            FamilySpec::Gamma3(g) => g.q(),
            FamilySpec::Digit(d) => d.base(),
        }
    }
}

impl From<Gamma1> for FamilySpec {
    fn from(g: Gamma1) -> Self {
        FamilySpec::Gamma1(g)
    }
}

impl From<Gamma2> for FamilySpec {
    fn from(g: Gamma2) -> Self {
        FamilySpec::Gamma2(g)
    }
}

impl From<Gamma3> for FamilySpec {
    fn from(g: Gamma3) -> Self {
        FamilySpec::Gamma3(g)
    }
}

impl From<DigitIfs> for FamilySpec {
    fn from(d: DigitIfs) -> Self {
        FamilySpec::Digit(d)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gamma1(g) => write!(f, "gamma1:q={}", g.q()),
            FamilySpec::Gamma2(g) => write!(f, "gamma2:q={}", g.q()),
            FamilySpec::Gamma3(g) => write!(f, "gamma3:p={},q={}", g.p(), g.q()),
            FamilySpec::Digit(d) => {
                let digits: Vec<String> = d.alphabet().iter().map(u32::to_string).collect();
                write!(f, "digit:base={},A={}", d.base(), digits.join(","))
            }
        }
    }
}

fn parse_u32(input: &str, value: &str) -> Result<u32> {
    value.trim().parse().map_err(|_| Error::Parse {
        what: "family spec",
        input: input.to_string(),
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `gamma1:q=5`, `gamma2:q=4`, `gamma3:p=1,q=4`, and
    /// `digit:base=6,A=0,1,4,5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "family spec",
            input: s.to_string(),
        };
        let (kind, params) = s.trim().split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "gamma1" | "gamma2" => {
                let q = params.trim().strip_prefix("q=").ok_or_else(bad)?;
                let q = parse_u32(s, q)?;
                if kind.trim() == "gamma1" {
                    Ok(Gamma1::new(q)?.into())
                } else {
                    Ok(Gamma2::new(q)?.into())
                }
            }
            "gamma3" => {
                let (p, q) = params.split_once(',').ok_or_else(bad)?;
                let p = p.trim().strip_prefix("p=").ok_or_else(bad)?;
                let q = q.trim().strip_prefix("q=").ok_or_else(bad)?;
                Ok(Gamma3::new(parse_u32(s, p)?, parse_u32(s, q)?)?.into())
            }
            "digit" => {
                let (base, alphabet) = params.split_once(",A=").ok_or_else(bad)?;
                let base = base.trim().strip_prefix("base=").ok_or_else(bad)?;
                let digits = alphabet
                    .split(',')
                    .map(|d| parse_u32(s, d))
                    .collect::<Result<Vec<_>>>()?;
                Ok(DigitIfs::new(parse_u32(s, base)?, digits)?.into())
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

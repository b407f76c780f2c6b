use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Partition into distinct parts, stored largest part first.
///
/// For a billiard trajectory the largest part is the period and the remaining
/// parts are the winding numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is strictly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.last() == Some(&0) {
            return Err(Error::Parse("parts must be positive".into()));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::Parse(format!(
                "parts must be strictly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// No two adjacent parts are both odd.
    pub fn has_no_adjacent_odds(&self) -> bool {
        self.0.windows(2).all(|w| w[0] % 2 == 0 || w[1] % 2 == 0)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

/// `9+4+2`; the empty partition renders as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_plus_joined(f, &self.0)
    }
}

pub(crate) fn write_plus_joined(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str("+")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Parses `INT("+"INT)*` with strictly decreasing positive integers.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let parts = s
            .split('+')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("invalid part {tok:?} in {s:?}")));
                }
                tok.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("invalid part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The even summand `π₂` of a decomposition: nonincreasing even nonnegative
/// integers, index-aligned with the partition it pads (zeros included).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct EvenPadding(Vec<u32>);

impl EvenPadding {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(odd) = entries.iter().find(|&&e| e % 2 == 1) {
            return Err(Error::contract(format!("padding entry {odd} is odd")));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::contract("padding must be nonincreasing"));
        }
        Ok(EvenPadding(entries))
    }

    pub fn zeros(len: usize) -> Self {
        EvenPadding(vec![0; len])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }
}

impl TryFrom<Vec<u32>> for EvenPadding {
    type Error = Error;
    fn try_from(entries: Vec<u32>) -> Result<Self> {
        EvenPadding::new(entries)
    }
}

impl From<EvenPadding> for Vec<u32> {
    fn from(p: EvenPadding) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for EvenPadding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_plus_joined(f, &self.0)
    }
}

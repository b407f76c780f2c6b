//! Two-component partitions `(m₁,…,m_l | n₁,…,n_k)` for billiards in
//! pseudo-Euclidean space, and the reduced single-component partitions whose
//! smallest part may have either parity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::write_plus_joined;
use super::Partition;
use crate::{Error, Result};

/// Causal type of the trajectory, which fixes the parity constraint on the
/// smallest parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[derive(clap::ValueEnum)]
pub enum PEKind {
    /// Smallest part of the n-list is even.
    Space,
    /// Smallest part of the m-list is even.
    Time,
    /// Both smallest parts are even.
    Light,
}

impl PEKind {
    pub const ALL: [PEKind; 3] = [PEKind::Space, PEKind::Time, PEKind::Light];

    pub fn name(self) -> &'static str {
        match self {
            PEKind::Space => "space",
            PEKind::Time => "time",
            PEKind::Light => "light",
        }
    }

    fn m_even(self) -> bool {
        matches!(self, PEKind::Time | PEKind::Light)
    }

    fn n_even(self) -> bool {
        matches!(self, PEKind::Space | PEKind::Light)
    }
}

impl fmt::Display for PEKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PEKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "space" => Ok(PEKind::Space),
            "time" => Ok(PEKind::Time),
            "light" => Ok(PEKind::Light),
            other => Err(Error::Parse(format!(
                "unknown type {other:?}, expected space, time or light"
            ))),
        }
    }
}

/// A pair of nonempty distinct-part lists tagged with a causal type. No
/// ordering is assumed between parts of different lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PEPartition {
    pub kind: PEKind,
    m: Partition,
    n: Partition,
}

impl PEPartition {
    pub fn new(kind: PEKind, m: Partition, n: Partition) -> Result<Self> {
        if m.is_empty() || n.is_empty() {
            return Err(Error::Parse("both components must be nonempty".into()));
        }
        Ok(PEPartition { kind, m, n })
    }

    /// Parses `m₁+…+m_l|n₁+…+n_k`.
    pub fn parse(text: &str, kind: PEKind) -> Result<Self> {
        let (m, n) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {text:?}")))?;
        if n.contains('|') {
            return Err(Error::Parse(format!("more than one '|' in {text:?}")));
        }
        PEPartition::new(kind, m.parse()?, n.parse()?)
    }

    pub fn m_parts(&self) -> &Partition {
        &self.m
    }

    pub fn n_parts(&self) -> &Partition {
        &self.n
    }

    pub fn total(&self) -> u64 {
        self.m.sum() + self.n.sum()
    }

    /// `m₁ + n₁`, the sum of the two largest parts.
    pub fn largest_sum(&self) -> u64 {
        u64::from(self.m.largest().unwrap_or(0)) + u64::from(self.n.largest().unwrap_or(0))
    }

    /// Exchanges the two components; space and time types trade places.
    pub fn swapped(&self) -> PEPartition {
        let kind = match self.kind {
            PEKind::Space => PEKind::Time,
            PEKind::Time => PEKind::Space,
            PEKind::Light => PEKind::Light,
        };
        PEPartition {
            kind,
            m: self.n.clone(),
            n: self.m.clone(),
        }
    }
}

impl fmt::Display for PEPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_plus_joined(f, self.m.parts())?;
        f.write_str("|")?;
        write_plus_joined(f, self.n.parts())
    }
}

/// Membership in the class named by the partition's type tag.
pub fn is_pe_member(p: &PEPartition) -> bool {
    let even_tail = |c: &Partition| c.smallest().is_some_and(|s| s % 2 == 0);
    p.m.has_no_adjacent_odds()
        && p.n.has_no_adjacent_odds()
        && (!p.kind.m_even() || even_tail(&p.m))
        && (!p.kind.n_even() || even_tail(&p.n))
}

/// Reduced partitions for the component without a parity condition: no two
/// adjacent odd parts, smallest part 1 or 2, adjacent differences at most 2.
pub fn is_reduced(p: &Partition) -> bool {
    matches!(p.smallest(), Some(1 | 2))
        && p.has_no_adjacent_odds()
        && p.parts().windows(2).all(|w| w[0] - w[1] <= 2)
}

/// Reduced partitions with exactly `d` parts and largest part `largest`.
pub fn enumerate_reduced(d: usize, largest: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if d == 0 || largest == 0 {
        return out;
    }
    let mut prefix = vec![largest];
    reduced_rec(d, &mut prefix, &mut out);
    out
}

fn reduced_rec(d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let last = *prefix.last().expect("nonempty prefix");
    if prefix.len() == d {
        if last <= 2 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
        }
        return;
    }
    let floor = (d - prefix.len()) as u32;
    for step in [1, 2] {
        let Some(part) = last.checked_sub(step) else {
            continue;
        };
        if part < floor || (part % 2 == 1 && last % 2 == 1) {
            continue;
        }
        prefix.push(part);
        reduced_rec(d, prefix, out);
        prefix.pop();
    }
}

/// Distinct-part partitions of `n` with no two adjacent odd parts,
/// lexicographically descending.
pub fn no_adjacent_odd_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    nao_rec(n, n, &mut prefix, &mut out);
    out
}

fn nao_rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        if !prefix.is_empty() {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
        }
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        let room = u64::from(part) * u64::from(part - 1) / 2;
        if u64::from(remaining - part) > room {
            break;
        }
        if part % 2 == 1 && prefix.last().is_some_and(|q| q % 2 == 1) {
            continue;
        }
        prefix.push(part);
        nao_rec(remaining - part, part - 1, prefix, out);
        prefix.pop();
    }
}

/// Distinct-part, no-adjacent-odd partitions with the given largest part.
fn no_adjacent_odd_with_largest(largest: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = vec![largest];
    largest_rec(&mut prefix, &mut out);
    out
}

fn largest_rec(prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::from_parts_unchecked(prefix.clone()));
    let last = *prefix.last().expect("nonempty prefix");
    for part in (1..last).rev() {
        if part % 2 == 1 && last % 2 == 1 {
            continue;
        }
        prefix.push(part);
        largest_rec(prefix, out);
        prefix.pop();
    }
}

fn assemble(kind: PEKind, pairs: impl Iterator<Item = (Partition, Partition)>) -> Vec<PEPartition> {
    let mut out: Vec<PEPartition> = pairs
        .map(|(m, n)| PEPartition { kind, m, n })
        .filter(is_pe_member)
        .collect();
    out.sort_by(|a, b| (&b.m, &b.n).cmp(&(&a.m, &a.n)));
    out
}

/// All members of the given type whose parts, over both components, sum to
/// `total`. Ordered lexicographically descending on the m-list, then the
/// n-list.
pub fn enumerate_pe_by_total(kind: PEKind, total: u32) -> Vec<PEPartition> {
    let components: Vec<Vec<Partition>> = (0..=total).map(no_adjacent_odd_partitions).collect();
    let pairs = (1..total).flat_map(|m_sum| {
        let ms = &components[m_sum as usize];
        let ns = &components[(total - m_sum) as usize];
        ms.iter()
            .flat_map(move |m| ns.iter().map(move |n| (m.clone(), n.clone())))
    });
    assemble(kind, pairs)
}

/// All members of the given type with `m₁ + n₁ = largest_sum`.
pub fn enumerate_pe_by_largest_sum(kind: PEKind, largest_sum: u32) -> Vec<PEPartition> {
    let pairs = (1..largest_sum).flat_map(|m1| {
        let ms = no_adjacent_odd_with_largest(m1);
        let ns = no_adjacent_odd_with_largest(largest_sum - m1);
        ms.into_iter()
            .flat_map(move |m| ns.clone().into_iter().map(move |n| (m.clone(), n)))
    });
    assemble(kind, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pe(kind: PEKind, s: &str) -> PEPartition {
        PEPartition::parse(s, kind).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let p = pe(PEKind::Light, "5+2|2");
        assert_eq!(p.m_parts().parts(), &[5, 2]);
        assert_eq!(p.to_string(), "5+2|2");
        assert_eq!(p.total(), 9);
        assert_eq!(p.largest_sum(), 7);
        for bad in ["2", "|2", "2|", "2|2|2", "2+3|2", "0|2"] {
            assert!(
                PEPartition::parse(bad, PEKind::Space).is_err(),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn membership() {
        assert!(is_pe_member(&pe(PEKind::Space, "1|2")));
        assert!(is_pe_member(&pe(PEKind::Light, "2|2")));
        assert!(!is_pe_member(&pe(PEKind::Space, "2|3")));
        assert!(!is_pe_member(&pe(PEKind::Time, "1|2")));
        assert!(!is_pe_member(&pe(PEKind::Space, "5+3|2")));
        assert!(is_pe_member(&pe(PEKind::Time, "2|1")));
    }

    #[test]
    fn small_totals() {
        let light4 = enumerate_pe_by_total(PEKind::Light, 4);
        assert_eq!(light4, vec![pe(PEKind::Light, "2|2")]);
        assert_eq!(
            enumerate_pe_by_total(PEKind::Space, 3),
            vec![pe(PEKind::Space, "1|2")]
        );
        assert_eq!(
            enumerate_pe_by_total(PEKind::Time, 3),
            vec![pe(PEKind::Time, "2|1")]
        );
        assert!(enumerate_pe_by_total(PEKind::Light, 3).is_empty());
        for kind in PEKind::ALL {
            assert!(enumerate_pe_by_total(kind, 1).is_empty());
        }
    }

    #[test]
    fn largest_sum_grouping() {
        // m₁ + n₁ = 4 for light type: only 2|2
        assert_eq!(
            enumerate_pe_by_largest_sum(PEKind::Light, 4),
            vec![pe(PEKind::Light, "2|2")]
        );
        // 3+2|2 has total 7 but largest sum 5
        let five = enumerate_pe_by_largest_sum(PEKind::Space, 5);
        assert!(five.contains(&pe(PEKind::Space, "3+2|2")));
        assert!(five.iter().all(|p| p.largest_sum() == 5 && is_pe_member(p)));
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(enumerate_reduced(1, 1), vec!["1".parse().unwrap()]);
        assert_eq!(enumerate_reduced(1, 2), vec!["2".parse().unwrap()]);
        assert!(enumerate_reduced(1, 3).is_empty());
        assert_eq!(enumerate_reduced(2, 2), vec!["2+1".parse().unwrap()]);
        assert!(is_reduced(&"3+2+1".parse().unwrap()));
        assert!(!is_reduced(&"4+1".parse().unwrap()));
    }

    #[test]
    fn swap_exchanges_space_and_time() {
        let p = pe(PEKind::Space, "1|2");
        let s = p.swapped();
        assert_eq!(s.kind, PEKind::Time);
        assert_eq!(s.to_string(), "2|1");
        assert!(is_pe_member(&s));
    }
}

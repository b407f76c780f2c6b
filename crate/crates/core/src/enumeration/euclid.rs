//! The Euclidean class: distinct parts, smallest part even, no two adjacent
//! parts both odd. Its irreducible members have smallest part 2 and adjacent
//! differences of at most 2.

use num_bigint::BigUint;

use super::{EvenPadding, Partition};
use crate::{Error, Result};

/// Membership in the Euclidean billiard class. The empty partition is not a
/// member.
pub fn is_euclidean(p: &Partition) -> bool {
    matches!(p.smallest(), Some(s) if s % 2 == 0) && p.has_no_adjacent_odds()
}

fn require_euclidean(p: &Partition) -> Result<()> {
    if is_euclidean(p) {
        Ok(())
    } else {
        Err(Error::contract(format!(
            "{p} is not a Euclidean billiard partition"
        )))
    }
}

/// Irreducible members: smallest part 2 and every adjacent difference at most 2.
pub fn is_irreducible(p: &Partition) -> Result<bool> {
    require_euclidean(p)?;
    Ok(p.smallest() == Some(2) && p.parts().windows(2).all(|w| w[0] - w[1] <= 2))
}

/// Exponent `w` of the weight `φ = 2^w`: `d-1-2s` for an even largest part,
/// `d-2s` for an odd one, where `d` is the length and `s` the odd-part count.
pub fn weight_exponent(p: &Partition) -> Result<u32> {
    require_euclidean(p)?;
    let d = p.len() as i64;
    let s = p.odd_count() as i64;
    let w = match p.largest() {
        Some(n) if n % 2 == 0 => d - 1 - 2 * s,
        _ => d - 2 * s,
    };
    u32::try_from(w).map_err(|_| Error::contract(format!("negative weight exponent for {p}")))
}

/// The weight `φ = 2^w`: the number of caustic-type choices compatible with
/// the partition.
pub fn phi(p: &Partition) -> Result<BigUint> {
    Ok(BigUint::from(1u8) << weight_exponent(p)?)
}

/// All Euclidean partitions of `n`, lexicographically descending.
pub fn enumerate_by_sum(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    sum_rec(n, n, &mut prefix, &mut out);
    out
}

fn sum_rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        if prefix.last().is_some_and(|s| s % 2 == 0) {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
        }
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        // the remaining parts are distinct and below `part`
        let room = u64::from(part) * u64::from(part - 1) / 2;
        if u64::from(remaining - part) > room {
            break;
        }
        if part % 2 == 1 && prefix.last().is_some_and(|q| q % 2 == 1) {
            continue;
        }
        prefix.push(part);
        sum_rec(remaining - part, part - 1, prefix, out);
        prefix.pop();
    }
}

/// Euclidean partitions with exactly `d` parts and largest part `largest`.
pub fn enumerate_by_shape(d: usize, largest: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if d == 0 || largest == 0 {
        return out;
    }
    let mut prefix = vec![largest];
    shape_rec(d, &mut prefix, &mut out);
    out
}

fn shape_rec(d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let last = *prefix.last().expect("prefix starts with the largest part");
    if prefix.len() == d {
        if last.is_multiple_of(2) {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
        }
        return;
    }
    let needed = (d - prefix.len()) as u32;
    for part in (needed..last).rev() {
        if part % 2 == 1 && last % 2 == 1 {
            continue;
        }
        prefix.push(part);
        shape_rec(d, prefix, out);
        prefix.pop();
    }
}

/// Irreducible partitions with exactly `d` parts and largest part `largest`,
/// lexicographically descending.
pub fn enumerate_irreducible(d: usize, largest: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if d == 0 || largest == 0 {
        return out;
    }
    let mut prefix = vec![largest];
    irreducible_rec(d, &mut prefix, &mut out);
    out
}

fn irreducible_rec(d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let last = *prefix.last().expect("nonempty prefix");
    if prefix.len() == d {
        if last == 2 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
        }
        return;
    }
    // the smallest part is 2, so there must be room for the rest above it
    let below = (d - prefix.len()) as u32;
    for step in [1, 2] {
        let Some(part) = last.checked_sub(step) else {
            continue;
        };
        if part < below + 1 || (part % 2 == 1 && last % 2 == 1) {
            continue;
        }
        prefix.push(part);
        irreducible_rec(d, prefix, out);
        prefix.pop();
    }
}

/// Splits a Euclidean partition into its irreducible core and an even
/// padding, walking up from the smallest part: the core's smallest part is 2
/// and each further core part is the least integer above the previous one
/// with the parity of the corresponding original part.
pub fn decompose(p: &Partition) -> Result<(Partition, EvenPadding)> {
    require_euclidean(p)?;
    let parts = p.parts();
    let mut core = vec![0u32; parts.len()];
    let mut prev: Option<u32> = None;
    for (i, &part) in parts.iter().enumerate().rev() {
        let c = match prev {
            None => 2,
            Some(q) if (q + 1) % 2 == part % 2 => q + 1,
            Some(q) => q + 2,
        };
        core[i] = c;
        prev = Some(c);
    }
    let padding = parts.iter().zip(&core).map(|(&a, &c)| a - c).collect();
    Ok((
        Partition::from_parts_unchecked(core),
        EvenPadding::new(padding)?,
    ))
}

/// Inverse of [`decompose`]: elementwise sum of an irreducible partition and
/// an even padding of the same length.
pub fn compose(core: &Partition, padding: &EvenPadding) -> Result<Partition> {
    if !is_euclidean(core) || !is_irreducible(core)? {
        return Err(Error::contract(format!("{core} is not irreducible")));
    }
    if core.len() != padding.len() {
        return Err(Error::contract(format!(
            "padding has {} entries for a partition with {} parts",
            padding.len(),
            core.len()
        )));
    }
    let parts = core
        .parts()
        .iter()
        .zip(padding.entries())
        .map(|(&c, &e)| c + e)
        .collect();
    // a nonincreasing even padding keeps parts distinct and preserves parities
    Ok(Partition::from_parts_unchecked(parts))
}

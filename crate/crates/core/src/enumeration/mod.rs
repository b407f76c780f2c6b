//! Exhaustive generation and classification of billiard partitions.
//!
//! Everything here works directly on part lists, with no generating-function
//! machinery, and serves as the oracle for [`crate::closedform`].

mod euclid;
mod partition;
mod pe;

pub use euclid::{
    compose, decompose, enumerate_by_shape, enumerate_by_sum, enumerate_irreducible, is_euclidean,
    is_irreducible, phi, weight_exponent,
};
pub use partition::{EvenPadding, Partition};
pub use pe::{
    enumerate_pe_by_largest_sum, enumerate_pe_by_total, enumerate_reduced, is_pe_member,
    is_reduced, no_adjacent_odd_partitions, PEKind, PEPartition,
};

/// All partitions of `n` into distinct positive parts, lexicographically
/// descending. Independent of every class predicate.
pub fn distinct_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether some part can be lowered by 2 with the result still in the class
/// described by `member`. This is the defining property of reducibility;
/// [`is_irreducible`] and [`is_reduced`] are its closed characterizations.
pub fn can_reduce_by_two(p: &Partition, member: impl Fn(&Partition) -> bool) -> bool {
    (0..p.len()).any(|i| {
        let mut parts = p.parts().to_vec();
        if parts[i] <= 2 {
            return false;
        }
        parts[i] -= 2;
        Partition::new(parts).is_ok_and(|q| member(&q))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_partition_counts() {
        // OEIS A000009
        let counts: Vec<usize> = (1..=12).map(|n| distinct_partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15]);
        assert!(distinct_partitions(0).is_empty());
    }

    #[test]
    fn reducibility_by_definition() {
        let p: Partition = "7+4+2".parse().unwrap();
        assert!(can_reduce_by_two(&p, is_euclidean));
        let p: Partition = "5+4+2".parse().unwrap();
        assert!(!can_reduce_by_two(&p, is_euclidean));
    }
}

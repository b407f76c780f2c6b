use std::collections::BTreeSet;

use billiard_partitions::closedform::{
    euclid_series, pe_series, s_closed, s_tilde, ShapeKey, ShapeTable,
};
use billiard_partitions::enumeration::{
    can_reduce_by_two, compose, decompose, distinct_partitions, enumerate_by_sum,
    enumerate_irreducible, enumerate_pe_by_total, enumerate_reduced, is_euclidean, is_irreducible,
    is_pe_member, is_reduced, no_adjacent_odd_partitions, weight_exponent, PEKind, PEPartition,
    Partition,
};
use billiard_partitions::qalgebra::{
    inv_q_pochhammer_even, q_binomial, q_pochhammer_even, QSeries, XPoly,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const ORDER: usize = 8;

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(-3i64..=3, 0..4).prop_map(|c| XPoly::from_i64s(&c))
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(xpoly(), ORDER + 1).prop_map(|c| QSeries::from_coeffs(c, ORDER))
}

proptest! {
    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            ab.add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&QSeries::one(ORDER)).unwrap(), a.clone());
        prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
    }

    #[test]
    fn xpoly_eval_is_a_ring_map(a in xpoly(), b in xpoly()) {
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        prop_assert_eq!((&a + &b).eval_one(), a.eval_one() + b.eval_one());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }

    #[test]
    fn xpoly_text_round_trip(a in xpoly()) {
        prop_assert_eq!(a.to_string().parse::<XPoly>().unwrap(), a);
    }

    #[test]
    fn partition_text_round_trip(parts in prop::collection::btree_set(1u32..60, 1..8)) {
        let parts: Vec<u32> = parts.into_iter().rev().collect();
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn truncation_commutes_with_products(a in series(), b in series(), n in 0..=ORDER) {
        let full = a.mul(&b).unwrap().truncate(n).unwrap();
        let early = a.truncate(n).unwrap().mul(&b.truncate(n).unwrap()).unwrap();
        prop_assert_eq!(full, early);
    }
}

#[test]
fn pochhammer_inverse_is_exact() {
    for order in [0, 1, 7, 30, 60] {
        for d in 0..=12 {
            let product = q_pochhammer_even(d, order)
                .mul(&inv_q_pochhammer_even(d, order))
                .unwrap();
            assert_eq!(product, QSeries::one(order), "d={d}, order={order}");
        }
    }
}

#[test]
fn inverse_pochhammer_counts_even_partitions() {
    // brute-force count of partitions of 2k into even parts at most 2d
    fn count(total: u32, max_part: u32) -> i64 {
        if total == 0 {
            return 1;
        }
        (1..=max_part.min(total))
            .filter(|p| p % 2 == 0)
            .map(|p| count(total - p, p))
            .sum()
    }
    for d in 0..=6 {
        let s = inv_q_pochhammer_even(d, 30);
        for k in 0..=30 {
            let expected = if k % 2 == 1 {
                0
            } else {
                count(k, 2 * d as u32)
            };
            assert_eq!(
                s.coeff(k as usize).unwrap(),
                &XPoly::constant(expected),
                "d={d} k={k}"
            );
        }
    }
}

fn binomial(a: u64, b: u64) -> BigInt {
    (0..b).fold(BigInt::from(1), |acc, i| acc * (a - i) / (i + 1))
}

#[test]
fn q_binomial_symmetry_positivity_and_q_equals_one() {
    for a in 0..=20i64 {
        for b in 0..=a {
            let order = (b * (a - b)) as usize;
            let g = q_binomial(a, b, 1, order);
            assert_eq!(g, q_binomial(a, a - b, 1, order), "[{a};{b}]");
            let coeffs = g.int_coeffs();
            assert!(coeffs.iter().all(|c| *c >= BigInt::from(0)));
            assert_eq!(coeffs.iter().sum::<BigInt>(), binomial(a as u64, b as u64));
            // base q² just spreads the same coefficients over even degrees
            let g2 = q_binomial(a, b, 2, 2 * order);
            for (k, c) in g2.int_coeffs().iter().enumerate() {
                let expected = if k % 2 == 0 {
                    coeffs[k / 2].clone()
                } else {
                    BigInt::from(0)
                };
                assert_eq!(*c, expected);
            }
        }
    }
}

#[test]
fn euclidean_enumeration_matches_filtered_distinct_partitions() {
    for n in 1..=40 {
        let direct = enumerate_by_sum(n);
        let filtered: Vec<Partition> = distinct_partitions(n)
            .into_iter()
            .filter(is_euclidean)
            .collect();
        assert_eq!(direct, filtered, "n={n}");
        for p in &direct {
            assert_eq!(p.sum(), u64::from(n));
            let _ = weight_exponent(p).expect("nonnegative weight");
        }
    }
}

#[test]
fn irreducible_characterization_matches_definition() {
    for n in 1..=30 {
        for p in enumerate_by_sum(n) {
            assert_eq!(
                is_irreducible(&p).unwrap(),
                !can_reduce_by_two(&p, is_euclidean),
                "{p}"
            );
        }
    }
}

#[test]
fn reduced_characterization_matches_definition() {
    for n in 1..=30 {
        for p in no_adjacent_odd_partitions(n) {
            assert_eq!(
                is_reduced(&p),
                !can_reduce_by_two(&p, |q| q.has_no_adjacent_odds()),
                "{p}"
            );
        }
    }
}

#[test]
fn irreducible_and_reduced_generators_are_complete() {
    for n in 1..=24u32 {
        let members: Vec<Partition> = no_adjacent_odd_partitions(n);
        for d in 1..=7 {
            for largest in 1..=n {
                let want_irr: BTreeSet<_> = members
                    .iter()
                    .filter(|p| p.len() == d && p.largest() == Some(largest))
                    .filter(|p| is_euclidean(p) && is_irreducible(p).unwrap())
                    .cloned()
                    .collect();
                let got_irr: BTreeSet<_> = enumerate_irreducible(d, largest)
                    .into_iter()
                    .filter(|p| p.sum() == u64::from(n))
                    .collect();
                assert_eq!(
                    got_irr, want_irr,
                    "irreducible d={d} largest={largest} n={n}"
                );
                let want_red: BTreeSet<_> = members
                    .iter()
                    .filter(|p| p.len() == d && p.largest() == Some(largest) && is_reduced(p))
                    .cloned()
                    .collect();
                let got_red: BTreeSet<_> = enumerate_reduced(d, largest)
                    .into_iter()
                    .filter(|p| p.sum() == u64::from(n))
                    .collect();
                assert_eq!(got_red, want_red, "reduced d={d} largest={largest} n={n}");
            }
        }
    }
}

#[test]
fn decomposition_is_a_weight_preserving_bijection() {
    for n in 1..=40 {
        for p in enumerate_by_sum(n) {
            let (core, pad) = decompose(&p).unwrap();
            assert!(is_irreducible(&core).unwrap());
            assert_eq!(compose(&core, &pad).unwrap(), p);
            assert_eq!(
                weight_exponent(&core).unwrap(),
                weight_exponent(&p).unwrap()
            );
            assert_eq!(core.sum() + pad.sum(), p.sum());
        }
    }
}

#[test]
fn closed_form_matches_recurrence_on_a_wide_grid() {
    let order = 200;
    let table = ShapeTable::build(10, 30, order);
    for d in 1..=10 {
        for n in 1..=30 {
            let key = ShapeKey::new(d, n).unwrap();
            assert_eq!(&s_closed(key, order), table.get(key).unwrap(), "{key}");
        }
    }
}

#[test]
fn reduced_series_identity() {
    let order = 80;
    for d in 2..=8 {
        for n in 1..=24 {
            let key = ShapeKey::new(d, n).unwrap();
            let shorter = ShapeKey::new(d - 1, n).unwrap();
            let identity = s_closed(key, order)
                .add(&s_closed(shorter, order).shift_q(1))
                .unwrap()
                .eval_x_one();
            assert_eq!(s_tilde(key, order), identity);
        }
    }
}

#[test]
fn weighted_series_at_x_one_is_unweighted() {
    for order in [0, 1, 15, 40] {
        assert_eq!(
            euclid_series(order, true).eval_x_one(),
            euclid_series(order, false)
        );
    }
}

#[test]
fn pe_light_members_are_space_and_time_members() {
    for total in 1..=16 {
        let light = enumerate_pe_by_total(PEKind::Light, total);
        let as_kind = |p: &PEPartition, kind| {
            PEPartition::new(kind, p.m_parts().clone(), p.n_parts().clone()).unwrap()
        };
        for p in &light {
            assert!(is_pe_member(&as_kind(p, PEKind::Space)));
            assert!(is_pe_member(&as_kind(p, PEKind::Time)));
        }
        let space: BTreeSet<String> = enumerate_pe_by_total(PEKind::Space, total)
            .iter()
            .map(ToString::to_string)
            .collect();
        let both: BTreeSet<String> = enumerate_pe_by_total(PEKind::Time, total)
            .iter()
            .map(ToString::to_string)
            .filter(|s| space.contains(s))
            .collect();
        let light: BTreeSet<String> = light.iter().map(ToString::to_string).collect();
        assert_eq!(light, both, "total {total}");
    }
}

#[test]
fn pe_series_constant_term_and_low_degrees() {
    for kind in PEKind::ALL {
        let s = pe_series(kind, 6).int_coeffs();
        assert_eq!(s[0], BigInt::from(1));
        assert_eq!(s[1], BigInt::from(0));
    }
}

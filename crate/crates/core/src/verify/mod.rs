//! Cross-checks between the closed forms, the recurrences, the enumeration
//! oracle, and bundled reference data.
//!
//! Every suite returns a [`VerificationReport`]; disagreements are recorded as
//! data rather than raised as errors. Cells are visited in a fixed order, so
//! identical inputs give identical mismatch lists.

pub mod fixtures;
mod report;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::closedform::{
    euclid_series_with, pe_series, s_closed_with, s_tilde, OddExponent, ShapeKey, ShapeTable,
};
use crate::enumeration::{
    compose, decompose, enumerate_by_shape, enumerate_by_sum, enumerate_irreducible,
    enumerate_pe_by_largest_sum, enumerate_pe_by_total, enumerate_reduced, is_irreducible, phi,
    weight_exponent, PEKind, PEPartition, Partition,
};
use crate::qalgebra::{QSeries, XPoly};
use crate::{Error, Result};

use report::ReportBuilder;
pub use report::{Mismatch, VerificationReport};

/// `Σ x^{w(π)} q^{|π|}` over the given Euclidean partitions.
pub fn weighted_polynomial(partitions: &[Partition], order: usize) -> Result<QSeries> {
    let mut s = QSeries::zero(order);
    for p in partitions {
        let term = QSeries::monomial(
            XPoly::monomial(1, weight_exponent(p)? as usize),
            p.sum() as usize,
            order,
        );
        s.add_assign(&term)?;
    }
    Ok(s)
}

/// `Σ q^{|π|}` over any partitions.
pub fn counting_polynomial(partitions: &[Partition], order: usize) -> QSeries {
    let mut counts = vec![0i64; order + 1];
    for p in partitions {
        if let Some(c) = counts.get_mut(p.sum() as usize) {
            *c += 1;
        }
    }
    QSeries::from_ints(&counts, order)
}

/// Three-way check of the irreducible shape series (closed form, recurrence,
/// enumeration) and of the reduced shape series, over
/// `1 <= d <= d_max`, `1 <= n <= n_max`.
pub fn verify_shapes(d_max: usize, n_max: u32, order: usize) -> Result<VerificationReport> {
    verify_shapes_with(d_max, n_max, order, OddExponent::Correct)
}

pub fn verify_shapes_with(
    d_max: usize,
    n_max: u32,
    order: usize,
    odd: OddExponent,
) -> Result<VerificationReport> {
    if d_max < 1 || n_max < 2 {
        return Err(Error::contract(
            "shapes suite needs d_max >= 1 and n_max >= 2",
        ));
    }
    let mut report = ReportBuilder::new("shapes");
    let table = ShapeTable::build(d_max, n_max, order);
    let zero = QSeries::zero(order);
    for d in 1..=d_max {
        for n in 1..=n_max {
            let key = ShapeKey {
                parts: d,
                largest: n,
            };
            let oracle = weighted_polynomial(&enumerate_irreducible(d, n), order)?;
            let closed = s_closed_with(key, order, odd);
            let recurrence = table.get(key).expect("table covers the grid");
            report.check(
                || format!("{key} closed form vs enumeration"),
                &oracle,
                &closed,
            );
            report.check(
                || format!("{key} recurrence vs enumeration"),
                &oracle,
                recurrence,
            );
            report.require(
                || format!("{key} closed form"),
                closed.is_x_monomial_per_degree(),
                "one weight class per q-degree",
            );

            let reduced = counting_polynomial(&enumerate_reduced(d, n), order);
            let tilde_key = format!("s~({d},{n})");
            report.check(
                || format!("{tilde_key} vs enumeration"),
                &reduced,
                &s_tilde(key, order),
            );
            if d >= 2 {
                // s̃(d,n) = s(d,n) + q s(d-1,n), routed through the recurrence table
                let shorter = table
                    .get(ShapeKey {
                        parts: d - 1,
                        largest: n,
                    })
                    .unwrap_or(&zero);
                let identity = recurrence.add(&shorter.shift_q(1))?.eval_x_one();
                report.check(
                    || format!("{tilde_key} = s({d},{n}) + q s({},{n})", d - 1),
                    &reduced,
                    &identity,
                );
            }
        }
    }
    for ((d, n), terms) in fixtures::shapes()? {
        if d > d_max || n > n_max {
            continue;
        }
        let expected = QSeries::from_coeffs(
            (0..=order).map(|k| terms.get(&k).cloned().unwrap_or_default()),
            order,
        );
        let key = ShapeKey {
            parts: d,
            largest: n,
        };
        report.check(
            || format!("{key} reference value"),
            &expected,
            &s_closed_with(key, order, odd),
        );
    }
    Ok(report.finish())
}

/// Euclidean generating function against the enumeration oracle (weighted
/// and unweighted) for every degree up to `order`, against the bundled
/// reference series through `q^15`, and for consistency at `x = 1`.
pub fn verify_euclid_series(order: usize) -> Result<VerificationReport> {
    verify_euclid_series_with(order, OddExponent::Correct)
}

pub fn verify_euclid_series_with(order: usize, odd: OddExponent) -> Result<VerificationReport> {
    if order < 15 {
        return Err(Error::contract("euclid suite needs order >= 15"));
    }
    let mut report = ReportBuilder::new("euclid");
    let weighted = euclid_series_with(order, true, odd);
    let unweighted = euclid_series_with(order, false, odd);

    for k in 0..=order {
        let members = enumerate_by_sum(k as u32);
        let mut oracle = XPoly::zero();
        for p in &members {
            oracle += &XPoly::monomial(1, weight_exponent(p)? as usize);
        }
        // the constant term counts the empty partition
        let count = if k == 0 { 1 } else { members.len() };
        if k == 0 {
            oracle = XPoly::one();
        }
        report.check(
            || format!("weighted coefficient of q^{k} vs enumeration"),
            &oracle,
            weighted.coeff(k)?,
        );
        report.check(
            || format!("coefficient of q^{k} vs enumeration"),
            &XPoly::constant(count),
            unweighted.coeff(k)?,
        );
        report.check(
            || format!("weighted coefficient of q^{k} at x=1"),
            unweighted.coeff(k)?,
            &XPoly::constant(weighted.coeff(k)?.eval_one()),
        );
    }

    for (k, count) in fixtures::euclid_unweighted()? {
        report.check(
            || format!("coefficient of q^{k} reference value"),
            &XPoly::constant(count),
            unweighted.coeff(k)?,
        );
    }
    for (k, poly) in fixtures::euclid_weighted()? {
        report.check(
            || format!("weighted coefficient of q^{k} reference value"),
            &poly,
            weighted.coeff(k)?,
        );
    }

    let listed: BTreeSet<Partition> = fixtures::partitions_of_15()?.into_iter().collect();
    let found: BTreeSet<Partition> = enumerate_by_sum(15).into_iter().collect();
    report.check(
        || "partitions of 15 reference list".to_string(),
        &render_set(&listed),
        &render_set(&found),
    );

    let rows = fixtures::weights_d3()?;
    for largest in 4..=7 {
        let listed: BTreeSet<Partition> = rows
            .iter()
            .filter(|(p, _)| p.largest() == Some(largest))
            .map(|(p, _)| p.clone())
            .collect();
        let found: BTreeSet<Partition> = enumerate_by_shape(3, largest).into_iter().collect();
        report.check(
            || format!("three-part partitions with largest part {largest}"),
            &render_set(&listed),
            &render_set(&found),
        );
    }
    for (p, expected) in rows {
        report.check(
            || format!("phi({p})"),
            &BigInt::from(expected),
            &BigInt::from(phi(&p)?),
        );
    }
    Ok(report.finish())
}

fn render_set(set: &BTreeSet<Partition>) -> String {
    let items: Vec<String> = set.iter().rev().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// Round trip, uniqueness, and weight preservation of the irreducible
/// decomposition for every Euclidean partition with sum at most `sum_max`.
pub fn verify_decomposition(sum_max: u32) -> Result<VerificationReport> {
    if sum_max < 2 {
        return Err(Error::contract("decomposition suite needs sum_max >= 2"));
    }
    let mut report = ReportBuilder::new("decomposition");
    let mut cores_by_len: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();

    for n in 1..=sum_max {
        for p in enumerate_by_sum(n) {
            let (core, padding) = decompose(&p)?;
            let core_ok = is_irreducible(&core)?;
            report.require(
                || format!("decompose({p}) core {core}"),
                core_ok,
                "irreducible",
            );
            report.check(
                || format!("compose(decompose({p}))"),
                &p,
                &compose(&core, &padding)?,
            );
            report.check(
                || format!("weight exponent of {p} vs its core {core}"),
                &weight_exponent(&p)?,
                &weight_exponent(&core)?,
            );

            // every irreducible of the same length that leaves an even,
            // nonincreasing, nonnegative remainder
            let d = p.len();
            let cores = cores_by_len.entry(d).or_insert_with(|| {
                (1..=2 * d as u32)
                    .flat_map(|largest| enumerate_irreducible(d, largest))
                    .collect()
            });
            let valid: Vec<&Partition> = cores.iter().filter(|c| is_even_padding(&p, c)).collect();
            report.check(
                || format!("number of decompositions of {p}"),
                &1usize,
                &valid.len(),
            );
        }
    }

    for (p, core, padding) in fixtures::decompositions()? {
        if p.sum() > u64::from(sum_max) {
            continue;
        }
        let (c, pad) = decompose(&p)?;
        report.check(
            || format!("decompose({p}) reference value"),
            &format!("({core}) + ({padding})"),
            &format!("({c}) + ({pad})"),
        );
    }
    Ok(report.finish())
}

fn is_even_padding(p: &Partition, core: &Partition) -> bool {
    let mut prev = u32::MAX;
    p.parts().iter().zip(core.parts()).all(|(&a, &c)| {
        let ok = a >= c && (a - c) % 2 == 0 && a - c <= prev;
        prev = a.saturating_sub(c);
        ok
    })
}

/// Pseudo-Euclidean generating functions against pair enumeration for every
/// degree up to `order`, plus the ordering `light <= min(space, time)` and the
/// space/time mirror under exchanging components.
pub fn verify_pe(order: usize) -> Result<VerificationReport> {
    if order < 4 {
        return Err(Error::contract("pe suite needs order >= 4"));
    }
    let mut report = ReportBuilder::new("pe");
    let mut counts: BTreeMap<PEKind, Vec<usize>> = BTreeMap::new();
    let mut members: BTreeMap<PEKind, Vec<Vec<PEPartition>>> = BTreeMap::new();

    for kind in PEKind::ALL {
        let series = pe_series(kind, order);
        let by_degree: Vec<Vec<PEPartition>> = (0..=order)
            .map(|k| {
                if k == 0 {
                    Vec::new()
                } else {
                    enumerate_pe_by_total(kind, k as u32)
                }
            })
            .collect();
        let c: Vec<usize> = by_degree
            .iter()
            .enumerate()
            .map(|(k, m)| if k == 0 { 1 } else { m.len() })
            .collect();
        for (k, &count) in c.iter().enumerate() {
            report.check(
                || format!("{kind} coefficient of q^{k} vs enumeration"),
                &BigInt::from(count),
                &series.coeff(k)?.eval_one(),
            );
        }
        counts.insert(kind, c);
        members.insert(kind, by_degree);
    }

    for k in 0..=order {
        let light = counts[&PEKind::Light][k];
        let floor = counts[&PEKind::Space][k].min(counts[&PEKind::Time][k]);
        report.require(
            || format!("light count at q^{k}"),
            light <= floor,
            "at most min(space, time)",
        );
        let mirrored: BTreeSet<String> = members[&PEKind::Space][k]
            .iter()
            .map(|p| p.swapped().to_string())
            .collect();
        let time: BTreeSet<String> = members[&PEKind::Time][k]
            .iter()
            .map(ToString::to_string)
            .collect();
        report.require(
            || format!("space/time mirror at q^{k}"),
            mirrored == time,
            "swapped space members equal time members",
        );
    }

    // the classes can also be graded by m₁ + n₁; name the first degree where
    // that grading differs from the total used above
    let probe = order.min(12);
    'outer: for kind in PEKind::ALL {
        for (k, &total) in counts[&kind].iter().enumerate().take(probe + 1).skip(1) {
            let alt = enumerate_pe_by_largest_sum(kind, k as u32).len();
            if alt != total {
                report.note(format!(
                    "graded by total of parts; grading {kind} by m1+n1 gives {alt} instead of {total} at degree {k}"
                ));
                break 'outer;
            }
        }
    }
    Ok(report.finish())
}

/// Bounds for [`verify_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub d_max: usize,
    pub n_max: u32,
    pub shape_order: usize,
    pub euclid_order: usize,
    pub sum_max: u32,
    pub pe_order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            d_max: 8,
            n_max: 24,
            shape_order: shape_order_for(8),
            euclid_order: 40,
            sum_max: 40,
            pe_order: 24,
        }
    }
}

/// Smallest order that holds every irreducible shape with at most `d_max`
/// parts untruncated (their sums are at most `2+4+…+2d = d(d+1)`).
pub fn shape_order_for(d_max: usize) -> usize {
    d_max * (d_max + 1)
}

pub fn verify_all(bounds: Bounds) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        verify_shapes(bounds.d_max, bounds.n_max, bounds.shape_order)?,
        verify_euclid_series(bounds.euclid_order)?,
        verify_decomposition(bounds.sum_max)?,
        verify_pe(bounds.pe_order)?,
    ])
}

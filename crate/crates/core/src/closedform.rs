//! Closed forms and recurrences for the irreducible shape series `s(d, n)`,
//! the reduced-shape series `s̃(d, n)`, and the generating functions built
//! from them.
//!
//! Arguments are always `(d, n)` = (number of parts, largest part).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumeration::PEKind;
use crate::qalgebra::{inv_q_pochhammer_even, q_binomial, QSeries, XPoly};
use crate::{Error, Result};

/// Shape of a partition: its number of parts and its largest part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ShapeKey {
    pub parts: usize,
    pub largest: u32,
}

impl ShapeKey {
    pub fn new(parts: usize, largest: u32) -> Result<Self> {
        if parts == 0 || largest == 0 {
            return Err(Error::contract(format!(
                "shape ({parts}, {largest}) needs at least one part and a positive largest part"
            )));
        }
        Ok(ShapeKey { parts, largest })
    }
}

impl fmt::Display for ShapeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.parts, self.largest)
    }
}

/// Which q-exponent to use for shapes with an odd largest part `2n+1`.
///
/// `Correct` is `2n²-2dn+d²+3n`. `Mutant` subtracts a further `n`; it exists
/// so the verification suites can demonstrate that they reject a wrong
/// exponent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OddExponent {
    #[default]
    Correct,
    Mutant,
}

/// `s(d, n)` from its q-binomial closed form.
pub fn s_closed(key: ShapeKey, order: usize) -> QSeries {
    s_closed_with(key, order, OddExponent::Correct)
}

pub fn s_closed_with(key: ShapeKey, order: usize, odd: OddExponent) -> QSeries {
    let d = key.parts as i64;
    let largest = i64::from(key.largest);
    let half = largest / 2;
    // for largest = 2n:   x^{2n-d-1} q^{2n²-2dn-n+d²+2d} [n-1; 2n-d-1]_{q²}
    // for largest = 2n+1: x^{2n-d}   q^{2n²-2dn+d²+3n}   [n-1; 2n-d]_{q²}
    let (x_exp, q_exp, top, bottom) = if largest % 2 == 0 {
        let n = half;
        (
            2 * n - d - 1,
            2 * n * n - 2 * d * n - n + d * d + 2 * d,
            n - 1,
            2 * n - d - 1,
        )
    } else {
        let n = half;
        let mut q_exp = 2 * n * n - 2 * d * n + d * d + 3 * n;
        if odd == OddExponent::Mutant {
            q_exp -= n;
        }
        (2 * n - d, q_exp, n - 1, 2 * n - d)
    };
    if bottom < 0 || bottom > top {
        return QSeries::zero(order);
    }
    // a nonvanishing binomial forces both exponents to be nonnegative
    let x_exp = usize::try_from(x_exp).expect("x-exponent of a nonzero shape");
    let q_exp = usize::try_from(q_exp).expect("q-exponent of a nonzero shape");
    if q_exp > order {
        return QSeries::zero(order);
    }
    q_binomial(top, bottom, 2, order)
        .shift_q(q_exp)
        .shift_x(x_exp)
}

/// Table of `s(d, n)` for `1 <= d <= max_parts`, `0 <= n <= max_largest`,
/// filled by the recurrences
///
/// ```text
/// s(d, 2n)   = q^{2n} (s(d-1, 2n-1) + x s(d-1, 2n-2))
/// s(d, 2n+1) = q^{2n+1} s(d-1, 2n)
/// ```
///
/// from the base row `s(1, 2) = q²`, `s(1, n) = 0` otherwise.
#[derive(Clone, Debug)]
pub struct ShapeTable {
    order: usize,
    rows: Vec<Vec<QSeries>>,
}

impl ShapeTable {
    pub fn build(max_parts: usize, max_largest: u32, order: usize) -> Self {
        let width = max_largest as usize + 1;
        let x = XPoly::monomial(1, 1);
        let mut rows: Vec<Vec<QSeries>> = Vec::with_capacity(max_parts);
        for d in 1..=max_parts {
            let row: Vec<QSeries> = (0..width)
                .map(|n| {
                    if d == 1 {
                        return if n == 2 {
                            QSeries::monomial(XPoly::one(), 2, order)
                        } else {
                            QSeries::zero(order)
                        };
                    }
                    let prev = &rows[d - 2];
                    if n < 2 {
                        // s(d, 0) and s(d, 1) vanish for d >= 2
                        QSeries::zero(order)
                    } else if n % 2 == 0 {
                        let mut inner = prev[n - 1].clone();
                        inner
                            .add_assign(&prev[n - 2].scale(&x))
                            .expect("table entries share one order");
                        inner.shift_q(n)
                    } else {
                        prev[n - 1].shift_q(n)
                    }
                })
                .collect();
            rows.push(row);
        }
        ShapeTable { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `s(d, n)`, or `None` outside the table.
    pub fn get(&self, key: ShapeKey) -> Option<&QSeries> {
        self.rows
            .get(key.parts - 1)
            .and_then(|row| row.get(key.largest as usize))
    }
}

/// `s(d, n)` from the recurrence.
pub fn s_recurrence(key: ShapeKey, order: usize) -> QSeries {
    ShapeTable::build(key.parts, key.largest, order)
        .get(key)
        .cloned()
        .expect("table covers its own corner")
}

/// `s̃(d, n)` at `x = 1`: reduced partitions with `d` parts and largest part
/// `n`, no two adjacent parts odd, smallest part of either parity.
///
/// For `d >= 2` this is `s(d, n) + q s(d-1, n)` (an odd smallest part must be
/// a 1 sitting below a 2). For `d = 1` the only reduced partitions are `(1)`
/// and `(2)`.
pub fn s_tilde(key: ShapeKey, order: usize) -> QSeries {
    if key.parts == 1 {
        return match key.largest {
            1 => QSeries::monomial(XPoly::one(), 1, order),
            2 => QSeries::monomial(XPoly::one(), 2, order),
            _ => QSeries::zero(order),
        };
    }
    let with_even_tail = s_closed(key, order);
    let shorter = s_closed(
        ShapeKey {
            parts: key.parts - 1,
            largest: key.largest,
        },
        order,
    );
    with_even_tail
        .add(&shorter.shift_q(1))
        .expect("same order")
        .eval_x_one()
}

/// Shapes with `d` parts that may contribute at or below `q^order`.
///
/// An irreducible or reduced shape with `d` parts has largest part at most
/// `2d`, and any `d` distinct parts sum to at least `d(d+1)/2`.
fn contributing_shapes(order: usize) -> impl Iterator<Item = ShapeKey> {
    (1..)
        .take_while(move |&d: &usize| d * (d + 1) / 2 <= order)
        .flat_map(move |d| {
            let max_largest = (2 * d).min(order) as u32;
            (1..=max_largest).map(move |largest| ShapeKey { parts: d, largest })
        })
}

/// `Σ_{d>=1} Σ_n shape(d, n) / (q²;q²)_d`, without the constant term.
fn sum_over_shapes(order: usize, shape: impl Fn(ShapeKey) -> QSeries) -> QSeries {
    let mut total = QSeries::zero(order);
    let mut current_parts = 0;
    let mut by_parts = QSeries::zero(order);
    let flush = |total: &mut QSeries, d: usize, acc: &QSeries| {
        if d > 0 && !acc.is_zero() {
            let term = acc
                .mul(&inv_q_pochhammer_even(d, order))
                .expect("same order");
            total.add_assign(&term).expect("same order");
        }
    };
    for key in contributing_shapes(order) {
        if key.parts != current_parts {
            flush(&mut total, current_parts, &by_parts);
            current_parts = key.parts;
            by_parts = QSeries::zero(order);
        }
        by_parts.add_assign(&shape(key)).expect("same order");
    }
    flush(&mut total, current_parts, &by_parts);
    total
}

/// Generating function of the Euclidean billiard partitions,
/// `1 + Σ_d Σ_n s(d, n)/(q²;q²)_d`. When `weighted` the coefficient of
/// `q^k` is `Σ x^w` over partitions of `k` with weight exponent `w`;
/// otherwise `x` is set to 1.
pub fn euclid_series(order: usize, weighted: bool) -> QSeries {
    euclid_series_with(order, weighted, OddExponent::Correct)
}

pub fn euclid_series_with(order: usize, weighted: bool, odd: OddExponent) -> QSeries {
    let body = sum_over_shapes(order, |key| s_closed_with(key, order, odd));
    let series = QSeries::one(order).add(&body).expect("same order");
    if weighted {
        series
    } else {
        series.eval_x_one()
    }
}

/// Generating function of the pseudo-Euclidean partitions of one type,
/// graded by the total of all parts, at `x = 1`.
///
/// The component with an even smallest part contributes
/// `Σ_k Σ_{n₁} s(k, n₁)/(q²;q²)_k`; an unconstrained component contributes
/// `Σ_l Σ_{m₁} s̃(l, m₁)/(q²;q²)_l`. The series is one plus the product of
/// the two component sums, which is the four-fold sum over `k, l, n₁, m₁`
/// with its inner sums factored.
pub fn pe_series(kind: PEKind, order: usize) -> QSeries {
    let even_tail = sum_over_shapes(order, |key| s_closed(key, order)).eval_x_one();
    let product = match kind {
        PEKind::Light => even_tail.mul(&even_tail),
        PEKind::Space | PEKind::Time => {
            let any_tail = sum_over_shapes(order, |key| s_tilde(key, order));
            match kind {
                // n-list has the even tail, m-list is free
                PEKind::Space => even_tail.mul(&any_tail),
                _ => any_tail.mul(&even_tail),
            }
        }
    }
    .expect("same order");
    QSeries::one(order).add(&product).expect("same order")
}

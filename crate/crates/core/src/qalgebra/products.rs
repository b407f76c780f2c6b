use num_bigint::BigInt;

use super::{QSeries, XPoly};

/// `(q^2;q^2)_d = (1-q^2)(1-q^4)...(1-q^{2d})`, truncated at `order`.
pub fn q_pochhammer_even(d: usize, order: usize) -> QSeries {
    let mut c = vec![BigInt::from(0); order + 1];
    c[0] = BigInt::from(1);
    for j in 1..=d {
        let step = 2 * j;
        if step > order {
            break;
        }
        // multiply by (1 - q^step), high degrees first so c[k - step] is still old
        for k in (step..=order).rev() {
            let lower = c[k - step].clone();
            c[k] -= lower;
        }
    }
    QSeries::from_coeffs(c.into_iter().map(XPoly::constant), order)
}

/// `1/(q^2;q^2)_d`, truncated at `order`: the coefficient of `q^{2k}` counts
/// partitions of `2k` into even parts no larger than `2d`.
pub fn inv_q_pochhammer_even(d: usize, order: usize) -> QSeries {
    let mut c = vec![BigInt::from(0); order + 1];
    c[0] = BigInt::from(1);
    for j in 1..=d {
        let step = 2 * j;
        if step > order {
            break;
        }
        // multiply by 1/(1 - q^step) = 1 + q^step + q^{2 step} + ...
        for k in step..=order {
            let lower = c[k - step].clone();
            c[k] += lower;
        }
    }
    QSeries::from_coeffs(c.into_iter().map(XPoly::constant), order)
}

/// Gaussian polynomial `[a; b]` in the variable `q^base_exponent`, truncated
/// at `order`. Zero when `b < 0` or `b > a`.
///
/// Built from the Pascal-type recurrence
/// `[r; j] = [r-1; j-1] + q^{base_exponent * j} [r-1; j]`, so every
/// intermediate value is a polynomial and no division is performed.
pub fn q_binomial(a: i64, b: i64, base_exponent: usize, order: usize) -> QSeries {
    if b < 0 || b > a {
        return QSeries::zero(order);
    }
    let (a, b) = (a as usize, b as usize);
    // row[j] holds [r; j] for the current r, j = 0..=min(r, b)
    let mut row: Vec<QSeries> = vec![QSeries::one(order)];
    for r in 1..=a {
        let width = r.min(b);
        let mut next = Vec::with_capacity(width + 1);
        next.push(QSeries::one(order));
        for j in 1..=width {
            let mut entry = row[j - 1].clone();
            if j < row.len() && j < r {
                let shifted = row[j].shift_q(base_exponent * j);
                entry.add_assign(&shifted).expect("rows share one order");
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(b)
}

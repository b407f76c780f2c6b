use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::XPoly;
use crate::{Error, Result};

/// Power series in `q` with [`XPoly`] coefficients, truncated at `order`.
///
/// Every term `q^k` with `k > order` has been discarded, and `coeffs` always
/// has exactly `order + 1` entries. Binary operations require both operands to
/// carry the same order; mismatches are reported, never silently aligned.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<XPoly>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            order,
            coeffs: vec![XPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(XPoly::one(), 0, order)
    }

    /// `c * q^degree`, or zero if `degree > order`.
    pub fn monomial(c: XPoly, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; entries past `order` are
    /// dropped and missing ones are zero.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = XPoly>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series with constant (x-free) integer coefficients.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| XPoly::constant(c)), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(XPoly::is_zero)
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: usize) -> Result<&XPoly> {
        self.coeffs.get(k).ok_or_else(|| {
            Error::contract(format!(
                "q-degree {k} is outside a series truncated at order {}",
                self.order
            ))
        })
    }

    /// Re-truncate to a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> Result<QSeries> {
        if order > self.order {
            return Err(Error::contract(format!(
                "cannot extend a series of order {} to order {order}",
                self.order
            )));
        }
        Ok(QSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, rhs: &QSeries, op: &str) -> Result<()> {
        if self.order == rhs.order {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "{op} of series with orders {} and {}",
                self.order, rhs.order
            )))
        }
    }

    pub fn add(&self, rhs: &QSeries) -> Result<QSeries> {
        self.check_order(rhs, "addition")?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &QSeries) -> Result<QSeries> {
        self.check_order(rhs, "subtraction")?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QSeries {
            order: self.order,
            coeffs,
        })
    }

    /// In-place `self += rhs`.
    pub fn add_assign(&mut self, rhs: &QSeries) -> Result<()> {
        self.check_order(rhs, "addition")?;
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &QSeries) -> Result<QSeries> {
        self.check_order(rhs, "product")?;
        let mut out = QSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiply every coefficient by a polynomial in `x`.
    pub fn scale(&self, c: &XPoly) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^k`, dropping what falls past the order.
    pub fn shift_q(&self, k: usize) -> QSeries {
        let mut out = QSeries::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Multiply by `x^k`.
    pub fn shift_x(&self, k: usize) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.shift(k)).collect(),
        }
    }

    /// Substitute `x = 1`: every coefficient becomes a constant.
    pub fn eval_x_one(&self) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| XPoly::constant(c.eval_one()))
                .collect(),
        }
    }

    /// Coefficients at `x = 1`, one integer per q-degree.
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(XPoly::eval_one).collect()
    }
}

/// Renders nonzero terms in increasing q-degree, e.g.
/// `x^2*q^23 + x^2*q^25`, `1 + (1+x)*q^6`, `1 - q^2`.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let single = c
                .coeffs()
                .iter()
                .filter(|a| !num_traits::Zero::is_zero(*a))
                .count()
                == 1;
            let negative = single && c.coeffs().iter().any(Signed::is_negative);
            let magnitude = if negative { -c } else { c.clone() };
            let body = if k == 0 {
                if single {
                    magnitude.to_string()
                } else {
                    format!("({magnitude})")
                }
            } else {
                let q = if k == 1 {
                    "q".to_string()
                } else {
                    format!("q^{k}")
                };
                if magnitude == XPoly::one() {
                    q
                } else if single {
                    format!("{magnitude}*{q}")
                } else {
                    format!("({magnitude})*{q}")
                }
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => f.write_str(&body)?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl QSeries {
    /// True when every coefficient is a single monomial in `x` (or zero).
    pub fn is_x_monomial_per_degree(&self) -> bool {
        self.coeffs.iter().all(|c| {
            c.coeffs()
                .iter()
                .filter(|a| !num_traits::Zero::is_zero(*a))
                .count()
                <= 1
        })
    }

    /// Whether the series is the constant `1`.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].coeffs().len() == 1
            && self.coeffs[0].coeffs()[0].is_one()
            && self.coeffs[1..].iter().all(XPoly::is_zero)
    }
}

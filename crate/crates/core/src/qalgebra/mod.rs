//! Exact arithmetic for generating functions.
//!
//! [`XPoly`] is a polynomial in the weight marker `x` with arbitrary-precision
//! integer coefficients; [`QSeries`] is a power series in `q` truncated at a
//! fixed order whose coefficients are `XPoly`s. On top of these sit the
//! even q-Pochhammer symbol `(q^2;q^2)_d`, its inverse, and Gaussian
//! polynomials computed by the additive Pascal recurrence.

mod products;
mod series;
mod xpoly;

pub use products::{inv_q_pochhammer_even, q_binomial, q_pochhammer_even};
pub use series::QSeries;
pub use xpoly::XPoly;

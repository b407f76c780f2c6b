//! Billiard partitions: exact enumeration, weights, and q-series generating
//! functions for the partition classes attached to periodic trajectories of
//! ellipsoidal billiards in Euclidean and pseudo-Euclidean spaces.
//!
//! The crate is split into five layers:
//!
//! - [`qalgebra`]: polynomials in the weight marker `x` over big integers and
//!   truncated power series in `q` with such coefficients.
//! - [`enumeration`]: brute-force generation and classification of partitions.
//!   This is the ground truth every closed form is checked against.
//! - [`closedform`]: the q-binomial closed forms and recurrences for the
//!   irreducible shape series, and the assembled generating functions.
//! - [`verify`]: cross-check suites producing [`verify::VerificationReport`]s.
//! - [`cli`]: the command-line surface used by the `billiard-partitions` binary.

pub mod cli;
pub mod closedform;
pub mod enumeration;
mod error;
pub mod qalgebra;
pub mod verify;

pub use error::{Error, Result};

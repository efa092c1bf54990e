//! Exact weight multiplicities for fundamental strings of the classical
//! complex Lie algebras.
//!
//! A *p-fundamental string* is the family of irreducible representations
//! with highest weights `k w1 + wp` for `k = 0, 1, 2, ...`. This crate
//! evaluates their weight multiplicities two independent ways:
//!
//! * [`formulas`] — closed alternating sums of binomial coefficients,
//!   exact at any rank and any `k`;
//! * [`oracle`] — the classical Freudenthal recursion over the root
//!   system, practical at small rank and used as ground truth.
//!
//! All arithmetic is exact: weights are doubled integers (so the spin
//! coset needs no rationals) and multiplicities are big integers.

pub mod error;
pub mod formulas;
pub mod oracle;
pub mod verify;
pub mod weights;

pub use error::Error;
pub use weights::{Family, LieType, StringLabel, Variant, Weight, WeightDiagram};

//! Coded caching schemes built from combinatorial designs.
//!
//! The crate has three layers:
//!
//! * [`designs`] constructs and verifies the combinatorial objects
//!   (BIBDs, biplanes, Steiner 3-designs, transversal designs), including
//!   the finite-field machinery behind the parameterized families.
//! * [`caching`] turns a design into a binary caching matrix, builds the
//!   identity-submatrix cover for each of the five supported schemes, and
//!   checks covers and scheme metrics by brute force.
//! * [`delivery`] runs the whole placement/delivery pipeline on byte
//!   payloads: cache filling, XOR-coded broadcast, per-user decoding, and
//!   rate measurement.
//!
//! All arithmetic on rates and fractions is exact rational; nothing in the
//! public API uses floating point.

pub mod bitmat;
pub mod caching;
pub mod delivery;
pub mod designs;
pub mod gf;
pub mod rational;

pub use bitmat::BitMatrix;
pub use rational::Rational;

/// Exact binomial coefficient, for index arithmetic at desk scale.
pub(crate) fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    usize::try_from(num_integer::binomial(n as u128, k as u128))
        .expect("binomial fits usize at the sizes used here")
}

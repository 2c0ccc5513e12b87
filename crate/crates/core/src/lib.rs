//! Exact-arithmetic toolkit for degenerate Frobenius–Euler and degenerate
//! Euler polynomials: special numbers, polynomial families, umbral difference
//! operators, representation of arbitrary polynomials in these bases, and
//! verification of the identities that follow from them.
//!
//! All arithmetic is over arbitrary-precision rationals; nothing here rounds.

pub mod batch;
pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod identities;
pub mod numbers;
pub mod operators;
pub mod representation;

pub use error::{Error, Result};

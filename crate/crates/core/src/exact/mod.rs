//! Exact arithmetic substrate: rationals, dense polynomials and truncated
//! exponential generating functions with polynomial coefficients.

pub mod poly;
pub mod rational;
pub mod series;

pub use poly::{poly_arith, Poly, PolyOp};
pub use rational::{format_rational, parse_rational, Rational};
pub use series::PolySeries;

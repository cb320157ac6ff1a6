//! Exact arithmetic: rationals, polynomials, cyclotomic fields, real
//! coordinate fields and linear algebra over `Q(ζ_M)`.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod real;

pub use cyclotomic::{cyc_arith, cyc_root, totient, CycOp, Cyclotomic, CyclotomicField};
pub use matrix::{kernel, CycMatrix, Kernel};
pub use poly::QPoly;
pub use real::{real_sign, RealAlgebraic, RealField};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

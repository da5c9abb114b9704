//! Numeric foundation: complex helpers with fixed branch conventions and
//! real-coefficient polynomials.

mod complex;
mod poly;

pub use complex::{
    checked_div, cx, expm1_cx, pi_b_over_sin_pi_b, principal_ln, principal_pow, principal_sqrt, ComplexScalar,
};
pub(crate) use complex::{exprel_cx, is_finite, is_nonpositive_integer};
pub use poly::RealPolynomial;

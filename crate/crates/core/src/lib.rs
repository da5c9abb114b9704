//! Kummer's function `U(a,b,z)` and its derivative for small arguments.
//!
//! Three independent evaluation routes are provided: a power series around
//! `z = 0` that stays accurate as `b -> 0` ([`powerseries`]), a convergent
//! expansion in modified Bessel functions ([`convergent`]) and Slater's
//! large-`a` asymptotic expansion ([`slater`]).

pub mod besselkit;
pub mod convergent;
mod error;
pub mod gammakit;
pub mod numcore;
mod outcome;
pub mod powerseries;
pub mod slater;

pub use error::{KummerError, Result};
pub use numcore::{cx, ComplexScalar, RealPolynomial};
pub use outcome::{EvalOutcome, Flags, Method};

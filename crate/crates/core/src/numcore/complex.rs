//! Complex helpers with principal branches on the cut plane C \ (-inf, 0].
//!
//! `num_complex` already follows the principal branch, except that a negative
//! real number carrying a signed zero imaginary part `-0.0` lands on the lower
//! lip of the cut. Every branch-sensitive helper here canonicalises that case
//! so that `Arg z` is always in `(-pi, pi]`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{KummerError, Result};

/// Double-precision complex value used throughout the crate.
pub type ComplexScalar = Complex64;

/// Shorthand constructor.
#[inline]
pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub(crate) fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

#[inline]
fn canonical(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// Division that refuses an exact zero divisor.
pub fn checked_div(x: Complex64, y: Complex64) -> Result<Complex64> {
    if y.re == 0.0 && y.im == 0.0 {
        return Err(KummerError::domain("division by exact zero"));
    }
    Ok(x / y)
}

/// Principal logarithm, `Arg` in `(-pi, pi]`.
pub fn principal_ln(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(KummerError::domain("logarithm of zero"));
    }
    let z = canonical(z);
    Ok(Complex64::new(z.norm().ln(), z.im.atan2(z.re)))
}

/// Principal square root; the result has nonnegative real part.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    canonical(z).sqrt()
}

/// `z^p = exp(p ln z)` on the principal branch. `0^p` is `0` for `Re p > 0`.
pub fn principal_pow(z: Complex64, p: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        if p.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(KummerError::domain("zero raised to a power with nonpositive real part"));
    }
    Ok((p * principal_ln(z)?).exp())
}

/// `exp(w) - 1` without cancellation for small `|w|`.
///
/// The real part is assembled from `expm1(x) cos y - 2 sin^2(y/2)`, which is
/// accurate for every `w`; the imaginary part `e^x sin y` has no cancellation.
pub fn expm1_cx(w: Complex64) -> Result<Complex64> {
    if !is_finite(w) {
        return Err(KummerError::domain("expm1 of a non-finite argument"));
    }
    let (x, y) = (w.re, w.im);
    let em1 = x.exp_m1();
    let half_sin = (0.5 * y).sin();
    let re = em1 * y.cos() - 2.0 * half_sin * half_sin;
    let im = x.exp() * y.sin();
    let out = Complex64::new(re, im);
    if !is_finite(out) {
        return Err(KummerError::Overflow(format!("expm1 overflows at Re w = {x}")));
    }
    Ok(out)
}

/// `(e^w - 1) / w`, equal to 1 at `w = 0`.
pub(crate) fn exprel_cx(w: Complex64) -> Result<Complex64> {
    if w.norm() < 1e-3 {
        // w/2 + w^2/6 + w^3/24 + w^4/120; next term ~ 1e-18
        let s = 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
        return Ok(s);
    }
    Ok(expm1_cx(w)? / w)
}

/// `pi b / sin(pi b)`, finite through the removable singularity at `b = 0`.
pub fn pi_b_over_sin_pi_b(b: Complex64) -> Result<Complex64> {
    let x = b * PI;
    if b.norm() < 1e-2 {
        let x2 = x * x;
        return Ok(1.0 + x2 * (1.0 / 6.0 + x2 * (7.0 / 360.0 + x2 * (31.0 / 15120.0))));
    }
    if b.im == 0.0 && b.re.fract() == 0.0 {
        return Err(KummerError::domain("sin(pi b) vanishes at a nonzero integer b"));
    }
    Ok(x / x.sin())
}

/// True when `x` is (exactly) a nonpositive integer.
#[inline]
pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

//! Modified Bessel functions `I_nu(w)` and `K_nu(w)` of real order.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{KummerError, Result};
use crate::gammakit::recip_gamma;
use crate::numcore::{is_finite, principal_pow};

/// Largest `|nu|` accepted.
pub const MAX_ORDER: f64 = 3.0;
/// Largest `|w|` accepted by the ascending series.
pub const MAX_I_ARG: f64 = 30.0;
/// `|w|` at which [`bessel_k`] switches from the connection formula to quadrature.
pub const K_SEAM: f64 = 2.0;

const MAX_QUAD_NODES: usize = 200_000;

fn check_order(nu: f64) -> Result<()> {
    if !nu.is_finite() || nu.abs() > MAX_ORDER {
        return Err(KummerError::domain(format!("Bessel order must satisfy |nu| <= 3, got {nu}")));
    }
    Ok(())
}

/// `I_nu(w)` from the ascending series `(w/2)^nu sum (w^2/4)^k / (k! Gamma(nu+k+1))`.
pub fn bessel_i(nu: f64, w: Complex64) -> Result<Complex64> {
    check_order(nu)?;
    if !is_finite(w) || w.norm() > MAX_I_ARG {
        return Err(KummerError::domain(format!("bessel_i needs |w| <= {MAX_I_ARG}, got {w}")));
    }
    // I_{-n} = I_n keeps the term recurrence away from 1/Gamma zeros
    let nu = if nu < 0.0 && nu.fract() == 0.0 { -nu } else { nu };
    if w.norm() == 0.0 {
        return if nu == 0.0 {
            Ok(Complex64::new(1.0, 0.0))
        } else if nu > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(KummerError::domain(format!("I_{nu}(0) is infinite")))
        };
    }
    let q = 0.25 * w * w;
    let mut term = recip_gamma(Complex64::new(nu + 1.0, 0.0));
    let mut sum = term;
    for k in 0..500 {
        let kf = k as f64;
        let denom = (kf + 1.0) * (nu + kf + 1.0);
        term *= q / denom;
        sum += term;
        // past the peak, terms shrink geometrically
        if term.norm() <= 1e-17 * sum.norm() && q.norm() < denom.abs() {
            return Ok(principal_pow(0.5 * w, Complex64::new(nu, 0.0))? * sum);
        }
    }
    Err(KummerError::NonConvergence { terms: 500, last_term: term.norm() })
}

/// `K_nu(w)` for `Re w > 0`.
///
/// For `|w| <= 2` this is `pi / (2 sin(pi nu)) (I_{-nu}(w) - I_nu(w))`, which
/// needs `nu` at least `1e-6` away from an integer. Beyond the seam the
/// integral `int_0^inf e^{-w cosh t} cosh(nu t) dt` is summed by the
/// trapezoidal rule.
pub fn bessel_k(nu: f64, w: Complex64) -> Result<Complex64> {
    check_order(nu)?;
    if !is_finite(w) || w.re <= 0.0 {
        return Err(KummerError::domain(format!("bessel_k needs Re w > 0, got {w}")));
    }
    if w.norm() <= K_SEAM {
        bessel_k_connection(nu, w)
    } else {
        bessel_k_integral(nu, w, None)
    }
}

/// The small-argument branch of [`bessel_k`], usable at any `|w|` for testing.
pub fn bessel_k_connection(nu: f64, w: Complex64) -> Result<Complex64> {
    check_order(nu)?;
    if (nu - nu.round()).abs() < 1e-6 {
        return Err(KummerError::domain(format!("connection formula for K needs a non-integer order, got {nu}")));
    }
    let diff = bessel_i(-nu, w)? - bessel_i(nu, w)?;
    Ok(PI / (2.0 * (PI * nu).sin()) * diff)
}

/// Trapezoidal rule for `int_0^inf e^{-w cosh t} cosh(nu t) dt`.
///
/// The integrand is even and analytic in the strip `|Im t| < pi/2 - |arg w|`,
/// so the rule converges geometrically in `1/h`. By default `h` is chosen so
/// that the discretisation error is near `e^{-45}`; passing `step` overrides it.
pub fn bessel_k_integral(nu: f64, w: Complex64, step: Option<f64>) -> Result<Complex64> {
    check_order(nu)?;
    if !is_finite(w) || w.re <= 0.0 {
        return Err(KummerError::domain(format!("bessel_k needs Re w > 0, got {w}")));
    }
    let strip = FRAC_PI_2 - w.arg().abs();
    let h = step.unwrap_or_else(|| (2.0 * PI * 0.9 * strip / 45.0).min(0.25));
    // truncate where Re(w) cosh t - |nu| t exceeds its value at 0 by 45
    let mut t_max: f64 = 1.0;
    while w.re * (t_max.cosh() - 1.0) - nu.abs() * t_max < 45.0 {
        t_max += 0.5;
    }
    let n = (t_max / h).ceil() as usize;
    if n > MAX_QUAD_NODES {
        return Err(KummerError::domain(format!("K quadrature at w = {w} needs {n} nodes")));
    }
    let f = |t: f64| (-w * t.cosh()).exp() * (nu * t).cosh();
    let mut sum = 0.5 * f(0.0);
    for j in 1..=n {
        sum += f(j as f64 * h);
    }
    Ok(h * sum)
}

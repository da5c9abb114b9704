use std::f64::consts::PI;

use num_complex::Complex64;

use super::table::RGAMMA_COEFFS;
use crate::error::{KummerError, Result};
use crate::numcore::is_nonpositive_integer;

/// Largest `|v|` at which the Taylor table is summed directly. The neglected
/// tail there is about `5e-17`.
const DIRECT_RADIUS: f64 = 1.2;

/// `sum_{k=1}^{28} c_k v^{k-1}`, which equals `1/Gamma(1+v)`.
fn rgamma1p(v: Complex64) -> Complex64 {
    RGAMMA_COEFFS.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * v + c)
}

/// `1/Gamma(1+v)` for any `v` with `|Re v| <= 1/2`.
///
/// Large imaginary parts are halved with the duplication formula
/// `1/Gamma(2x) = sqrt(pi) 2^{1-2x} / (Gamma(x) Gamma(x+1/2))`, written at
/// `2x = 1+v`, until the argument falls inside the direct disc.
fn rgamma1p_any(v: Complex64) -> Complex64 {
    if v.norm() <= DIRECT_RADIUS {
        return rgamma1p(v);
    }
    let h = 0.5 * v;
    // 1/Gamma(1+v) = sqrt(pi) 2^{-v} / (Gamma((1+v)/2) Gamma(1+v/2))
    let pow2 = (-v * std::f64::consts::LN_2).exp();
    PI.sqrt() * pow2 * recip_gamma(h + 0.5) * rgamma1p_any(h)
}

/// Reciprocal gamma function, entire in `w`.
///
/// The argument is split as `w = n + v` with `n` the nearest integer to
/// `Re w`; `1/Gamma(1+v)` comes from the coefficient table and the functional
/// equation walks it back to `w`. No step divides by `v`, so exact zeros at the
/// nonpositive integers come out exactly.
pub fn recip_gamma(w: Complex64) -> Complex64 {
    let n = w.re.round();
    let v = w - n;
    let base = rgamma1p_any(v); // 1/Gamma(1+v)
    let n = n as i64;
    if n >= 1 {
        // 1/Gamma(v+n) = 1/Gamma(1+v) / ((v+1)...(v+n-1))
        let mut r = base;
        for j in 1..n {
            r /= v + j as f64;
        }
        r
    } else {
        // 1/Gamma(v+n) = 1/Gamma(1+v) * v (v-1) ... (v+n)
        let mut r = base;
        for j in 0..=(-n) {
            r *= v - j as f64;
        }
        r
    }
}

/// Gamma function as the reciprocal of [`recip_gamma`].
pub fn gamma_fn(w: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(w) {
        return Err(KummerError::domain(format!("gamma has a pole at {}", w.re)));
    }
    let r = recip_gamma(w);
    if r.re == 0.0 && r.im == 0.0 {
        return Err(KummerError::Overflow(format!("gamma overflows at {w}")));
    }
    Ok(1.0 / r)
}

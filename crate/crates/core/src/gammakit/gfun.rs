//! The difference function `G(a,b) = (1/Gamma(a+1+b) - 1/Gamma(a+1)) / b`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::recip::{gamma_fn, recip_gamma};
use super::table::RGAMMA_COEFFS;
use crate::error::{KummerError, Result};

const SERIES_DOMAIN: f64 = 0.5;

/// Sum `sum_{k>=2} c_k d_k` without a domain check.
///
/// `d_k = ((a+b)^{k-1} - a^{k-1}) / b` obeys a three-term recurrence whose
/// coefficients are polynomial in `b`, so `b = 0` needs no special case.
fn g_series_raw(a: Complex64, b: Complex64) -> Complex64 {
    let s = 2.0 * a + b;
    let p = a * (a + b);
    let (mut d_prev, mut d) = (Complex64::new(1.0, 0.0), s);
    let mut sum = RGAMMA_COEFFS[1] * d_prev + RGAMMA_COEFFS[2] * d;
    let mut small = 0;
    for &c in &RGAMMA_COEFFS[3..] {
        let next = s * d - p * d_prev;
        let term = c * next;
        sum += term;
        if term.norm() < 1e-17 {
            small += 1;
            if small == 2 {
                break;
            }
        } else {
            small = 0;
        }
        d_prev = d;
        d = next;
    }
    sum
}

/// `G(a,b)` from the reciprocal gamma series, for `|a|, |a+b| <= 1/2`.
pub fn g_series(a: Complex64, b: Complex64) -> Result<Complex64> {
    if a.norm() > SERIES_DOMAIN || (a + b).norm() > SERIES_DOMAIN {
        return Err(KummerError::domain(format!("g_series needs |a| <= 1/2 and |a+b| <= 1/2, got a = {a}, b = {b}")));
    }
    Ok(g_series_raw(a, b))
}

/// `(G(a+1,b), G(a+2,b))` from `g0 = G(a,b)`.
pub fn g_shift(a: Complex64, b: Complex64, g0: Complex64) -> Result<(Complex64, Complex64)> {
    let f1 = (a + 1.0) * (a + b + 1.0);
    let f2 = (a + 2.0) * (a + b + 2.0);
    if f1.norm() == 0.0 || f2.norm() == 0.0 {
        return Err(KummerError::domain(format!("G shift factor vanishes at a = {a}, b = {b}")));
    }
    let g1 = ((a + 1.0) * g0 - recip_gamma(a + 1.0)) / f1;
    let g2 = ((2.0 * a + b + 3.0) * g1 - g0) / f2;
    Ok((g1, g2))
}

/// `G(a,b)` for `|Re a| <= 5/2` and moderate `b`.
///
/// Uses the series when it applies, the plain difference quotient when `|b|`
/// is large enough that it does not cancel, and otherwise up to two shifts of
/// the series value away from the nearest-integer reduction of `a`.
pub fn g_eval(a: Complex64, b: Complex64) -> Result<Complex64> {
    if a.norm() <= SERIES_DOMAIN && (a + b).norm() <= SERIES_DOMAIN {
        return Ok(g_series_raw(a, b));
    }
    if b.norm() >= 0.25 {
        return Ok((recip_gamma(a + 1.0 + b) - recip_gamma(a + 1.0)) / b);
    }
    if a.re.abs() > 2.5 {
        return Err(KummerError::domain(format!("G({a}, b) needs more than two shifts")));
    }
    let n = a.re.round().clamp(-2.0, 2.0);
    let a0 = a - n;
    let g0 = g_series_raw(a0, b);
    if n == 0.0 {
        return Ok(g0);
    }
    // G(a0+1) only needs (a0+1)(a0+b+1) != 0, which holds here
    let g1 = ((a0 + 1.0) * g0 - recip_gamma(a0 + 1.0)) / ((a0 + 1.0) * (a0 + b + 1.0));
    match n as i64 {
        1 => Ok(g1),
        2 => Ok(((2.0 * a0 + b + 3.0) * g1 - g0) / ((a0 + 2.0) * (a0 + b + 2.0))),
        _ => {
            // G(x) = (2x+b+3) G(x+1) - (x+2)(x+b+2) G(x+2)
            let (mut hi, mut lo) = (g1, g0);
            let mut x = a0;
            for _ in 0..(-n as i64) {
                x -= 1.0;
                let g = (2.0 * x + b + 3.0) * lo - (x + 2.0) * (x + b + 2.0) * hi;
                hi = lo;
                lo = g;
            }
            Ok(lo)
        }
    }
}

/// `Gamma_eps(z) = (Gamma(z+eps)/Gamma(z) - 1) / eps`, finite as `eps -> 0`.
pub fn gamma_eps(zv: Complex64, eps: Complex64) -> Result<Complex64> {
    Ok(-gamma_fn(zv + eps)? * g_eval(zv - 1.0, eps)?)
}

/// Circle radius and node count for the trapezoidal evaluation of `G`.
///
/// Node values of `1/Gamma` are computed once at construction.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    radius: f64,
    nodes: Vec<(Complex64, Complex64)>,
}

impl QuadratureSpec {
    pub fn new(radius: f64, nodes: usize) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(KummerError::domain(format!("quadrature radius must be positive, got {radius}")));
        }
        if nodes < 16 {
            return Err(KummerError::domain(format!("quadrature needs at least 16 nodes, got {nodes}")));
        }
        let h = 2.0 * PI / nodes as f64;
        let nodes = (0..nodes)
            .map(|j| {
                let z = Complex64::from_polar(radius, -PI + h * j as f64);
                (z, recip_gamma(z))
            })
            .collect();
        Ok(QuadratureSpec { radius, nodes })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn nodes(&self) -> usize {
        self.nodes.len()
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec::new(1.0, 64).expect("default quadrature spec is valid")
    }
}

/// `G(a,b)` as the contour integral `(1/2 pi) int 1/Gamma(z) / ((z-a)(z-a-b)) d theta`
/// over `z = r e^{i theta}`, by the trapezoidal rule.
pub fn g_quadrature(a: Complex64, b: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    let reach = a.norm().max((a + b).norm());
    if spec.radius <= reach {
        return Err(KummerError::domain(format!(
            "contour radius {} does not enclose the poles (need > {reach})",
            spec.radius
        )));
    }
    let sum: Complex64 = spec.nodes.iter().map(|&(z, rg)| rg / ((z - a) * (z - a - b))).sum();
    Ok(sum / spec.nodes.len() as f64)
}

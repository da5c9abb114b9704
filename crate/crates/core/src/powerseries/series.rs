use num_complex::Complex64;

use crate::error::{KummerError, Result};
use crate::gammakit::{g_eval, gamma_fn, recip_gamma};
use crate::numcore::{exprel_cx, is_finite, pi_b_over_sin_pi_b, principal_ln};

/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 200;
/// Default absolute tolerance on individual terms.
pub const DEFAULT_TOL: f64 = 1e-16;

/// Arguments of one small-`|z|` evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerInput {
    pub a: Complex64,
    pub b: Complex64,
    pub z: Complex64,
    pub max_terms: usize,
    pub tol: f64,
}

impl KummerInput {
    pub fn new(a: Complex64, b: Complex64, z: Complex64) -> Self {
        KummerInput { a, b, z, max_terms: DEFAULT_MAX_TERMS, tol: DEFAULT_TOL }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

/// Coefficients of the `u_m`, `B_m` recursions at step `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecursionCoeffs {
    pub a_m: Complex64,
    pub b_m: Complex64,
    pub c_m: Complex64,
    pub d_m: Complex64,
}

pub fn recursion_coeffs(m: usize, a: Complex64, b: Complex64) -> RecursionCoeffs {
    let mf = m as f64;
    let c_m = (mf + 1.0) * (mf + 2.0) * (mf + a + 1.0);
    let a_m = c_m - (mf * mf + (a + 2.0) * mf + a + 1.0) * b;
    let b_m = c_m + (mf + 2.0) * (a - b) * b;
    let d_m = -(mf * mf + 2.0 * mf * (a + 1.0) + 3.0 * a + 1.0) + (mf + 2.0) * b;
    RecursionCoeffs { a_m, b_m, c_m, d_m }
}

/// `v_{m+1} / v_m`.
#[inline]
fn v_ratio(m: usize, b: Complex64) -> Complex64 {
    let mf = m as f64;
    (mf + 2.0) * (b + mf + 1.0) * (2.0 - b + mf)
}

/// Loop state of the combined `U`, `U'` summation.
///
/// `w` and `beta` hold `P u_m / v_m` and `P B_m / v_m` with the prefactor
/// `P = (pi b / sin pi b) / (Gamma(a) Gamma(a-b+1))` folded in. In that form
/// neither seed has a pole at `a-b+1 = 0, -1, ...` and `v_m` is never formed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesState {
    pub m: usize,
    pub w: Complex64,
    pub beta: Complex64,
    pub sum_u: Complex64,
    pub sum_ud: Complex64,
}

/// `(z^{-b} - 1) / b` through `-ln z * (e^{-b ln z} - 1) / (-b ln z)`.
fn z_pow_minus_b_m1_over_b(log_z: Complex64, b: Complex64) -> Result<Complex64> {
    Ok(-log_z * exprel_cx(-b * log_z)?)
}

/// First coefficient `w_0 = u_0 / v_0` of the series, uniformly valid as `b -> 0`.
///
/// Every `1/b` singularity is carried by a `G` function or by
/// `(z^{-b} - 1)/b`, so nothing of size `1/b` is ever subtracted.
pub fn w0(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(KummerError::domain("w0 needs z != 0"));
    }
    let zf = z_pow_minus_b_m1_over_b(principal_ln(z)?, b)?;
    let g0p = g_eval(Complex64::new(0.0, 0.0), b)?;
    let g0m = g_eval(Complex64::new(0.0, 0.0), -b)?;
    let gam = g_eval(a, -b)?;
    let inner =
        gamma_fn(a + 1.0)? * (1.0 - b) * (1.0 + b * g0p) * gam + 1.0 + (b - 1.0) * g0p - g0m + zf * (1.0 - b * g0m);
    Ok(gamma_fn(a - b + 1.0)? / (b - 1.0) * inner)
}

/// Combined value and derivative sums on the base strip `|Re b| <= 1/2`.
pub(crate) struct SeriesSum {
    pub u: Complex64,
    pub u_prime: Complex64,
    pub terms: usize,
    pub est_abs_error: f64,
    pub converged: bool,
}

pub(crate) fn sum_base_strip(
    a: Complex64,
    b: Complex64,
    z: Complex64,
    max_terms: usize,
    tol: f64,
) -> Result<SeriesSum> {
    let log_z = principal_ln(z)?;
    let zf = z_pow_minus_b_m1_over_b(log_z, b)?;
    let z_mb = (-b * log_z).exp();
    let s = pi_b_over_sin_pi_b(b)?;
    let zero = Complex64::new(0.0, 0.0);
    let g0p = g_eval(zero, b)?;
    let g0m = g_eval(zero, -b)?;
    let gam = g_eval(a, -b)?;
    let rg_a = recip_gamma(a);

    let w = s / (b - 1.0)
        * (a * (1.0 - b) * (1.0 + b * g0p) * gam + rg_a * (1.0 + (b - 1.0) * g0p - g0m + zf * (1.0 - b * g0m)));
    let beta = s * rg_a * z_mb * recip_gamma(2.0 - b);
    // Gamma(1-b) / Gamma(a-b+1); exactly 1 when a = 0
    let first = recip_gamma(a - b + 1.0) / recip_gamma(1.0 - b);

    let mut st = SeriesState { m: 0, w, beta, sum_u: zero, sum_ud: zero };
    let mut fac = Complex64::new(1.0, 0.0); // z^m / m!
    let step = |st: &mut SeriesState, fac: &mut Complex64| {
        let r = recursion_coeffs(st.m, a, b);
        let v = v_ratio(st.m, b);
        let w = (r.a_m * st.w + r.d_m * st.beta) / v;
        st.beta = r.b_m * st.beta / v;
        st.w = w;
        st.m += 1;
        *fac *= z / st.m as f64;
    };
    let terms_at = |st: &SeriesState, fac: Complex64| {
        let tu = z * st.w * fac;
        let td = ((st.m + 1) as f64 * st.w + st.beta) * fac;
        (tu, td)
    };

    let mut converged = false;
    let mut last = f64::INFINITY;
    while st.m < max_terms {
        let (tu, td) = terms_at(&st, fac);
        st.sum_u += tu;
        st.sum_ud += td;
        last = tu.norm().max(td.norm());
        if tu.norm() < tol && td.norm() < tol {
            converged = true;
            break;
        }
        step(&mut st, &mut fac);
    }
    let terms = if converged { st.m + 1 } else { st.m };
    let est_abs_error = if converged {
        step(&mut st, &mut fac);
        let (tu, td) = terms_at(&st, fac);
        tu.norm().max(td.norm())
    } else {
        last
    };
    let u = first + st.sum_u;
    if !is_finite(u) || !is_finite(st.sum_ud) {
        return Err(KummerError::Overflow(format!("series for U({a}, {b}, {z}) is not finite")));
    }
    Ok(SeriesSum { u, u_prime: st.sum_ud, terms, est_abs_error, converged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammakit::EULER_GAMMA;
    use crate::numcore::cx;

    #[test]
    fn coefficient_examples() {
        let r = recursion_coeffs(0, cx(0.0, 0.0), cx(0.0, 0.0));
        assert_eq!((r.c_m, r.a_m, r.b_m, r.d_m), (cx(2.0, 0.0), cx(2.0, 0.0), cx(2.0, 0.0), cx(-1.0, 0.0)));
        let (a, b) = (cx(0.2, 0.0), cx(0.3, 0.0));
        for m in 0..=10 {
            let r = recursion_coeffs(m, a, b);
            assert!(((r.a_m - r.b_m) / b - r.d_m).norm() <= 1e-14 * r.d_m.norm().max(1.0));
        }
    }

    #[test]
    fn b_m_is_the_gamma_ratio() {
        // B_m is proportional to Gamma(a-b+1+m) Gamma(b+1+m) Gamma(m+2)
        let big_b = |m: f64, a: Complex64, b: Complex64| {
            gamma_fn(a - b + 1.0 + m).unwrap() * gamma_fn(b + 1.0 + m).unwrap() * gamma_fn(cx(m + 2.0, 0.0)).unwrap()
        };
        for &(a, b) in &[(cx(0.2, 0.1), cx(0.3, -0.2)), (cx(-0.4, 0.0), cx(0.45, 0.0)), (cx(0.1, 0.0), cx(-0.35, 0.1))]
        {
            for m in 0..=10 {
                let ratio = big_b(m as f64 + 1.0, a, b) / big_b(m as f64, a, b);
                let bm = recursion_coeffs(m, a, b).b_m;
                assert!((bm - ratio).norm() <= 1e-13 * ratio.norm(), "m = {m}");
            }
        }
    }

    #[test]
    fn v_m_positive_for_real_b() {
        for i in 0..=20 {
            let b = -0.5 + i as f64 * 0.05;
            let mut v = (1.0 - b) * pi_b_over_sin_pi_b(cx(b, 0.0)).unwrap().re;
            assert!(v > 0.0);
            for m in 0..50 {
                v *= v_ratio(m, cx(b, 0.0)).re;
                assert!(v > 0.0, "b = {b}, m = {m}");
            }
        }
    }

    #[test]
    fn w0_limit_at_origin_of_parameters() {
        // b w0 = 1/Gamma(1+b) - 1/(1-b) at a = 0, z = 1, whose slope at b = 0 is gamma - 1
        let w = w0(cx(0.0, 0.0), cx(0.0, 0.0), cx(1.0, 0.0)).unwrap();
        assert!((w.re - (EULER_GAMMA - 1.0)).abs() <= 1e-15);
        // symmetric difference quotient of the direct form at b = +-1e-4
        let direct = |b: f64| recip_gamma(cx(1.0 + b, 0.0)).re - 1.0 / (1.0 - b);
        let h = 1e-4;
        let slope = (direct(h) - direct(-h)) / (2.0 * h);
        assert!((w.re - slope).abs() <= 1e-7);
    }

    #[test]
    fn w0_against_direct_gamma_form() {
        // b w0 = Gamma(a+1)/Gamma(b+1) - z^{-b} Gamma(a-b+1)/Gamma(2-b)
        let direct = |a: Complex64, b: Complex64, z: Complex64| {
            (gamma_fn(a + 1.0).unwrap() * recip_gamma(b + 1.0)
                - (-b * z.ln()).exp() * gamma_fn(a - b + 1.0).unwrap() * recip_gamma(2.0 - b))
                / b
        };
        let cases = [
            (cx(0.0, 0.0), cx(0.5, 0.0), cx(1.0, 0.0)),
            (cx(0.3, 0.0), cx(-0.4, 0.0), cx(0.5, 0.5)),
            (cx(-0.2, 0.1), cx(0.35, -0.1), cx(-0.3, 0.6)),
        ];
        for (a, b, z) in cases {
            let w = w0(a, b, z).unwrap();
            let d = direct(a, b, z);
            assert!((w - d).norm() <= 1e-13 * d.norm().max(1.0), "{a} {b} {z}");
        }
    }

    #[test]
    fn w0_continuous_through_b_zero() {
        let (a, z) = (cx(0.2, 0.0), cx(1.0, 1.0));
        let p = w0(a, cx(1e-10, 0.0), z).unwrap();
        let m = w0(a, cx(-1e-10, 0.0), z).unwrap();
        assert!((p - m).norm() <= 1e-9);
        assert!(w0(a, cx(0.1, 0.0), cx(0.0, 0.0)).is_err());
    }
}

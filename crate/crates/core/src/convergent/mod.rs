//! Convergent expansion of `U` (and `M`) in `K`/`I` Bessel functions whose
//! coefficient functions `A(z)`, `B(z)` are summed as power series.

mod probe;

use num_complex::Complex64;

pub use probe::{backward_probe, backward_ratio, five_term_coeffs, FiveTermRow, ProbeReport, ProbeSeed, Sequence};

use crate::besselkit::{bessel_i, bessel_k};
use crate::error::{KummerError, Result};
use crate::gammakit::{gamma_fn, recip_gamma};
use crate::numcore::{is_finite, principal_pow, principal_sqrt};
use crate::outcome::{EvalOutcome, Flags, Method};

/// Number of coefficients used when the caller does not choose.
pub const DEFAULT_N: usize = 20;

/// `b` may not come closer than this to 0, 1 or 2.
pub const EXCLUDED_B_RADIUS: f64 = 1e-3;

/// `Gamma(x) / Gamma(x+d)` for real `x > 0`, without forming either gamma for large `x`.
fn gamma_ratio(x: f64, d: f64) -> f64 {
    let mut x0 = x;
    let mut prod = 1.0;
    while x0 > 2.0 {
        x0 -= 1.0;
        prod *= x0 / (x0 + d);
    }
    prod * recip_gamma(Complex64::new(x0 + d, 0.0)).re / recip_gamma(Complex64::new(x0, 0.0)).re
}

fn check_params(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) || a <= 0.0 {
        return Err(KummerError::domain(format!("the Bessel expansion needs real a > 0, got a = {a}")));
    }
    for c in [0.0, 1.0, 2.0] {
        if (b - c).abs() < EXCLUDED_B_RADIUS {
            return Err(KummerError::domain(format!(
                "b = {b} is within {EXCLUDED_B_RADIUS} of {c}; use the power series there"
            )));
        }
    }
    Ok(())
}

/// `(alpha_0, alpha_1, beta_0, beta_1)`.
pub fn init_alpha_beta(a: f64, b: f64) -> Result<(f64, f64, f64, f64)> {
    check_params(a, b)?;
    let alpha0 = a.powf(1.0 - b) * gamma_ratio(a, 1.0 - b);
    let alpha1 = (alpha0 * (b * b - b + 2.0 * a) - 2.0 * a) / (2.0 * b * (1.0 - b));
    let beta0 = a * (alpha0 - 1.0) / (1.0 - b);
    let beta1 = a * (alpha0 * (4.0 * a - 2.0 * b + b * b) - 4.0 * a + b * b) / (2.0 * b * (b - 1.0) * (b - 2.0));
    Ok((alpha0, alpha1, beta0, beta1))
}

/// Coefficients `alpha_k`, `beta_k` for `k = 0..=N`, stored as
/// `k! 2^k alpha_k` and `k! 2^k beta_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ABCoefficients {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub alpha_scaled: Vec<f64>,
    pub beta_scaled: Vec<f64>,
}

impl ABCoefficients {
    /// `1 / (k! 2^k)`
    fn unscale(k: usize) -> f64 {
        (1..=k).fold(1.0, |acc, j| acc / (2.0 * j as f64))
    }

    pub fn alpha(&self, k: usize) -> f64 {
        self.alpha_scaled[k] * Self::unscale(k)
    }

    pub fn beta(&self, k: usize) -> f64 {
        self.beta_scaled[k] * Self::unscale(k)
    }

    /// `(k! |beta_k|)^{1/k}` for `k = 1..=N`, which tends to `1/2` in the limit.
    pub fn beta_growth(&self) -> Vec<f64> {
        (1..=self.n).map(|k| 0.5 * self.beta_scaled[k].abs().powf(1.0 / k as f64)).collect()
    }
}

/// Forward recursion of the coupled system in scaled form:
///
/// ```text
/// at_{k+1} = (k at_{k-1} - b at_k + 2(2k+1) bt_k) / (k+b)
/// bt_{k+1} = (k bt_{k-1} - b bt_k + 2a at_{k+1}) / (k+2-b)
/// ```
///
/// obtained by substituting `alpha_k = at_k / (k! 2^k)` (likewise `beta_k`).
pub fn forward_coeffs(a: f64, b: f64, n: usize) -> Result<ABCoefficients> {
    if n == 0 {
        return Err(KummerError::domain("forward_coeffs needs N >= 1"));
    }
    let (a0, a1, b0, b1) = init_alpha_beta(a, b)?;
    let mut al = vec![a0, 2.0 * a1];
    let mut be = vec![b0, 2.0 * b1];
    for k in 1..n {
        let kf = k as f64;
        let next_a = (kf * al[k - 1] - b * al[k] + 2.0 * (2.0 * kf + 1.0) * be[k]) / (kf + b);
        let next_b = (kf * be[k - 1] - b * be[k] + 2.0 * a * next_a) / (kf + 2.0 - b);
        al.push(next_a);
        be.push(next_b);
    }
    Ok(ABCoefficients { a, b, n, alpha_scaled: al, beta_scaled: be })
}

/// The same recursion on the unscaled `alpha_k`, `beta_k`.
pub fn forward_coeffs_unscaled(a: f64, b: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let (a0, a1, b0, b1) = init_alpha_beta(a, b)?;
    let mut al = vec![a0, a1];
    let mut be = vec![b0, b1];
    for k in 1..n {
        let kf = k as f64;
        let next_a = (al[k - 1] - 2.0 * b * al[k] + 4.0 * (2.0 * kf + 1.0) * be[k]) / (4.0 * (kf + 1.0) * (kf + b));
        let next_b =
            (be[k - 1] - 2.0 * b * be[k] + 8.0 * a * (kf + 1.0) * next_a) / (4.0 * (kf + 1.0) * (kf + 2.0 - b));
        al.push(next_a);
        be.push(next_b);
    }
    Ok((al, be))
}

/// `A(z)`, `B(z)` summed through index `n`, and the magnitude of the last
/// pair of terms `max(|alpha_n z^n|, |beta_n z^n|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ABSums {
    pub a: Complex64,
    pub b: Complex64,
    pub last_term: f64,
}

/// `A` and `B` using all stored coefficients.
pub fn eval_ab(coeffs: &ABCoefficients, z: Complex64) -> ABSums {
    eval_ab_to(coeffs, z, coeffs.n)
}

/// `A` and `B` truncated after index `n <= N`.
pub fn eval_ab_to(coeffs: &ABCoefficients, z: Complex64, n: usize) -> ABSums {
    let n = n.min(coeffs.n);
    let mut f = Complex64::new(1.0, 0.0); // z^k / (k! 2^k)
    let (mut sa, mut sb) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let mut last = 0.0;
    for k in 0..=n {
        let ta = coeffs.alpha_scaled[k] * f;
        let tb = coeffs.beta_scaled[k] * f;
        sa += ta;
        sb += tb;
        last = ta.norm().max(tb.norm());
        f *= z / (2.0 * (k + 1) as f64);
    }
    ABSums { a: sa, b: sb, last_term: last }
}

/// Inputs that the auto-selector may route here.
pub fn in_validity_region(a: f64, b: f64, z: Complex64) -> bool {
    a > 0.0 && (0.05..=0.95).contains(&b) && (z * a).norm() <= 10.0 && !on_negative_axis(z)
}

fn on_negative_axis(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

struct Frame {
    /// `sqrt(z/a)`
    ratio: Complex64,
    /// `2 sqrt(a z)`
    w: Complex64,
    /// `(z/a)^{(1-b)/2} e^{z/2}`
    common: Complex64,
}

fn frame(a: f64, b: f64, z: Complex64) -> Result<Frame> {
    check_params(a, b)?;
    if !is_finite(z) || on_negative_axis(z) {
        return Err(KummerError::domain(format!("the Bessel expansion needs a z off (-inf, 0], got {z}")));
    }
    let za = z / a;
    let common = principal_pow(za, Complex64::new(0.5 * (1.0 - b), 0.0))? * (0.5 * z).exp();
    Ok(Frame { ratio: principal_sqrt(za), w: 2.0 * principal_sqrt(z * a), common })
}

/// `U(a,b,z)` from `N+1` coefficients of `A` and `B`.
pub fn u_bessel_convergent(a: f64, b: f64, z: Complex64, n: usize) -> Result<EvalOutcome> {
    let coeffs = forward_coeffs(a, b, n)?;
    u_from_coeffs(&coeffs, z, n)
}

/// As [`u_bessel_convergent`] with precomputed coefficients, truncated at `n`.
pub fn u_from_coeffs(coeffs: &ABCoefficients, z: Complex64, n: usize) -> Result<EvalOutcome> {
    let (a, b) = (coeffs.a, coeffs.b);
    let f = frame(a, b, z)?;
    let s = eval_ab_to(coeffs, z, n);
    let k_lo = bessel_k(b - 1.0, f.w)?;
    let k_hi = bessel_k(b, f.w)?;
    let pre = 2.0 * f.common * recip_gamma(Complex64::new(a, 0.0));
    let u = pre * (k_lo * s.a + f.ratio * k_hi * s.b);
    if !is_finite(u) || u.norm() == 0.0 {
        return Err(KummerError::Overflow(format!("U({a}, {b}, {z}) is not representable")));
    }
    let est = pre.norm() * (k_lo.norm() + (f.ratio * k_hi).norm()) * s.last_term;
    Ok(EvalOutcome {
        u,
        u_prime: None,
        terms_used: n.min(coeffs.n),
        est_abs_error: est,
        method: Method::Convergent,
        flags: Flags { on_branch_cut: false, ..Flags::default() },
    })
}

/// `M(a;b;z) / Gamma(b)` from the `I`-Bessel companion representation.
pub fn m_bessel_convergent(a: f64, b: f64, z: Complex64, n: usize) -> Result<Complex64> {
    let coeffs = forward_coeffs(a, b, n)?;
    m_from_coeffs(&coeffs, z, n)
}

/// As [`m_bessel_convergent`] with precomputed coefficients, truncated at `n`.
pub fn m_from_coeffs(coeffs: &ABCoefficients, z: Complex64, n: usize) -> Result<Complex64> {
    let (a, b) = (coeffs.a, coeffs.b);
    let f = frame(a, b, z)?;
    let s = eval_ab_to(coeffs, z, n);
    let bracket = bessel_i(b - 1.0, f.w)? * s.a - f.ratio * bessel_i(b, f.w)? * s.b;
    // Gamma(1+a-b) / Gamma(a)
    Ok(f.common / gamma_ratio(a, 1.0 - b) * bracket)
}

/// `M(a;b;z)` itself.
pub fn m_value(a: f64, b: f64, z: Complex64, n: usize) -> Result<Complex64> {
    Ok(m_bessel_convergent(a, b, z, n)? * gamma_fn(Complex64::new(b, 0.0))?)
}

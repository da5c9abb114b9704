//! Slater's large-`a` expansions of `M(a;b;z^2)` and `U(a,b,z^2)` in modified
//! Bessel functions, with coefficient polynomials generated by recurrence.

use num_complex::Complex64;

use crate::besselkit::{bessel_i, bessel_k};
use crate::error::{KummerError, Result};
use crate::gammakit::{gamma_fn, recip_gamma};
use crate::numcore::RealPolynomial;
use crate::outcome::{EvalOutcome, Flags, Method};

/// Default number of coefficient pairs.
pub const DEFAULT_TERMS: usize = 4;

/// Past this `a - b`, `1/Gamma(1+a-b)` underflows and `U` is not representable.
pub const MAX_A_FOR_U: f64 = 150.0;

/// The polynomials `A_k(z)`, `B_k(z)` for `k < K` at a fixed `b`.
#[derive(Debug, Clone)]
pub struct SlaterCoeffSet {
    b: f64,
    a_polys: Vec<RealPolynomial>,
    b_polys: Vec<RealPolynomial>,
}

impl SlaterCoeffSet {
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of `(A_k, B_k)` pairs.
    pub fn len(&self) -> usize {
        self.a_polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_polys.is_empty()
    }

    pub fn a(&self, k: usize) -> &RealPolynomial {
        &self.a_polys[k]
    }

    pub fn b_poly(&self, k: usize) -> &RealPolynomial {
        &self.b_polys[k]
    }

    /// `(sum_k A_k(z)/u^{2k}, sum_k B_k(z)/u^{2k})` over the first `n` pairs.
    fn sums(&self, n: usize, z: f64, u: f64) -> (f64, f64) {
        let inv_u2 = 1.0 / (u * u);
        let mut scale = 1.0;
        let (mut sa, mut sb) = (0.0, 0.0);
        for k in 0..n {
            sa += self.a_polys[k].eval(z) * scale;
            sb += self.b_polys[k].eval(z) * scale;
            scale *= inv_u2;
        }
        (sa, sb)
    }
}

/// Generates `A_0, B_0, ..., A_{K-1}, B_{K-1}`:
///
/// ```text
/// B_k     = -A_k'/2 + int_0^z (t^2 A_k/2 - (b - 1/2) A_k'/t) dt
/// A_{k+1} = (b - 1/2) B_k/z - B_k'/2 + int^z t^2 B_k/2 dt + K_k
/// ```
///
/// with `A_0 = 1` and `K_k` removing the constant term of `A_{k+1}`.
pub fn slater_coeffs(b: f64, k_terms: usize) -> Result<SlaterCoeffSet> {
    if k_terms == 0 {
        return Err(KummerError::domain("slater_coeffs needs K >= 1"));
    }
    let half = RealPolynomial::monomial(0.5, 2);
    let bh = b - 0.5;
    let mut a_polys = vec![RealPolynomial::constant(1.0)];
    let mut b_polys = Vec::with_capacity(k_terms);
    for k in 0..k_terms {
        let ak = &a_polys[k];
        let dak = ak.derivative();
        let integrand = &(&half * ak) - &dak.divide_by_z()?.scale(bh);
        let bk = &dak.scale(-0.5) + &integrand.antiderivative();
        if k + 1 < k_terms {
            let next = &(&bk.divide_by_z()?.scale(bh) - &bk.derivative().scale(0.5)) + &(&half * &bk).antiderivative();
            a_polys.push(next.with_constant(0.0));
        }
        b_polys.push(bk);
    }
    Ok(SlaterCoeffSet { b, a_polys, b_polys })
}

/// The large parameter of the expansion for real `a > b/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlaterEval {
    pub a: f64,
    pub b: f64,
    /// `z` where the functions are evaluated at `z^2`.
    pub z_arg: f64,
    /// `u = sqrt(4a - 2b)`, so that `a = u^2/4 + b/2`.
    pub u: f64,
}

impl SlaterEval {
    pub fn new(a: f64, b: f64, zsq: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && zsq.is_finite()) {
            return Err(KummerError::domain("non-finite argument"));
        }
        if a <= 0.5 * b {
            return Err(KummerError::domain(format!("Slater expansion needs a > b/2, got a = {a}, b = {b}")));
        }
        if zsq <= 0.0 {
            return Err(KummerError::domain(format!("Slater expansion needs z^2 > 0, got {zsq}")));
        }
        Ok(SlaterEval { a, b, z_arg: zsq.sqrt(), u: (4.0 * a - 2.0 * b).sqrt() })
    }

    /// `e^{-z^2/2} z^b`, the factor removed from both expansions.
    fn weight(&self) -> f64 {
        (-0.5 * self.z_arg * self.z_arg).exp() * self.z_arg.powf(self.b)
    }
}

/// `U(a,b,z^2)` from the first `K` terms of the K-Bessel expansion.
pub fn slater_u(a: f64, b: f64, zsq: f64, k_terms: usize) -> Result<EvalOutcome> {
    let p = SlaterEval::new(a, b, zsq)?;
    if a - b > MAX_A_FOR_U {
        return Err(KummerError::domain(format!("slater_u needs a - b <= {MAX_A_FOR_U}, got {}", a - b)));
    }
    let coeffs = slater_coeffs(b, k_terms + 1)?;
    let (z, u) = (p.z_arg, p.u);
    let w = Complex64::new(u * z, 0.0);
    let k_lo = bessel_k(b - 1.0, w)?.re;
    let k_hi = bessel_k(b, w)?.re;
    let pre = 2f64.powf(b) * u.powf(1.0 - b) * recip_gamma(Complex64::new(1.0 + a - b, 0.0)).re / p.weight();
    let combine = |sa: f64, sb: f64| pre * (z * k_lo * sa - z / u * k_hi * sb);
    let (sa, sb) = coeffs.sums(k_terms, z, u);
    let value = combine(sa, sb);
    let scale = u.powi(-2 * k_terms as i32);
    let next = combine(coeffs.a(k_terms).eval(z) * scale, coeffs.b_poly(k_terms).eval(z) * scale);
    if !value.is_finite() {
        return Err(KummerError::Overflow(format!("slater_u not representable at a = {a}")));
    }
    Ok(EvalOutcome {
        u: Complex64::new(value, 0.0),
        u_prime: None,
        terms_used: k_terms,
        est_abs_error: next.abs(),
        method: Method::Slater,
        flags: Flags::default(),
    })
}

/// `M(a;b;z^2)` from the first `K` terms of the I-Bessel expansion.
pub fn slater_m(a: f64, b: f64, zsq: f64, k_terms: usize) -> Result<Complex64> {
    let p = SlaterEval::new(a, b, zsq)?;
    let coeffs = slater_coeffs(b, k_terms)?;
    let (z, u) = (p.z_arg, p.u);
    let w = Complex64::new(u * z, 0.0);
    let (sa, sb) = coeffs.sums(k_terms, z, u);
    let bracket = z * bessel_i(b - 1.0, w)? * sa + z / u * bessel_i(b, w)? * sb;
    let pre = gamma_fn(Complex64::new(b, 0.0))? * u.powf(1.0 - b) * 2f64.powf(b - 1.0) / p.weight();
    Ok(pre * bracket)
}

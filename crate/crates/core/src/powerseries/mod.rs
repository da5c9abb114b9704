//! Power series of `U(a,b,z)` and `U'(a,b,z)` around `z = 0`, stable through `b -> 0`.

mod series;

use num_complex::Complex64;

pub use series::{recursion_coeffs, w0, KummerInput, RecursionCoeffs, SeriesState, DEFAULT_MAX_TERMS, DEFAULT_TOL};

use crate::error::{KummerError, Result};
use crate::numcore::is_finite;
use crate::outcome::{EvalOutcome, Flags, Method};

/// Largest `|Re a|` reachable with two shifts of the `G` function.
pub const MAX_ABS_RE_A: f64 = 2.5;
/// Largest `|z|` accepted; covers `z = 1+i`.
pub const MAX_ABS_Z: f64 = 1.5;
/// Largest number of `b -> b+1` raising steps.
pub const MAX_RAISE_STEPS: i64 = 3;

/// `U(a,b,z)` and `U'(a,b,z)` for `0 < |z| <= 3/2` from the power series.
///
/// `b` in `[-1/2, 1/2]` is summed directly; larger `Re b` is reduced to that
/// strip and raised back with [`raise_b`], which also covers integer `b`.
pub fn u_small_z(input: &KummerInput) -> Result<EvalOutcome> {
    let KummerInput { a, b, z, max_terms, tol } = *input;
    if !(is_finite(a) && is_finite(b) && is_finite(z)) {
        return Err(KummerError::domain("non-finite argument"));
    }
    if z.norm() == 0.0 {
        return Err(KummerError::domain("the power series needs z != 0"));
    }
    if z.norm() > MAX_ABS_Z {
        return Err(KummerError::domain(format!("the power series needs |z| <= 1.5, got |z| = {}", z.norm())));
    }
    if a.re.abs() > MAX_ABS_RE_A || a.im.abs() > 0.5 {
        return Err(KummerError::domain(format!(
            "the power series needs |Re a| <= 2.5 and |Im a| <= 1/2, got a = {a}"
        )));
    }
    if b.re < -0.5 || b.im.abs() > 0.5 {
        return Err(KummerError::domain(format!("the power series needs Re b >= -1/2 and |Im b| <= 1/2, got b = {b}")));
    }
    let steps = if b.re <= 0.5 { 0 } else { b.re.round() as i64 };
    if steps > MAX_RAISE_STEPS {
        return Err(KummerError::domain(format!("Re b = {} needs more than {MAX_RAISE_STEPS} raising steps", b.re)));
    }
    let b0 = b - steps as f64;

    let sum = series::sum_base_strip(a, b0, z, max_terms, tol)?;
    let (mut u, mut up, mut est) = (sum.u, sum.u_prime, sum.est_abs_error);
    if steps > 0 {
        let path = raise_b(a, b0, z, u, up, steps as usize)?;
        (u, up) = *path.last().expect("at least one raising step");
        // each step mixes U and U' with weights up to (|a| + |b|) / |z|
        est *= (1.0 + (a.norm() + b.norm()) / z.norm()).powi(steps as i32);
    }
    let flags = Flags {
        shifted_a: a.norm() > 0.5,
        near_integer_b: steps > 0 && b0.norm() < 1e-3,
        truncated: !sum.converged,
        on_branch_cut: z.im == 0.0 && z.re < 0.0,
    };
    Ok(EvalOutcome { u, u_prime: Some(up), terms_used: sum.terms, est_abs_error: est, method: Method::Power, flags })
}

/// Same evaluation as [`u_small_z`]; `U'` is produced in the same loop.
pub fn u_prime_small_z(input: &KummerInput) -> Result<EvalOutcome> {
    u_small_z(input)
}

/// Raise `b` by one `steps` times:
/// `U(a,b+1,z) = U - U'` and `z U'(a,b+1,z) = b U' - a U`.
///
/// Returns the pair after every step.
pub fn raise_b(
    a: Complex64,
    b: Complex64,
    z: Complex64,
    u: Complex64,
    uprime: Complex64,
    steps: usize,
) -> Result<Vec<(Complex64, Complex64)>> {
    if z.norm() == 0.0 {
        return Err(KummerError::domain("raise_b needs z != 0"));
    }
    let mut out = Vec::with_capacity(steps);
    let (mut u, mut up, mut b) = (u, uprime, b);
    for _ in 0..steps {
        let next_u = u - up;
        let next_up = (b * up - a * u) / z;
        u = next_u;
        up = next_up;
        b += 1.0;
        out.push((u, up));
    }
    Ok(out)
}

/// `U(a-1,b,z) = (a-b+z) U(a,b,z) - z U'(a,b,z)`.
pub fn shift_a_down(a: Complex64, b: Complex64, z: Complex64, u: Complex64, uprime: Complex64) -> Complex64 {
    (a - b + z) * u - z * uprime
}

/// `M(a;b;z)` by direct summation of the hypergeometric series, stopping when
/// `|term| < tol |sum|`.
pub fn kummer_m_direct(a: Complex64, b: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    if crate::numcore::is_nonpositive_integer(b) {
        return Err(KummerError::domain(format!("M(a;b;z) has a pole at b = {}", b.re)));
    }
    if z.norm() > 20.0 {
        return Err(KummerError::domain(format!("direct M summation needs |z| <= 20, got {}", z.norm())));
    }
    const LIMIT: usize = 10_000;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..LIMIT {
        let kf = k as f64;
        term *= (a + kf) / ((b + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.norm() <= tol * sum.norm() {
            return Ok(sum);
        }
    }
    Err(KummerError::NonConvergence { terms: LIMIT, last_term: term.norm() })
}

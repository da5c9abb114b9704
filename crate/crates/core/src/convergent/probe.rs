//! Five-term recurrences satisfied separately by `alpha_k` and `beta_k`, and
//! a backward-recursion probe that checks whether the wanted solution is
//! the minimal one.

use super::init_alpha_beta;
use crate::error::{KummerError, Result};

/// Coefficients `p_{-3..=1}` and `q_{-3..=1}` of row `k`, so that
/// `sum_i p[i] alpha_{k-3+i} = 0` and `sum_i q[i] beta_{k-3+i} = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiveTermRow {
    pub k: usize,
    pub p: [f64; 5],
    pub q: [f64; 5],
}

/// Row `k >= 3` of both recurrences.
pub fn five_term_coeffs(k: usize, a: f64, b: f64) -> FiveTermRow {
    let k_ = k as f64;
    let (b2, k2) = (b * b, k_ * k_);
    let p = [
        -(2.0 * k_ - 1.0) * (2.0 * k_ + 1.0),
        8.0 * b * (2.0 * k_ + 1.0) * (k_ - 1.0),
        -8.0 + 4.0 * b + 8.0 * k2 + 24.0 * k_ - 64.0 * k2 * k_ + 32.0 * k2 * k2 + 12.0 * b2 - 16.0 * k_ * b
            + 16.0 * b * k2
            - 16.0 * k2 * b2
            + 16.0 * k_ * b2,
        16.0 * k_ * (2.0 * k_ - 3.0) * (8.0 * a * k2 - 2.0 * b * k2 - b2 - 2.0 * a + b),
        16.0 * k_ * (2.0 * k_ - 1.0) * (2.0 * k_ - 3.0) * (k_ + 1.0) * (k_ + b) * (b - k_ - 1.0),
    ];
    let q = [
        k_,
        -2.0 * b * (2.0 * k_ - 1.0),
        4.0 * (k_ - 1.0) * (b2 - 2.0 * k2),
        -8.0 * k_ * (2.0 * k_ + 1.0) * (k_ - 1.0) * (4.0 * a - b),
        16.0 * k_ * (k_ - 1.0) * (k_ + 1.0) * (k_ + b) * (k_ + 2.0 - b),
    ];
    FiveTermRow { k, p, q }
}

/// Which of the two coefficient sequences to recur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    Alpha,
    Beta,
}

/// Starting values at indices `k_start-3 ..= k_start` for both sequences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeSeed {
    pub alpha: [f64; 4],
    pub beta: [f64; 4],
}

impl ProbeSeed {
    pub fn uniform(v: [f64; 4]) -> Self {
        ProbeSeed { alpha: v, beta: v }
    }
}

/// Result of [`backward_probe`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub k_start: usize,
    pub seed_count: usize,
    /// `v_1 / v_0` of the alpha run from the first seed.
    pub ratio_alpha: f64,
    pub ratio_beta: f64,
    /// Largest relative spread of either ratio across seeds.
    pub seed_spread: f64,
    /// The forward values `alpha_1/alpha_0` and `beta_1/beta_0`.
    pub true_ratio_alpha: f64,
    pub true_ratio_beta: f64,
    /// Both recovered ratios within `1e-3` (relative) of the forward ones.
    pub matches_initial_values: bool,
}

const RESCALE_HI: f64 = 1e100;
const RESCALE_LO: f64 = 1e-100;
const MATCH_TOL: f64 = 1e-3;

/// `v_1 / v_0` after running one recurrence from `k_start` down to 0.
pub fn backward_ratio(a: f64, b: f64, k_start: usize, seed: [f64; 4], which: Sequence) -> Result<f64> {
    if k_start < 4 {
        return Err(KummerError::domain(format!("backward probe needs k_start >= 4, got {k_start}")));
    }
    if seed.iter().all(|&s| s == 0.0) || seed.iter().any(|s| !s.is_finite()) {
        return Err(KummerError::domain("backward probe seed must be finite and nonzero"));
    }
    // window holds v[k-3..=k+1] with the leading slot filled each step
    let mut win = [0.0, seed[0], seed[1], seed[2], seed[3]];
    for k in (3..k_start).rev() {
        let row = five_term_coeffs(k, a, b);
        let c = match which {
            Sequence::Alpha => row.p,
            Sequence::Beta => row.q,
        };
        let v = -(c[1] * win[1] + c[2] * win[2] + c[3] * win[3] + c[4] * win[4]) / c[0];
        win = [0.0, v, win[1], win[2], win[3]];
        let big = win.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if big > RESCALE_HI || (big < RESCALE_LO && big > 0.0) {
            for x in win.iter_mut() {
                *x /= big;
            }
        }
    }
    // win[1..=4] now holds v_0..v_3
    Ok(win[2] / win[1])
}

/// Recur both five-term relations backward from `k_start` for each seed and
/// compare `v_1/v_0` with the forward initial values.
pub fn backward_probe(a: f64, b: f64, k_start: usize, seeds: &[ProbeSeed]) -> Result<ProbeReport> {
    if seeds.is_empty() {
        return Err(KummerError::domain("backward probe needs at least one seed"));
    }
    let (a0, a1, b0, b1) = init_alpha_beta(a, b)?;
    let (true_a, true_b) = (a1 / a0, b1 / b0);
    let mut ra = Vec::with_capacity(seeds.len());
    let mut rb = Vec::with_capacity(seeds.len());
    for s in seeds {
        ra.push(backward_ratio(a, b, k_start, s.alpha, Sequence::Alpha)?);
        rb.push(backward_ratio(a, b, k_start, s.beta, Sequence::Beta)?);
    }
    let spread = |r: &[f64]| r.iter().map(|x| (x - r[0]).abs() / r[0].abs()).fold(0.0f64, f64::max);
    let close = |x: f64, t: f64| (x - t).abs() <= MATCH_TOL * t.abs();
    Ok(ProbeReport {
        k_start,
        seed_count: seeds.len(),
        ratio_alpha: ra[0],
        ratio_beta: rb[0],
        seed_spread: spread(&ra).max(spread(&rb)),
        true_ratio_alpha: true_a,
        true_ratio_beta: true_b,
        matches_initial_values: close(ra[0], true_a) && close(rb[0], true_b),
    })
}

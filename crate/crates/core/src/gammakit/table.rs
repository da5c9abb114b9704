//! Taylor coefficients of the entire function `1/Gamma(w) = sum_{k>=1} c_k w^k`.

/// Euler's constant.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

/// `c_1 ... c_28`, stored at `RGAMMA_COEFFS[k - 1]`.
#[allow(clippy::excessive_precision)]
pub const RGAMMA_COEFFS: [f64; 28] = [
    1.000_000_000_000_000_000_00,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.420_026_350_340_952_355_3e-1,
    0.166_538_611_382_291_489_50,
    -0.421_977_345_555_443_367_5e-1,
    -0.962_197_152_787_697_356e-2,
    0.721_894_324_666_309_954e-2,
    -0.116_516_759_185_906_511e-2,
    -0.215_241_674_114_950_97e-3,
    0.128_050_282_388_116_19e-3,
    -0.201_348_547_807_882_4e-4,
    -0.125_049_348_214_267e-5,
    0.113_302_723_198_170e-5,
    -0.205_633_841_697_76e-6,
    0.611_609_510_448e-8,
    0.500_200_764_447e-8,
    -0.118_127_457_049e-8,
    0.104_342_671_17e-9,
    0.778_226_344e-11,
    -0.369_680_562e-11,
    0.510_037_03e-12,
    -0.205_832_6e-13,
    -0.534_81e-14,
    0.122_68e-14,
    -0.118_13e-15,
    0.119e-17,
    0.141e-17,
];

/// Where a coefficient table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSource {
    /// The published 20-digit table shipped as constants.
    Published,
    /// Produced by [`generate_ck`] in double precision.
    Generated,
}

/// Coefficients `c_1 ... c_K` of the reciprocal gamma expansion.
#[derive(Debug, Clone)]
pub struct ReciprocalGammaTable {
    c: Vec<f64>,
    source: TableSource,
}

impl ReciprocalGammaTable {
    /// The production table (28 entries).
    pub fn shipped() -> Self {
        ReciprocalGammaTable { c: RGAMMA_COEFFS.to_vec(), source: TableSource::Published }
    }

    pub fn generated(n: usize) -> Self {
        ReciprocalGammaTable { c: generate_ck(n).coefficients, source: TableSource::Generated }
    }

    /// `c_k`, 1-based.
    pub fn c(&self, k: usize) -> f64 {
        self.c[k - 1]
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }

    pub fn source(&self) -> TableSource {
        self.source
    }

    /// Euler's constant as carried by the table (`c_2`).
    pub fn gamma_euler(&self) -> f64 {
        self.c[1]
    }
}

/// Riemann zeta at an integer `s >= 2`.
///
/// Direct sum of the first 19 terms plus an Euler-Maclaurin tail at `N = 20`
/// with Bernoulli corrections through `B_12`; the neglected remainder is below
/// `1e-18` for every `s >= 2`.
pub fn riemann_zeta(s: u32) -> f64 {
    assert!(s >= 2, "zeta is only provided for integer s >= 2");
    const N: f64 = 20.0;
    // B_2j / (2j)!
    const BERN: [f64; 6] =
        [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1_209_600.0, 1.0 / 47_900_160.0, -691.0 / 1_307_674_368_000.0];
    let sf = s as f64;
    let mut tail = N.powf(1.0 - sf) / (sf - 1.0) + 0.5 * N.powf(-sf);
    // rising product s (s+1) ... (s+2j-2) times N^{-s-2j+1}
    let mut rising = sf;
    let mut npow = N.powf(-sf - 1.0);
    for (j, b) in BERN.iter().enumerate() {
        tail += b * rising * npow;
        let m = 2.0 * j as f64;
        rising *= (sf + m + 1.0) * (sf + m + 2.0);
        npow /= N * N;
    }
    // Neumaier summation, smallest terms first
    let (mut sum, mut comp) = (tail, 0.0);
    for n in (1..20).rev() {
        let t = (n as f64).powi(-(s as i32));
        let next = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - next) + t } else { (t - next) + sum };
        sum = next;
    }
    sum + comp
}

/// Output of [`generate_ck`].
#[derive(Debug, Clone)]
pub struct GeneratedCoefficients {
    pub coefficients: Vec<f64>,
    /// Set when `n > 28`: the alternating zeta recursion loses accuracy at high `k`.
    pub cancellation_warning: bool,
}

/// `c_1 ... c_n` from `(k-1) c_k = gamma c_{k-1} - zeta(2) c_{k-2} + ... + (-1)^k zeta(k-1) c_1`.
pub fn generate_ck(n: usize) -> GeneratedCoefficients {
    let zeta: Vec<f64> = (0..n.max(2)).map(|k| if k >= 2 { riemann_zeta(k as u32) } else { 0.0 }).collect();
    generate_ck_with_zeta(n, &zeta)
}

/// As [`generate_ck`] with caller-supplied `zeta[k] = zeta(k)` for `2 <= k <= n-1`.
pub fn generate_ck_with_zeta(n: usize, zeta: &[f64]) -> GeneratedCoefficients {
    let mut c = Vec::with_capacity(n);
    if n >= 1 {
        c.push(1.0);
    }
    if n >= 2 {
        c.push(EULER_GAMMA);
    }
    for k in 3..=n {
        let mut acc = EULER_GAMMA * c[k - 2];
        for j in 2..k {
            let term = zeta[j] * c[k - j - 1];
            if j % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        c.push(acc / (k - 1) as f64);
    }
    GeneratedCoefficients { coefficients: c, cancellation_warning: n > 28 }
}

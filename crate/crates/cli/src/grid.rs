use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use kummer::convergent::{forward_coeffs, m_from_coeffs, u_from_coeffs, ABCoefficients};
use kummer::gammakit::recip_gamma;
use kummer::powerseries::{kummer_m_direct, u_small_z, KummerInput};
use kummer::{cx, ComplexScalar, Result as KResult};
use serde::{Deserialize, Serialize};

use crate::{CliError, Status};

/// Cells with `a z` beyond this are outside the grid.
const MAX_ZA: f64 = 10.0;
/// `a` up to which the power series serves as reference.
const POWER_REFERENCE_MAX_A: f64 = 2.5;
pub const CSV_HEADER: [&str; 5] = ["a", "z", "rel_err", "terms_used", "method"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridMode {
    /// Error of the expansion with `--n-terms` coefficients.
    FixedTerms,
    /// Smallest N reaching `--target-tol`.
    TermsNeeded,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.4, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub a_min: f64,
    #[arg(long, default_value_t = 20.0, allow_hyphen_values = true)]
    pub a_max: f64,
    #[arg(long, default_value_t = 40)]
    pub a_steps: usize,
    #[arg(long, default_value_t = 0.05, allow_hyphen_values = true)]
    pub z_min: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub z_max: f64,
    #[arg(long, default_value_t = 20)]
    pub z_steps: usize,
    #[arg(long, default_value_t = 20)]
    pub n_terms: usize,
    #[arg(long, default_value_t = 1e-14)]
    pub target_tol: f64,
    /// Largest N tried in terms-needed mode.
    #[arg(long, default_value_t = 40)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "fixed-terms")]
    pub mode: GridMode,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A rectangular grid in `(a, z)` at fixed `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub b: f64,
    pub a_min: f64,
    pub a_max: f64,
    pub a_steps: usize,
    pub z_min: f64,
    pub z_max: f64,
    pub z_steps: usize,
    pub n_terms: usize,
    pub target_tol: f64,
    pub max_n: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        let finite = [self.b, self.a_min, self.a_max, self.z_min, self.z_max].iter().all(|v| v.is_finite());
        if !finite {
            return Err(CliError::usage("grid bounds must be finite"));
        }
        if self.a_steps < 2 || self.z_steps < 2 {
            return Err(CliError::usage("grid steps must be at least 2"));
        }
        if self.a_min > self.a_max || self.z_min > self.z_max {
            return Err(CliError::usage("grid ranges must be ordered (min <= max)"));
        }
        if !(self.target_tol > 0.0 && self.target_tol <= 1e-6) {
            return Err(CliError::usage(format!("target tolerance must lie in (0, 1e-6], got {}", self.target_tol)));
        }
        if self.n_terms == 0 || self.max_n == 0 {
            return Err(CliError::usage("term counts must be positive"));
        }
        Ok(())
    }

    fn axis(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
        (0..steps).map(move |i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
    }
}

impl From<&GridArgs> for GridSpec {
    fn from(g: &GridArgs) -> Self {
        GridSpec {
            b: g.b,
            a_min: g.a_min,
            a_max: g.a_max,
            a_steps: g.a_steps,
            z_min: g.z_min,
            z_max: g.z_max,
            z_steps: g.z_steps,
            n_terms: g.n_terms,
            target_tol: g.target_tol,
            max_n: g.max_n,
        }
    }
}

/// One CSV line. `method` names the reference the error was measured
/// against (`power` or `m_proxy`), or `skipped`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub a: f64,
    pub z: f64,
    pub rel_err: Option<f64>,
    pub terms_used: usize,
    pub method: String,
}

enum Reference {
    Power(ComplexScalar),
    /// `M(a;b;z) / Gamma(b)` from the direct series.
    MProxy(ComplexScalar),
}

impl Reference {
    fn tag(&self) -> &'static str {
        match self {
            Reference::Power(_) => "power",
            Reference::MProxy(_) => "m_proxy",
        }
    }

    fn new(a: f64, b: f64, z: f64) -> KResult<Self> {
        if a <= POWER_REFERENCE_MAX_A {
            let o = u_small_z(&KummerInput::new(cx(a, 0.0), cx(b, 0.0), cx(z, 0.0)))?;
            Ok(Reference::Power(o.u))
        } else {
            let m = kummer_m_direct(cx(a, 0.0), cx(b, 0.0), cx(z, 0.0), 1e-17)?;
            Ok(Reference::MProxy(m * recip_gamma(cx(b, 0.0))))
        }
    }

    fn rel_err(&self, coeffs: &ABCoefficients, z: f64, n: usize) -> KResult<f64> {
        let z = cx(z, 0.0);
        Ok(match self {
            Reference::Power(u) => (u_from_coeffs(coeffs, z, n)?.u - u).norm() / u.norm(),
            Reference::MProxy(m) => (m_from_coeffs(coeffs, z, n)? - m).norm() / m.norm(),
        })
    }
}

fn skipped(a: f64, z: f64) -> ReportRow {
    ReportRow { a, z, rel_err: None, terms_used: 0, method: "skipped".into() }
}

/// All in-region rows of the grid and the resulting exit status.
pub fn run_grid(spec: &GridSpec, mode: GridMode) -> Result<(Vec<ReportRow>, Status), CliError> {
    spec.validate()?;
    let n_max = match mode {
        GridMode::FixedTerms => spec.n_terms,
        GridMode::TermsNeeded => spec.max_n,
    };
    let mut rows = Vec::new();
    let mut status = Status::Ok;
    for a in GridSpec::axis(spec.a_min, spec.a_max, spec.a_steps) {
        let coeffs = forward_coeffs(a, spec.b, n_max).ok();
        for z in GridSpec::axis(spec.z_min, spec.z_max, spec.z_steps) {
            if (a * z).abs() > MAX_ZA {
                continue;
            }
            let row = match (&coeffs, z > 0.0) {
                (Some(c), true) => cell(c, a, spec.b, z, mode, spec),
                _ => None,
            };
            let row = match row {
                Some((r, reached)) => {
                    if !reached && status == Status::Ok {
                        status = Status::NonConvergence;
                    }
                    r
                }
                None => {
                    status = Status::Domain;
                    skipped(a, z)
                }
            };
            rows.push(row);
        }
    }
    Ok((rows, status))
}

/// The row for one cell and whether the target was reached.
fn cell(coeffs: &ABCoefficients, a: f64, b: f64, z: f64, mode: GridMode, spec: &GridSpec) -> Option<(ReportRow, bool)> {
    let reference = Reference::new(a, b, z).ok()?;
    let method = reference.tag().to_string();
    match mode {
        GridMode::FixedTerms => {
            let err = reference.rel_err(coeffs, z, spec.n_terms).ok()?;
            Some((ReportRow { a, z, rel_err: Some(err), terms_used: spec.n_terms, method }, true))
        }
        GridMode::TermsNeeded => {
            let mut err = f64::INFINITY;
            for n in 1..=spec.max_n {
                err = reference.rel_err(coeffs, z, n).ok()?;
                if err <= spec.target_tol {
                    return Some((ReportRow { a, z, rel_err: Some(err), terms_used: n, method }, true));
                }
            }
            Some((ReportRow { a, z, rel_err: Some(err), terms_used: spec.max_n, method }, false))
        }
    }
}

/// Header line followed by one record per row.
pub fn write_csv<W: io::Write>(rows: &[ReportRow], w: W) -> Result<(), CliError> {
    let mut wr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    let map = |e: csv::Error| CliError::usage(format!("csv: {e}"));
    wr.write_record(CSV_HEADER).map_err(map)?;
    for r in rows {
        wr.serialize(r).map_err(map)?;
    }
    wr.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(r: R) -> Result<Vec<ReportRow>, csv::Error> {
    csv::Reader::from_reader(r).deserialize().collect()
}

pub(crate) fn cmd_grid(args: &GridArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let (rows, status) = run_grid(&GridSpec::from(args), args.mode)?;
    match &args.out {
        Some(path) => write_csv(&rows, File::create(path)?)?,
        None => write_csv(&rows, out)?,
    }
    Ok(status)
}

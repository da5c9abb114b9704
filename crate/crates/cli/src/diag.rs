use std::io::Write;

use clap::Args;
use kummer::convergent::{backward_probe, ProbeSeed};
use kummer::gammakit::{g_quadrature, g_series, QuadratureSpec};
use kummer::powerseries::{shift_a_down, u_small_z, KummerInput};
use kummer::{cx, ComplexScalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::{parse_complex, CliError, Status};

/// Largest residual accepted by `table2`.
pub const TABLE2_TOL: f64 = 5e-14;
const GCHECK_TOL: f64 = 1e-12;

/// One cell of the shift-relation table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2Row {
    pub k: i32,
    pub b: f64,
    pub z: ComplexScalar,
    /// `|U(a-1,b,z) - ((a-b+z)U - zU')| / |U(a-1,b,z)|`
    pub residual: f64,
    pub terms: usize,
}

/// `a = 0.2`, `b = 10^{-2k}` for `k = 1..5`, at `z = -0.5-0.1i` and `z = 1+i`.
pub fn table2_rows() -> Result<Vec<Table2Row>, CliError> {
    let a = cx(0.2, 0.0);
    let mut rows = Vec::new();
    for z in [cx(-0.5, -0.1), cx(1.0, 1.0)] {
        for k in 1..=5 {
            let b = 10f64.powi(-2 * k);
            let o = u_small_z(&KummerInput::new(a, cx(b, 0.0), z))?;
            let up = o.u_prime.expect("power series returns U'");
            let shifted = shift_a_down(a, cx(b, 0.0), z, o.u, up);
            let direct = u_small_z(&KummerInput::new(a - 1.0, cx(b, 0.0), z))?.u;
            let residual = (shifted - direct).norm() / direct.norm();
            rows.push(Table2Row { k, b, z, residual, terms: o.terms_used });
        }
    }
    Ok(rows)
}

pub(crate) fn cmd_table2(out: &mut dyn Write) -> Result<Status, CliError> {
    let rows = table2_rows()?;
    writeln!(out, "{:>2}  {:>7}  {:>10}  {:>9}  {:>5}", "k", "b", "z", "residual", "terms")?;
    for r in &rows {
        let z = format!("{}{:+}i", r.z.re, r.z.im);
        writeln!(out, "{:>2}  {:>7.0e}  {:>10}  {:>9.2e}  {:>5}", r.k, r.b, z, r.residual, r.terms)?;
    }
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    writeln!(out, "max residual {worst:.2e} (limit {TABLE2_TOL:e})")?;
    Ok(if worst <= TABLE2_TOL { Status::Ok } else { Status::NonConvergence })
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long, default_value_t = 200)]
    pub k_start: usize,
    /// Number of random seed sets.
    #[arg(long, default_value_t = 5)]
    pub seeds: usize,
    /// Seed of the random generator for the seed sets.
    #[arg(long, default_value_t = 1)]
    pub rng_seed: u64,
}

pub(crate) fn cmd_probe(args: &ProbeArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    if args.seeds == 0 {
        return Err(CliError::usage("--seeds must be at least 1"));
    }
    let mut rng = StdRng::seed_from_u64(args.rng_seed);
    let mut draw = || std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let seeds: Vec<ProbeSeed> = (0..args.seeds).map(|_| ProbeSeed { alpha: draw(), beta: draw() }).collect();
    let r = backward_probe(args.a, args.b, args.k_start, &seeds)?;
    writeln!(out, "k_start                {}", r.k_start)?;
    writeln!(out, "seed_count             {}", r.seed_count)?;
    writeln!(out, "ratio_alpha            {:.15e}", r.ratio_alpha)?;
    writeln!(out, "ratio_beta             {:.15e}", r.ratio_beta)?;
    writeln!(out, "true_ratio_alpha       {:.15e}", r.true_ratio_alpha)?;
    writeln!(out, "true_ratio_beta        {:.15e}", r.true_ratio_beta)?;
    writeln!(out, "seed_spread            {:.3e}", r.seed_spread)?;
    writeln!(out, "matches_initial_values {}", r.matches_initial_values)?;
    Ok(Status::Ok)
}

#[derive(Debug, Args)]
pub struct GcheckArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub a: ComplexScalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub b: ComplexScalar,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    #[arg(long, default_value_t = 64)]
    pub nodes: usize,
}

pub(crate) fn cmd_gcheck(args: &GcheckArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let spec = QuadratureSpec::new(args.radius, args.nodes)?;
    let quad = g_quadrature(args.a, args.b, &spec)?;
    let series = g_series(args.a, args.b)?;
    let diff = (series - quad).norm();
    writeln!(out, "g_series     {:.17e} {:+.17e}i", series.re, series.im)?;
    writeln!(out, "g_quadrature {:.17e} {:+.17e}i", quad.re, quad.im)?;
    writeln!(out, "diff         {diff:.3e}")?;
    Ok(if diff <= GCHECK_TOL { Status::Ok } else { Status::NonConvergence })
}

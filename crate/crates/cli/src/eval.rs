use std::io::Write;

use clap::{Args, ValueEnum};
use kummer::convergent::{in_validity_region, u_bessel_convergent, DEFAULT_N};
use kummer::powerseries::{u_small_z, KummerInput, DEFAULT_MAX_TERMS, DEFAULT_TOL, MAX_ABS_Z};
use kummer::slater::{slater_u, DEFAULT_TERMS};
use kummer::{ComplexScalar, EvalOutcome, Method};
use serde::{Deserialize, Serialize};

use crate::{parse_complex, CliError, Status};

/// Largest `|a|` routed to the power series by `auto`.
const AUTO_POWER_MAX_A: f64 = 2.5;
/// Smallest `a` routed to the Slater expansion by `auto`.
const AUTO_SLATER_MIN_A: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Auto,
    Power,
    Convergent,
    Slater,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Parameter a, as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub a: ComplexScalar,
    /// Parameter b, as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub b: ComplexScalar,
    /// Argument z, as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub z: ComplexScalar,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodChoice,
    /// Term count: series cap (power), N (convergent) or K (slater).
    #[arg(long)]
    pub terms: Option<usize>,
    /// Term tolerance of the power series.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Default cap on power-series terms.
    #[arg(long, env = "KUMMER_MAX_TERMS", default_value_t = DEFAULT_MAX_TERMS, hide = true)]
    pub max_terms: usize,
    /// Print one JSON object instead of text.
    #[arg(long)]
    pub json: bool,
}

/// The JSON record printed by `eval --json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub u_re: f64,
    pub u_im: f64,
    pub up_re: Option<f64>,
    pub up_im: Option<f64>,
    pub terms: usize,
    pub est_err: f64,
    pub method: String,
}

impl From<&EvalOutcome> for EvalRecord {
    fn from(o: &EvalOutcome) -> Self {
        EvalRecord {
            u_re: o.u.re,
            u_im: o.u.im,
            up_re: o.u_prime.map(|v| v.re),
            up_im: o.u_prime.map(|v| v.im),
            terms: o.terms_used,
            est_err: o.est_abs_error,
            method: o.method.to_string(),
        }
    }
}

/// Method picked by `auto`: power series, then the Bessel expansion, then Slater.
pub fn select_method(a: ComplexScalar, b: ComplexScalar, z: ComplexScalar) -> Option<Method> {
    let real_params = a.im == 0.0 && b.im == 0.0;
    if a.norm() <= AUTO_POWER_MAX_A && z.norm() <= MAX_ABS_Z {
        Some(Method::Power)
    } else if real_params && in_validity_region(a.re, b.re, z) {
        Some(Method::Convergent)
    } else if real_params && z.im == 0.0 && a.re >= AUTO_SLATER_MIN_A {
        Some(Method::Slater)
    } else {
        None
    }
}

fn real(name: &str, v: ComplexScalar, method: Method) -> Result<f64, CliError> {
    if v.im != 0.0 {
        return Err(CliError::domain(format!("method {method} needs a real {name}, got {v}")));
    }
    Ok(v.re)
}

/// Evaluate with an explicit or automatically selected method.
pub fn evaluate(args: &EvalArgs) -> Result<EvalOutcome, CliError> {
    let method = match args.method {
        MethodChoice::Auto => select_method(args.a, args.b, args.z).ok_or_else(|| {
            CliError::domain(format!("no method covers a = {}, b = {}, z = {}", args.a, args.b, args.z))
        })?,
        MethodChoice::Power => Method::Power,
        MethodChoice::Convergent => Method::Convergent,
        MethodChoice::Slater => Method::Slater,
    };
    let outcome = match method {
        Method::Power => {
            let input = KummerInput::new(args.a, args.b, args.z)
                .with_max_terms(args.terms.unwrap_or(args.max_terms))
                .with_tol(args.tol.unwrap_or(DEFAULT_TOL));
            u_small_z(&input)?
        }
        Method::Convergent => {
            let (a, b) = (real("a", args.a, method)?, real("b", args.b, method)?);
            u_bessel_convergent(a, b, args.z, args.terms.unwrap_or(DEFAULT_N))?
        }
        Method::Slater => {
            let (a, b) = (real("a", args.a, method)?, real("b", args.b, method)?);
            let z = real("z", args.z, method)?;
            slater_u(a, b, z, args.terms.unwrap_or(DEFAULT_TERMS))?
        }
    };
    Ok(outcome)
}

pub(crate) fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    if let Some(t) = args.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::usage(format!("--tol must be positive, got {t}")));
        }
    }
    let o = evaluate(args)?;
    if args.json {
        let rec = EvalRecord::from(&o);
        writeln!(out, "{}", serde_json::to_string(&rec).expect("record serialises"))?;
    } else {
        writeln!(out, "U       = {:e} {:+e}i", o.u.re, o.u.im)?;
        match o.u_prime {
            Some(up) => writeln!(out, "U'      = {:e} {:+e}i", up.re, up.im)?,
            None => writeln!(out, "U'      = n/a")?,
        }
        writeln!(out, "terms   = {}", o.terms_used)?;
        writeln!(out, "est_err = {:e}", o.est_abs_error)?;
        writeln!(out, "method  = {}", o.method)?;
    }
    Ok(if o.flags.truncated { Status::NonConvergence } else { Status::Ok })
}

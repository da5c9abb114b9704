//! Command-line front end: point evaluation, the small-`b` shift table, error
//! grids for the Bessel expansion, the backward-recursion probe and the
//! `G`-function cross-check.

mod diag;
mod eval;
mod grid;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Parser, Subcommand};
use kummer::{ComplexScalar, KummerError};

pub use diag::{table2_rows, Table2Row, TABLE2_TOL};
pub use eval::{evaluate, select_method, EvalRecord, MethodChoice};
pub use grid::{read_csv, run_grid, write_csv, GridMode, GridSpec, ReportRow, CSV_HEADER};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Domain = 2,
    NonConvergence = 3,
}

/// An error together with the exit status it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { status: Status::Usage, message: msg.into() }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError { status: Status::Domain, message: msg.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<KummerError> for CliError {
    fn from(e: KummerError) -> Self {
        let status = match e {
            KummerError::NonConvergence { .. } => Status::NonConvergence,
            _ => Status::Domain,
        };
        CliError { status, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(format!("i/o error: {e}"))
    }
}

/// `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<ComplexScalar, String> {
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    let v = match s.split_once(',') {
        Some((re, im)) => kummer::cx(parse(re)?, parse(im)?),
        None => kummer::cx(parse(s)?, 0.0),
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "kummer", version, about = "Kummer U(a,b,z) for small arguments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate U and U' at one point.
    Eval(eval::EvalArgs),
    /// Relative residuals of U(a-1,b,z) = (a-b+z)U - zU' for a = 0.2, b = 10^-2k.
    Table2,
    /// Error grid of the Bessel expansion as CSV.
    Grid(grid::GridArgs),
    /// Backward recursion of the five-term relations from random seeds.
    Probe(diag::ProbeArgs),
    /// Compare the series and contour-integral values of G(a,b).
    Gcheck(diag::GcheckArgs),
}

/// Parse `args` (including the program name), run the command and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage } else { Status::Ok };
            let _ = write!(err, "{}", e.render());
            return code as i32;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => eval::cmd_eval(&a, out),
        Command::Table2 => diag::cmd_table2(out),
        Command::Grid(a) => grid::cmd_grid(&a, out),
        Command::Probe(a) => diag::cmd_probe(&a, out),
        Command::Gcheck(a) => diag::cmd_gcheck(&a, out),
    };
    match result {
        Ok(status) => status as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.status as i32
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("0.5").unwrap(), kummer::cx(0.5, 0.0));
        assert_eq!(parse_complex("-0.5,-0.1").unwrap(), kummer::cx(-0.5, -0.1));
        assert_eq!(parse_complex(" 1 , 1 ").unwrap(), kummer::cx(1.0, 1.0));
        assert!(parse_complex("1,x").is_err());
        assert!(parse_complex("inf").is_err());
    }

    #[test]
    fn error_mapping() {
        let e: CliError = KummerError::NonConvergence { terms: 3, last_term: 1.0 }.into();
        assert_eq!(e.status, Status::NonConvergence);
        let e: CliError = KummerError::Domain("x".into()).into();
        assert_eq!(e.status, Status::Domain);
    }
}

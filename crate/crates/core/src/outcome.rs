use std::fmt;
use std::str::FromStr;

use crate::numcore::ComplexScalar;

/// Which evaluation route produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Power,
    Convergent,
    Slater,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Power => "power",
            Method::Convergent => "convergent",
            Method::Slater => "slater",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "power" => Ok(Method::Power),
            "convergent" => Ok(Method::Convergent),
            "slater" => Ok(Method::Slater),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Status bits attached to an [`EvalOutcome`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags {
    /// `a` was moved into the base strip by shift relations.
    pub shifted_a: bool,
    /// `b` lies within `1e-3` of a nonzero integer and was reached by raising.
    pub near_integer_b: bool,
    /// The series hit its term limit before meeting the tolerance.
    pub truncated: bool,
    /// `z` lies on the negative real axis, i.e. on the branch cut.
    pub on_branch_cut: bool,
}

/// Result of one evaluation of `U` (and possibly `U'`).
#[derive(Debug, Clone, PartialEq)]
pub struct EvalOutcome {
    pub u: ComplexScalar,
    pub u_prime: Option<ComplexScalar>,
    pub terms_used: usize,
    pub est_abs_error: f64,
    pub method: Method,
    pub flags: Flags,
}

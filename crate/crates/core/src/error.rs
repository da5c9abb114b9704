use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KummerError {
    /// An argument lies outside the region where the method is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or recurrence failed to reach its tolerance.
    #[error("no convergence after {terms} terms (last term magnitude {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },

    /// An internal invariant was violated, e.g. a polynomial that should vanish at the origin did not.
    #[error("structural error: {0}")]
    Structural(String),

    /// The result is not representable in double precision.
    #[error("overflow: {0}")]
    Overflow(String),
}

impl KummerError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        KummerError::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, KummerError>;

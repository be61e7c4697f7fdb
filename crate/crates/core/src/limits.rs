//! resource budgets for the symbolic certification machinery.

use thiserror::Error;

/// caps on the expensive symbolic steps. exceeding a cap aborts the step with
/// [`ResourceError`] so callers can fall back to sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// maximum number of minors enumerated when building a minors ideal.
    pub max_minors: usize,
    /// maximum number of s-polynomial reductions in one basis computation.
    pub max_spairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_minors: 20_000, max_spairs: 5_000 }
    }
}

impl Limits {
    /// no caps; for small inputs where the caller wants a definite answer.
    pub fn unbounded() -> Self {
        Limits { max_minors: usize::MAX, max_spairs: usize::MAX }
    }

    /// work budget (counted in term-pair products) for fraction-free
    /// symbolic elimination; scales with the s-pair knob so one dial
    /// controls all certification effort.
    pub fn elimination_work(&self) -> usize {
        self.max_spairs.saturating_mul(10_000)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResourceError {
    #[error("resource limit exceeded: {what} would need more than {limit}")]
    Limit { what: String, limit: usize },
}

impl ResourceError {
    pub fn new(what: impl Into<String>, limit: usize) -> Self {
        ResourceError::Limit { what: what.into(), limit }
    }
}

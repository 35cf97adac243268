use std::cell::Cell;
use std::fmt;

use thiserror::Error;

use crate::tdecomp::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop ({0}, {0}) is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget of {limit} nodes exhausted in {context}")]
    BudgetExhausted { limit: u64, context: &'static str },

    #[error("graph on {n} vertices exceeds the exact-oracle limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(Violation),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn param(msg: impl fmt::Display) -> Self {
        Error::InvalidParameter(msg.to_string())
    }

    pub(crate) fn pre(msg: impl fmt::Display) -> Self {
        Error::Precondition(msg.to_string())
    }

    pub(crate) fn internal(msg: impl fmt::Display) -> Self {
        Error::Internal(msg.to_string())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted { .. })
    }
}

/// Name of the environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "TINKIT_BUDGET";

/// Default number of backtracking nodes a single exact search may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Limit on the number of search nodes one exact search may expand.
///
/// Every exponential routine takes a `Budget` and starts its own counter, so
/// exhaustion surfaces as [`Error::BudgetExhausted`] instead of a wrong answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub const fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub const fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }

    /// Reads `TINKIT_BUDGET`, falling back to [`DEFAULT_BUDGET`].
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub(crate) fn counter(&self, context: &'static str) -> Counter {
        Counter {
            used: Cell::new(0),
            limit: self.limit,
            context,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

pub(crate) struct Counter {
    used: Cell<u64>,
    limit: u64,
    context: &'static str,
}

impl Counter {
    #[inline]
    pub(crate) fn tick(&self) -> Result<()> {
        let used = self.used.get() + 1;
        if used > self.limit {
            return Err(Error::BudgetExhausted {
                limit: self.limit,
                context: self.context,
            });
        }
        self.used.set(used);
        Ok(())
    }
}

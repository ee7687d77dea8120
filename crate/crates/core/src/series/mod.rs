//! Counting sequences: closed-form generating functions evaluated with exact
//! truncated series, coefficient recurrences for the walk functional
//! equations, and a walk-counting DP used to cross-check them.

mod closed;
mod laurent;
mod recurrence;
mod truncated;
mod walk_dp;

use thiserror::Error;

pub use closed::{
    b_minuscule_counts, b_minuscule_series, bicolored_counts, bicolored_series, closed_form_count,
    full_count, narayana, rectangle_counts, rectangle_series, ClosedForm,
};
pub use laurent::CoeffPolynomial;
pub use recurrence::{
    b_root_counts, functional_equation_residual, symmetric_type_a_counts, truncated_coefficients,
    truncated_count, truncated_counts, truncated_head, type_a_coefficients, type_a_counts, TruncatedCount,
};
pub use truncated::{SeriesJson, TermJson, TruncatedSeries, Var};
pub use walk_dp::{walk_dp_counts, walk_dp_table};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series shape mismatch: {0}")]
    Shape(String),
    #[error("exponent {requested:?} is beyond the truncation orders {orders:?}")]
    OrderExceeded { requested: Vec<usize>, orders: Vec<usize> },
    #[error("order {requested} is beyond the configured budget {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("expected an integer: {0}")]
    NonIntegral(String),
    #[error("division by a series with zero constant term")]
    NotInvertible,
    #[error("square root needs constant term 1, got {0}")]
    SqrtConstantTerm(String),
    #[error("Newton iteration did not reach a fixpoint")]
    NoConvergence,
    #[error("negative exponent {term:?} survived at step {step}")]
    NegativeExponentResidue { step: usize, term: Vec<i64> },
    #[error("negative coefficient at {term:?} in step {step}")]
    NegativeCoefficient { step: usize, term: Vec<i64> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Largest truncation order the series functions accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesConfig {
    pub order: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self { order: 40 }
    }
}

impl SeriesConfig {
    pub fn with_order(order: usize) -> Self {
        Self { order }
    }

    pub(crate) fn check(&self, requested: usize) -> Result<(), SeriesError> {
        if requested > self.order {
            return Err(SeriesError::BudgetExceeded { requested, budget: self.order });
        }
        Ok(())
    }
}

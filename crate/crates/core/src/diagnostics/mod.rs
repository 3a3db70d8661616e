//! Residual whiteness, unit-root/stationarity, and normality tests, each
//! reported as a [`TestResult`].

mod ljung_box;
mod normality;
mod ols;
mod tables;
mod unit_root;

use serde::{Deserialize, Serialize};

pub use ljung_box::ljung_box;
pub use normality::{
    anderson_darling, cramer_von_mises, lilliefors, normality_battery, pearson_chi_squared, shapiro_francia,
    shapiro_wilk,
};
pub use unit_root::{adf_test, kpss_test, pp_test, LagOrder};

/// Significance level used for every `rejected_at_05` decision.
pub const ALPHA: f64 = 0.05;

/// How a p-value should be read. Table-interpolated tests clamp at the table
/// edges and report the edge as a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PValue {
    pub kind: BoundKind,
    pub value: f64,
}

impl PValue {
    pub fn exact(value: f64) -> Self {
        Self {
            kind: BoundKind::Exact,
            value: value.clamp(0.0, 1.0),
        }
    }

    pub fn at_most(value: f64) -> Self {
        Self {
            kind: BoundKind::AtMost,
            value,
        }
    }

    pub fn at_least(value: f64) -> Self {
        Self {
            kind: BoundKind::AtLeast,
            value,
        }
    }
}

impl std::fmt::Display for PValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            BoundKind::Exact => write!(f, "{:.4e}", self.value),
            BoundKind::AtMost => write!(f, "<= {}", self.value),
            BoundKind::AtLeast => write!(f, ">= {}", self.value),
        }
    }
}

/// Outcome of one hypothesis test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub test_name: String,
    pub statistic: f64,
    pub p_value: PValue,
    pub null_hypothesis: String,
    pub rejected_at_05: bool,
}

impl TestResult {
    pub(crate) fn new(name: &str, statistic: f64, p_value: PValue, null_hypothesis: &str) -> Self {
        Self {
            test_name: name.to_string(),
            statistic,
            p_value,
            null_hypothesis: null_hypothesis.to_string(),
            rejected_at_05: p_value.value < ALPHA,
        }
    }
}

/// Deterministic terms in a unit-root test regression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitRootHypothesis {
    None,
    Constant,
    ConstantAndTrend,
}

//! Weekly admissions forecasting: series utilities, unit-root and normality
//! diagnostics, seasonal ARIMA by exact maximum likelihood, simple baseline
//! forecasters, and order selection.

pub mod baseline;
pub mod diagnostics;
pub mod error;
pub mod optim;
pub mod sarima;
pub mod selection;
pub mod series;

pub use error::{Error, Result};
pub use sarima::{
    fit, fit_with, forecast, information_criteria, loglik, psi_weights, simulate, FitOptions, ForecastResult,
    SarimaFit, SarimaParams, SarimaSpec,
};
pub use selection::{
    compare_methods, holdout_errors, select_sarima, CandidateScore, ComparisonReport, Criterion, SearchBounds,
    SearchStrategy, Selection, SelectionOptions,
};
pub use series::{
    acf, difference, pacf, seasonal_table, undifference, Correlogram, DifferenceSpec, SeasonalTable, TimeSeries,
};

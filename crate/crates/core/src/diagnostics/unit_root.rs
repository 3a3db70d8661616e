//! Augmented Dickey-Fuller, Phillips-Perron and KPSS tests.

use super::ols::ols;
use super::tables::{df_p_value, kpss_p_value};
use super::{TestResult, UnitRootHypothesis};
use crate::error::{Error, Result};

const UNIT_ROOT_NULL: &str = "a unit root is present";

/// Number of lagged differences in the ADF regression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LagOrder {
    /// `floor((n - 1)^(1/3))`.
    Auto,
    Fixed(usize),
}

fn deterministic_columns(hypothesis: UnitRootHypothesis, rows: usize, first_t: usize) -> Vec<Vec<f64>> {
    let mut cols = Vec::new();
    if hypothesis != UnitRootHypothesis::None {
        cols.push(vec![1.0; rows]);
    }
    if hypothesis == UnitRootHypothesis::ConstantAndTrend {
        cols.push((0..rows).map(|i| (first_t + i) as f64).collect());
    }
    cols
}

/// ADF regression `Δy_t = α + βt + γ y_{t-1} + Σ δ_i Δy_{t-i} + ε_t`; the
/// statistic is the t-ratio of γ.
pub fn adf_test(series: &[f64], hypothesis: UnitRootHypothesis, lag_order: LagOrder) -> Result<TestResult> {
    let n_obs = series.len();
    let lags = match lag_order {
        LagOrder::Auto => ((n_obs.saturating_sub(1)) as f64).cbrt().floor() as usize,
        LagOrder::Fixed(k) => k,
    };
    if n_obs < lags + 10 {
        return Err(Error::TooShort {
            needed: lags + 10,
            got: n_obs,
        });
    }
    let dy: Vec<f64> = series.windows(2).map(|w| w[1] - w[0]).collect();
    let rows = dy.len() - lags;
    let response: Vec<f64> = dy[lags..].to_vec();
    let mut columns = vec![series[lags..dy.len()].to_vec()];
    columns.extend(deterministic_columns(hypothesis, rows, lags + 1));
    for i in 1..=lags {
        columns.push(dy[lags - i..dy.len() - i].to_vec());
    }
    let fit = ols(&response, &columns)?;
    if fit.sigma2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let statistic = fit.coef[0] / fit.std_err[0];
    let p = df_p_value(hypothesis, dy.len(), statistic);
    Ok(TestResult::new("Augmented Dickey-Fuller", statistic, p, UNIT_ROOT_NULL))
}

/// Bartlett-weighted long-run variance `γ0 + 2 Σ_{j<=l} (1 - j/(l+1)) γ_j`.
fn long_run_variance(u: &[f64], lags: usize) -> f64 {
    let n = u.len() as f64;
    let gamma = |j: usize| u[j..].iter().zip(u).map(|(a, b)| a * b).sum::<f64>() / n;
    let mut lrv = gamma(0);
    for j in 1..=lags.min(u.len() - 1) {
        lrv += 2.0 * (1.0 - j as f64 / (lags as f64 + 1.0)) * gamma(j);
    }
    lrv
}

/// Short bandwidth `floor(4 (n/100)^(1/4))`.
fn short_bandwidth(n: usize) -> usize {
    (4.0 * (n as f64 / 100.0).powf(0.25)).floor() as usize
}

/// KPSS test of (trend-)stationarity. Only `Constant` and `ConstantAndTrend`
/// are meaningful.
pub fn kpss_test(series: &[f64], hypothesis: UnitRootHypothesis) -> Result<TestResult> {
    let n = series.len();
    if n < 10 {
        return Err(Error::TooShort { needed: 10, got: n });
    }
    if hypothesis == UnitRootHypothesis::None {
        return Err(Error::InvalidArgument(
            "KPSS needs a constant or constant-and-trend deterministic part".into(),
        ));
    }
    let columns = deterministic_columns(hypothesis, n, 1);
    let e = ols(series, &columns)?.residuals;
    let ss: f64 = e.iter().map(|v| v * v).sum();
    if ss <= 1e-300 || ss <= 1e-24 * series.iter().map(|v| v * v).sum::<f64>() {
        return Err(Error::ZeroVariance);
    }
    let mut partial = 0.0;
    let eta: f64 = e
        .iter()
        .map(|v| {
            partial += v;
            partial * partial
        })
        .sum::<f64>()
        / (n as f64 * n as f64);
    let s2 = long_run_variance(&e, short_bandwidth(n));
    let statistic = eta / s2;
    let (name, null) = match hypothesis {
        UnitRootHypothesis::ConstantAndTrend => ("KPSS (trend)", "series is trend-stationary"),
        _ => ("KPSS (level)", "series is level-stationary"),
    };
    Ok(TestResult::new(
        name,
        statistic,
        kpss_p_value(hypothesis, statistic),
        null,
    ))
}

/// Phillips-Perron Z(t) test: Dickey-Fuller regression without lagged
/// differences, t-ratio corrected with a Newey-West long-run variance.
pub fn pp_test(series: &[f64], hypothesis: UnitRootHypothesis) -> Result<TestResult> {
    let n_obs = series.len();
    if n_obs < 10 {
        return Err(Error::TooShort { needed: 10, got: n_obs });
    }
    let response = series[1..].to_vec();
    let n = response.len();
    let mut columns = vec![series[..n].to_vec()];
    columns.extend(deterministic_columns(hypothesis, n, 1));
    let fit = ols(&response, &columns)?;
    if fit.sigma2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let se = fit.std_err[0];
    let t = (fit.coef[0] - 1.0) / se;
    let u = &fit.residuals;
    let gamma0 = u.iter().map(|v| v * v).sum::<f64>() / n as f64;
    let lambda2 = long_run_variance(u, short_bandwidth(n));
    if lambda2 <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let s = fit.sigma2.sqrt();
    let statistic = (gamma0 / lambda2).sqrt() * t - 0.5 * (lambda2 - gamma0) / lambda2.sqrt() * (n as f64 * se / s);
    Ok(TestResult::new(
        "Phillips-Perron",
        statistic,
        df_p_value(hypothesis, n, statistic),
        UNIT_ROOT_NULL,
    ))
}

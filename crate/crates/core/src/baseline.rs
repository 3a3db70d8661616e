//! Benchmark forecasters: mean, naive, seasonal naive, drift, simple
//! exponential smoothing and Holt's linear trend.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optim::{golden_section, NelderMead};
use crate::series::TimeSeries;

const PARAM_LO: f64 = 1e-4;
const PARAM_HI: f64 = 1.0 - 1e-4;

/// Point forecasts from one baseline method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineForecast {
    pub method: String,
    pub point: Vec<f64>,
    /// One-step in-sample fits; NaN where the method has no prediction.
    pub fitted: Vec<f64>,
    pub params: BTreeMap<String, f64>,
}

impl BaselineForecast {
    fn new(method: &str, point: Vec<f64>, fitted: Vec<f64>) -> Self {
        Self {
            method: method.to_string(),
            point,
            fitted,
            params: BTreeMap::new(),
        }
    }

    fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }
}

/// A smoothing parameter, either fixed or chosen by least squares.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Smoothing {
    Auto,
    Fixed(f64),
}

fn check(train: &TimeSeries, h: usize, needed: usize) -> Result<&[f64]> {
    if h < 1 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    if train.len() < needed {
        return Err(Error::TooShort {
            needed,
            got: train.len(),
        });
    }
    Ok(train.values())
}

fn check_unit(name: &str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::InvalidArgument(format!("{name} = {value} is outside [0, 1]")))
    }
}

pub fn mean_forecast(train: &TimeSeries, h: usize) -> Result<BaselineForecast> {
    let y = check(train, h, 1)?;
    let m = train.mean();
    Ok(BaselineForecast::new("MEAN", vec![m; h], vec![m; y.len()]))
}

pub fn naive_forecast(train: &TimeSeries, h: usize) -> Result<BaselineForecast> {
    let y = check(train, h, 1)?;
    let mut fitted = vec![f64::NAN];
    fitted.extend_from_slice(&y[..y.len() - 1]);
    Ok(BaselineForecast::new("NAIVE", vec![train.last(); h], fitted))
}

/// Step `k` repeats the observation `period` steps before it, cycling through
/// the last observed season.
pub fn seasonal_naive_forecast(train: &TimeSeries, h: usize) -> Result<BaselineForecast> {
    let s = train.period();
    let y = check(train, h, s)?;
    let n = y.len();
    let point = (1..=h).map(|k| y[n - s + (k - 1) % s]).collect();
    let fitted = (0..n).map(|t| if t >= s { y[t - s] } else { f64::NAN }).collect();
    Ok(BaselineForecast::new("SN", point, fitted))
}

/// Extends the line through the first and last observations.
pub fn drift_forecast(train: &TimeSeries, h: usize) -> Result<BaselineForecast> {
    let y = check(train, h, 2)?;
    let n = y.len();
    let slope = (y[n - 1] - y[0]) / (n - 1) as f64;
    let point = (1..=h).map(|k| y[n - 1] + k as f64 * slope).collect();
    let mut fitted = vec![f64::NAN];
    fitted.extend(y[..n - 1].iter().map(|v| v + slope));
    Ok(BaselineForecast::new("DRIFT", point, fitted).with_param("slope", slope))
}

/// Level path of simple exponential smoothing from `level0`; returns the
/// one-step fits and the final level.
fn ses_path(y: &[f64], alpha: f64, level0: f64) -> (Vec<f64>, f64) {
    let mut level = level0;
    let mut fitted = Vec::with_capacity(y.len());
    for v in y {
        fitted.push(level);
        level = alpha * v + (1.0 - alpha) * level;
    }
    (fitted, level)
}

fn sse(y: &[f64], fitted: &[f64]) -> f64 {
    y.iter().zip(fitted).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Simple exponential smoothing with `ℓ_0 = y_1`.
pub fn ses_forecast(train: &TimeSeries, h: usize, alpha: Smoothing) -> Result<BaselineForecast> {
    let y = check(train, h, 2)?;
    let alpha = match alpha {
        Smoothing::Fixed(a) => check_unit("alpha", a)?,
        Smoothing::Auto => golden_section(|a| sse(y, &ses_path(y, a, y[0]).0), PARAM_LO, PARAM_HI, 1e-8).0,
    };
    let (fitted, level) = ses_path(y, alpha, y[0]);
    Ok(BaselineForecast::new("SES", vec![level; h], fitted).with_param("alpha", alpha))
}

struct HoltPath {
    fitted: Vec<f64>,
    level: f64,
    trend: f64,
}

/// `level0` and `trend0` are the states after the first observation, which
/// is fitted by `level0` itself.
fn holt_path(y: &[f64], alpha: f64, beta: f64, level0: f64, trend0: f64) -> HoltPath {
    let mut level = level0;
    let mut trend = trend0;
    let mut fitted = Vec::with_capacity(y.len());
    fitted.push(level0);
    for v in &y[1..] {
        let pred = level + trend;
        fitted.push(pred);
        let new_level = alpha * v + (1.0 - alpha) * pred;
        trend = beta * (new_level - level) + (1.0 - beta) * trend;
        level = new_level;
    }
    HoltPath { fitted, level, trend }
}

fn logistic(u: f64) -> f64 {
    PARAM_LO + (PARAM_HI - PARAM_LO) / (1.0 + (-u).exp())
}

/// Holt's linear trend with `ℓ_0 = y_1`, `b_0 = y_2 - y_1`.
pub fn holt_forecast(train: &TimeSeries, h: usize, alpha: Smoothing, beta: Smoothing) -> Result<BaselineForecast> {
    let y = check(train, h, 3)?;
    holt_forecast_with_init(train, h, alpha, beta, y[0], y[1] - y[0])
}

/// Holt's linear trend from an explicit initial level and trend.
pub fn holt_forecast_with_init(
    train: &TimeSeries,
    h: usize,
    alpha: Smoothing,
    beta: Smoothing,
    level0: f64,
    trend0: f64,
) -> Result<BaselineForecast> {
    let y = check(train, h, 3)?;
    let fixed_alpha = match alpha {
        Smoothing::Fixed(a) => Some(check_unit("alpha", a)?),
        Smoothing::Auto => None,
    };
    let fixed_beta = match beta {
        Smoothing::Fixed(b) => Some(check_unit("beta", b)?),
        Smoothing::Auto => None,
    };
    let (alpha, beta) = match (fixed_alpha, fixed_beta) {
        (Some(a), Some(b)) => (a, b),
        (Some(a), None) => {
            let (b, _) = golden_section(
                |b| sse(y, &holt_path(y, a, b, level0, trend0).fitted),
                PARAM_LO,
                PARAM_HI,
                1e-8,
            );
            (a, b)
        }
        (None, Some(b)) => {
            let (a, _) = golden_section(
                |a| sse(y, &holt_path(y, a, b, level0, trend0).fitted),
                PARAM_LO,
                PARAM_HI,
                1e-8,
            );
            (a, b)
        }
        (None, None) => {
            let objective = |u: &[f64]| sse(y, &holt_path(y, logistic(u[0]), logistic(u[1]), level0, trend0).fitted);
            // Start near α = 0.5, β = 0.1.
            let min = NelderMead::default().minimize(objective, &[0.0, -2.2]);
            (logistic(min.x[0]), logistic(min.x[1]))
        }
    };
    let path = holt_path(y, alpha, beta, level0, trend0);
    let point = (1..=h).map(|k| path.level + k as f64 * path.trend).collect();
    Ok(BaselineForecast::new("HOLT", point, path.fitted)
        .with_param("alpha", alpha)
        .with_param("beta", beta))
}

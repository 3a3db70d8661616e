//! Series container, differencing, and sample correlograms.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered, equally spaced observations with a seasonal period.
///
/// `start_date` is a label only; every computation is positional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    values: Vec<f64>,
    start_date: Option<NaiveDate>,
    period: usize,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>, period: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::TooShort { needed: 1, got: 0 });
        }
        if period == 0 {
            return Err(Error::InvalidArgument("period must be at least 1".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("observation {i}")));
        }
        Ok(Self {
            values,
            start_date: None,
            period,
        })
    }

    pub fn with_start_date(mut self, date: NaiveDate) -> Self {
        self.start_date = Some(date);
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn start_date(&self) -> Option<NaiveDate> {
        self.start_date
    }

    pub fn last(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn mean(&self) -> f64 {
        mean(&self.values)
    }

    /// True when every observation equals the first one.
    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| *v == self.values[0])
    }

    /// Copy of the first `len` observations, keeping period and start date.
    pub fn head(&self, len: usize) -> Result<Self> {
        if len == 0 || len > self.len() {
            return Err(Error::InvalidArgument(format!(
                "head length {len} out of range 1..={}",
                self.len()
            )));
        }
        Ok(Self {
            values: self.values[..len].to_vec(),
            start_date: self.start_date,
            period: self.period,
        })
    }

    pub fn with_period(mut self, period: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidArgument("period must be at least 1".into()));
        }
        self.period = period;
        Ok(self)
    }
}

/// Differencing orders: `d` ordinary differences and `seasonal_d` lag-`period` differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceSpec {
    pub d: usize,
    pub seasonal_d: usize,
    pub period: usize,
}

impl DifferenceSpec {
    pub fn new(d: usize, seasonal_d: usize, period: usize) -> Self {
        Self { d, seasonal_d, period }
    }

    pub fn none() -> Self {
        Self::new(0, 0, 1)
    }

    /// Number of observations consumed by differencing.
    pub fn lost(&self) -> usize {
        self.d + self.seasonal_d * self.period
    }

    /// Coefficients of `(1-B)^d (1-B^s)^D`, constant term first.
    pub fn polynomial(&self) -> Vec<f64> {
        let mut poly = vec![1.0];
        for _ in 0..self.seasonal_d {
            poly = poly_mul(&poly, &lag_difference(self.period));
        }
        for _ in 0..self.d {
            poly = poly_mul(&poly, &lag_difference(1));
        }
        poly
    }
}

fn lag_difference(lag: usize) -> Vec<f64> {
    let mut p = vec![0.0; lag + 1];
    p[0] = 1.0;
    p[lag] = -1.0;
    p
}

pub(crate) fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0.0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn diff_once(x: &[f64], lag: usize) -> Vec<f64> {
    x.windows(lag + 1).map(|w| w[lag] - w[0]).collect()
}

/// Seasonal differences first, then ordinary ones.
pub fn difference(values: &[f64], spec: &DifferenceSpec) -> Result<Vec<f64>> {
    if spec.seasonal_d > 0 && spec.period == 0 {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    let lost = spec.lost();
    if values.len() <= lost {
        return Err(Error::TooShort {
            needed: lost + 1,
            got: values.len(),
        });
    }
    let mut out = values.to_vec();
    for _ in 0..spec.seasonal_d {
        out = diff_once(&out, spec.period);
    }
    for _ in 0..spec.d {
        out = diff_once(&out, 1);
    }
    Ok(out)
}

/// Inverse of [`difference`]: rebuilds the original-scale series from the
/// differenced values and the `d + D·period` leading observations.
///
/// The output has length `head.len() + diffed.len()`. Extra differenced
/// values beyond the original sample (forecasts) integrate the same way.
pub fn undifference(diffed: &[f64], spec: &DifferenceSpec, head: &[f64]) -> Result<Vec<f64>> {
    let lost = spec.lost();
    if head.len() != lost {
        return Err(Error::HeadLength {
            expected: lost,
            got: head.len(),
        });
    }
    // Leading values of every intermediate series, in the order differencing
    // produced them: stage k holds the series after k difference passes.
    let lags: Vec<usize> = std::iter::repeat_n(spec.period, spec.seasonal_d)
        .chain(std::iter::repeat_n(1, spec.d))
        .collect();
    let mut stage = head.to_vec();
    let mut heads = Vec::with_capacity(lags.len());
    for &lag in &lags {
        heads.push(stage[..lag].to_vec());
        stage = diff_once(&stage, lag);
    }
    let mut out = diffed.to_vec();
    for (lag, lead) in lags.iter().zip(heads.iter()).rev() {
        let mut integrated = Vec::with_capacity(lead.len() + out.len());
        integrated.extend_from_slice(lead);
        for v in &out {
            integrated.push(integrated[integrated.len() - lag] + v);
        }
        out = integrated;
    }
    Ok(out)
}

pub(crate) fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Biased sample variance (divide by n).
#[cfg(test)]
pub(crate) fn variance(x: &[f64]) -> f64 {
    let m = mean(x);
    x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / x.len() as f64
}

/// Sample standard deviation with the n-1 denominator.
pub(crate) fn sample_sd(x: &[f64]) -> f64 {
    let m = mean(x);
    let ss: f64 = x.iter().map(|v| (v - m) * (v - m)).sum();
    (ss / (x.len() as f64 - 1.0)).sqrt()
}

/// Sample autocorrelations or partial autocorrelations by lag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Correlogram {
    pub lags: Vec<usize>,
    pub values: Vec<f64>,
    /// Half-width of the approximate 95% white-noise band, 1.96/sqrt(n).
    pub ci_bound: f64,
}

fn check_correlogram_input(x: &[f64], max_lag: usize) -> Result<()> {
    if x.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: x.len(),
        });
    }
    if max_lag >= x.len() {
        return Err(Error::InvalidArgument(format!(
            "max_lag {max_lag} must be below series length {}",
            x.len()
        )));
    }
    Ok(())
}

/// Autocovariances at lags `0..=max_lag` with the biased (divide-by-n) convention.
pub(crate) fn autocovariances(x: &[f64], max_lag: usize) -> Vec<f64> {
    let n = x.len();
    let m = mean(x);
    let centered: Vec<f64> = x.iter().map(|v| v - m).collect();
    (0..=max_lag)
        .map(|k| {
            centered[..n - k]
                .iter()
                .zip(&centered[k..])
                .map(|(a, b)| a * b)
                .sum::<f64>()
                / n as f64
        })
        .collect()
}

/// Sample ACF at lags `0..=max_lag`; lag 0 is exactly 1.
pub fn acf(x: &[f64], max_lag: usize) -> Result<Correlogram> {
    check_correlogram_input(x, max_lag)?;
    let gamma = autocovariances(x, max_lag);
    if gamma[0] <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let mut values: Vec<f64> = gamma.iter().map(|g| g / gamma[0]).collect();
    values[0] = 1.0;
    Ok(Correlogram {
        lags: (0..=max_lag).collect(),
        values,
        ci_bound: 1.96 / (x.len() as f64).sqrt(),
    })
}

/// Durbin-Levinson recursion from autocorrelations `r[0..=k]` (with `r[0] = 1`).
/// Returns the partial autocorrelations at lags `1..=k`.
pub(crate) fn durbin_levinson(r: &[f64]) -> Vec<f64> {
    let max_lag = r.len() - 1;
    let mut pacf = Vec::with_capacity(max_lag);
    let mut phi: Vec<f64> = Vec::with_capacity(max_lag);
    let mut v = r[0];
    for k in 1..=max_lag {
        let num = r[k] - phi.iter().enumerate().map(|(j, p)| p * r[k - 1 - j]).sum::<f64>();
        let a = if v > 0.0 { num / v } else { 0.0 };
        let prev = phi.clone();
        for j in 0..phi.len() {
            phi[j] = prev[j] - a * prev[prev.len() - 1 - j];
        }
        phi.push(a);
        v *= 1.0 - a * a;
        pacf.push(a);
    }
    pacf
}

/// Sample PACF at lags `1..=max_lag`, via Durbin-Levinson on the sample ACF.
pub fn pacf(x: &[f64], max_lag: usize) -> Result<Correlogram> {
    if max_lag == 0 {
        return Err(Error::InvalidArgument("pacf needs max_lag >= 1".into()));
    }
    let r = acf(x, max_lag)?;
    Ok(Correlogram {
        lags: (1..=max_lag).collect(),
        values: durbin_levinson(&r.values),
        ci_bound: r.ci_bound,
    })
}

/// Series reshaped into one row per seasonal cycle; the last row may be partial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeasonalTable {
    pub period: usize,
    pub rows: Vec<Vec<f64>>,
}

impl SeasonalTable {
    /// `(cycle, position, value)` triples, both indices 1-based.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(c, row)| row.iter().enumerate().map(move |(pos, v)| (c + 1, pos + 1, *v)))
    }
}

pub fn seasonal_table(series: &TimeSeries) -> Result<SeasonalTable> {
    let period = series.period();
    if period < 2 {
        return Err(Error::InvalidArgument("seasonal table needs period >= 2".into()));
    }
    Ok(SeasonalTable {
        period,
        rows: series.values().chunks(period).map(<[f64]>::to_vec).collect(),
    })
}

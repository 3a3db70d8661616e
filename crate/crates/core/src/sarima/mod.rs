//! Seasonal ARIMA: exact Gaussian likelihood, maximum-likelihood fitting,
//! interval forecasts and simulation.
//!
//! Coefficients use the plus-sign convention for the moving-average side:
//!
//! ```text
//! φ(B) Φ(B^s) (w_t - μ) = θ(B) Θ(B^s) e_t,   w_t = (1-B)^d (1-B^s)^D y_t
//! φ(B) = 1 - φ_1 B - …,   θ(B) = 1 + θ_1 B + …
//! ```

mod arma;
mod fit;
mod forecast;
mod simulate;
mod transform;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::DifferenceSpec;

pub use fit::{fit, fit_with, loglik, FitOptions};
pub use forecast::{forecast, psi_weights, ForecastResult};
pub use simulate::simulate;

/// Model orders `(p,d,q)(P,D,Q)_period`.
///
/// `include_drift` adds the constant of the differenced model: a mean when
/// `d + D = 0`, a per-step drift slope when `d + D = 1`. It is not allowed
/// for higher total differencing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SarimaSpec {
    pub p: usize,
    pub d: usize,
    pub q: usize,
    pub seasonal_p: usize,
    pub seasonal_d: usize,
    pub seasonal_q: usize,
    pub period: usize,
    pub include_drift: bool,
}

impl SarimaSpec {
    /// Non-seasonal ARIMA(p,d,q) without a constant.
    pub fn arima(p: usize, d: usize, q: usize) -> Self {
        Self {
            p,
            d,
            q,
            seasonal_p: 0,
            seasonal_d: 0,
            seasonal_q: 0,
            period: 1,
            include_drift: false,
        }
    }

    pub fn seasonal(mut self, seasonal_p: usize, seasonal_d: usize, seasonal_q: usize, period: usize) -> Self {
        self.seasonal_p = seasonal_p;
        self.seasonal_d = seasonal_d;
        self.seasonal_q = seasonal_q;
        self.period = period;
        self
    }

    pub fn with_drift(mut self, include: bool) -> Self {
        self.include_drift = include;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.period == 0 {
            return Err(Error::InvalidArgument("period must be at least 1".into()));
        }
        let seasonal = self.seasonal_p + self.seasonal_d + self.seasonal_q > 0;
        if seasonal && self.period < 2 {
            return Err(Error::InvalidArgument(
                "seasonal orders need a period of at least 2".into(),
            ));
        }
        if self.include_drift && self.total_differencing() > 1 {
            return Err(Error::InvalidArgument("drift requires d + D <= 1".into()));
        }
        Ok(())
    }

    pub fn total_differencing(&self) -> usize {
        self.d + self.seasonal_d
    }

    pub fn difference_spec(&self) -> DifferenceSpec {
        DifferenceSpec::new(self.d, self.seasonal_d, self.period)
    }

    /// Free mean-equation coefficients (excludes the innovation variance).
    pub fn n_coefficients(&self) -> usize {
        self.p + self.q + self.seasonal_p + self.seasonal_q + usize::from(self.include_drift)
    }

    /// `n_coefficients() + 1`: the parameter count used by AIC/BIC.
    pub fn n_parameters(&self) -> usize {
        self.n_coefficients() + 1
    }

    /// AR and MA orders of the expanded non-seasonal representation.
    pub fn expanded_orders(&self) -> (usize, usize) {
        (
            self.p + self.period * self.seasonal_p,
            self.q + self.period * self.seasonal_q,
        )
    }

    /// Coefficient labels in reporting order: ar, ma, sar, sma, then the constant.
    pub fn coefficient_labels(&self) -> Vec<String> {
        let mut labels = Vec::with_capacity(self.n_coefficients());
        labels.extend((1..=self.p).map(|i| format!("ar{i}")));
        labels.extend((1..=self.q).map(|i| format!("ma{i}")));
        labels.extend((1..=self.seasonal_p).map(|i| format!("sar{i}")));
        labels.extend((1..=self.seasonal_q).map(|i| format!("sma{i}")));
        if self.include_drift {
            labels.push(
                if self.total_differencing() == 0 {
                    "mean"
                } else {
                    "drift"
                }
                .to_string(),
            );
        }
        labels
    }

    /// Multiplier taking a per-step drift slope to the mean of the differenced series.
    pub(crate) fn drift_scale(&self) -> f64 {
        if self.seasonal_d == 1 {
            self.period as f64
        } else {
            1.0
        }
    }
}

impl fmt::Display for SarimaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ARIMA({},{},{})", self.p, self.d, self.q)?;
        if self.seasonal_p + self.seasonal_d + self.seasonal_q > 0 {
            write!(
                f,
                "({},{},{})[{}]",
                self.seasonal_p, self.seasonal_d, self.seasonal_q, self.period
            )?;
        }
        if self.include_drift {
            let term = if self.total_differencing() == 0 {
                "mean"
            } else {
                "drift"
            };
            write!(f, " with {term}")?;
        }
        Ok(())
    }
}

/// Coefficient values for a [`SarimaSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SarimaParams {
    /// Mean when `d + D = 0`, per-step drift slope otherwise. Ignored unless
    /// the model includes a constant.
    pub mu_or_drift: f64,
    pub phi: Vec<f64>,
    pub theta: Vec<f64>,
    pub seasonal_phi: Vec<f64>,
    pub seasonal_theta: Vec<f64>,
    pub sigma2: f64,
}

impl SarimaParams {
    /// All-zero coefficients with unit innovation variance.
    pub fn zeros(spec: &SarimaSpec) -> Self {
        Self {
            mu_or_drift: 0.0,
            phi: vec![0.0; spec.p],
            theta: vec![0.0; spec.q],
            seasonal_phi: vec![0.0; spec.seasonal_p],
            seasonal_theta: vec![0.0; spec.seasonal_q],
            sigma2: 1.0,
        }
    }

    /// Checks lengths, variance, stationarity and invertibility.
    pub fn validate(&self, spec: &SarimaSpec) -> Result<()> {
        let lengths = [
            (self.phi.len(), spec.p, "phi"),
            (self.theta.len(), spec.q, "theta"),
            (self.seasonal_phi.len(), spec.seasonal_p, "seasonal_phi"),
            (self.seasonal_theta.len(), spec.seasonal_q, "seasonal_theta"),
        ];
        for (got, want, name) in lengths {
            if got != want {
                return Err(Error::InvalidArgument(format!(
                    "{name} has {got} entries, spec needs {want}"
                )));
            }
        }
        if !(self.sigma2 > 0.0 && self.sigma2.is_finite()) {
            return Err(Error::InvalidParameters("sigma2 must be positive".into()));
        }
        let all = [&self.phi, &self.theta, &self.seasonal_phi, &self.seasonal_theta];
        if all.iter().any(|v| v.iter().any(|c| !c.is_finite())) || !self.mu_or_drift.is_finite() {
            return Err(Error::NonFinite("coefficient".into()));
        }
        if !transform::is_stationary(&self.phi) || !transform::is_stationary(&self.seasonal_phi) {
            return Err(Error::InvalidParameters("AR polynomial is not stationary".into()));
        }
        if !transform::is_invertible(&self.theta) || !transform::is_invertible(&self.seasonal_theta) {
            return Err(Error::InvalidParameters("MA polynomial is not invertible".into()));
        }
        Ok(())
    }

    /// Mean of the differenced series implied by these parameters.
    pub(crate) fn differenced_mean(&self, spec: &SarimaSpec) -> f64 {
        if !spec.include_drift {
            0.0
        } else if spec.total_differencing() == 0 {
            self.mu_or_drift
        } else {
            self.mu_or_drift * spec.drift_scale()
        }
    }

    /// Coefficients in label order (see [`SarimaSpec::coefficient_labels`]).
    pub fn coefficients(&self, spec: &SarimaSpec) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .phi
            .iter()
            .chain(&self.theta)
            .chain(&self.seasonal_phi)
            .chain(&self.seasonal_theta)
            .copied()
            .collect();
        if spec.include_drift {
            out.push(self.mu_or_drift);
        }
        out
    }
}

/// A fitted seasonal ARIMA model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SarimaFit {
    pub spec: SarimaSpec,
    pub params: SarimaParams,
    /// Standard errors aligned with [`SarimaSpec::coefficient_labels`]; NaN when
    /// the numeric Hessian is not positive definite.
    pub std_errors: Vec<f64>,
    pub loglik: f64,
    pub aic: f64,
    pub bic: f64,
    /// Standardized one-step prediction errors on the differenced scale.
    pub residuals: Vec<f64>,
    pub n_effective: usize,
    pub converged: bool,
    /// Objective evaluations spent by the optimizer.
    pub evaluations: usize,
    /// Log-likelihood at the optimizer's starting point.
    pub initial_loglik: f64,
    #[serde(skip)]
    pub(crate) history: Vec<f64>,
}

impl SarimaFit {
    pub fn coefficient_labels(&self) -> Vec<String> {
        self.spec.coefficient_labels()
    }

    pub fn coefficients(&self) -> Vec<f64> {
        self.params.coefficients(&self.spec)
    }

    /// Observations the model was fitted to, on the original scale.
    pub fn history(&self) -> &[f64] {
        &self.history
    }
}

/// `(aic, bic)` with `aic = -2 ll + 2k` and `bic = -2 ll + k ln n`.
pub fn information_criteria(loglik: f64, k: usize, n: usize) -> Result<(f64, f64)> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "information criteria need k >= 1 and n >= 1".into(),
        ));
    }
    let kf = k as f64;
    Ok((-2.0 * loglik + 2.0 * kf, -2.0 * loglik + kf * (n as f64).ln()))
}

//! Point and interval forecasts on the original scale.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use super::arma::{predict, psi_from, Arma, Innovations};
use super::{SarimaFit, SarimaParams, SarimaSpec};
use crate::error::{Error, Result};
use crate::series::{difference, poly_mul, undifference};

/// Forecasts with symmetric normal intervals.
///
/// `lower[i][j]` and `upper[i][j]` hold step `i + 1` at `levels[j]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForecastResult {
    pub point: Vec<f64>,
    pub levels: Vec<f64>,
    pub lower: Vec<Vec<f64>>,
    pub upper: Vec<Vec<f64>>,
    pub sigma_h: Vec<f64>,
}

impl ForecastResult {
    pub fn horizon(&self) -> usize {
        self.point.len()
    }

    /// Builds intervals `point ± z_{(1+level)/2} σ_h`.
    pub fn from_point_and_sigma(point: Vec<f64>, sigma_h: Vec<f64>, levels: &[f64]) -> Result<Self> {
        validate_levels(levels)?;
        if point.len() != sigma_h.len() {
            return Err(Error::InvalidArgument("point and sigma lengths differ".into()));
        }
        let std = Normal::standard();
        let z: Vec<f64> = levels.iter().map(|l| std.inverse_cdf(0.5 * (1.0 + l))).collect();
        let lower = point
            .iter()
            .zip(&sigma_h)
            .map(|(p, s)| z.iter().map(|z| p - z * s).collect())
            .collect();
        let upper = point
            .iter()
            .zip(&sigma_h)
            .map(|(p, s)| z.iter().map(|z| p + z * s).collect())
            .collect();
        Ok(Self {
            point,
            levels: levels.to_vec(),
            lower,
            upper,
            sigma_h,
        })
    }
}

fn validate_levels(levels: &[f64]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::InvalidArgument("at least one level is required".into()));
    }
    if let Some(l) = levels.iter().find(|l| !(**l > 0.0 && **l < 1.0)) {
        return Err(Error::InvalidArgument(format!("level {l} is outside (0, 1)")));
    }
    Ok(())
}

/// ψ-weights `ψ_0..ψ_{n-1}` of the integrated model, differencing included.
pub fn psi_weights(spec: &SarimaSpec, params: &SarimaParams, n: usize) -> Vec<f64> {
    let arma = Arma::new(spec, params);
    let mut ar_poly = vec![1.0];
    ar_poly.extend(arma.ar.iter().map(|a| -a));
    let full = poly_mul(&ar_poly, &spec.difference_spec().polynomial());
    let ar: Vec<f64> = full[1..].iter().map(|c| -c).collect();
    psi_from(&ar, &arma.ma, n)
}

/// Forecasts `h` steps ahead at the given interval levels.
pub fn forecast(fit: &SarimaFit, h: usize, levels: &[f64]) -> Result<ForecastResult> {
    if h < 1 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    validate_levels(levels)?;
    let spec = &fit.spec;
    let params = &fit.params;
    let diff = spec.difference_spec();
    let history = fit.history();
    let w = difference(history, &diff)?;
    let n = w.len();
    let mu = params.differenced_mean(spec);
    let x: Vec<f64> = w.iter().map(|v| v - mu).collect();

    let arma = Arma::new(spec, params);
    let innov = Innovations::new(&arma, n + h)?;
    let fitted = predict(&arma, &innov, &x);
    let resid: Vec<f64> = x.iter().zip(&fitted.xhat).map(|(a, b)| a - b).collect();
    let m = arma.m();
    let mut path = x.clone();
    for t in n..n + h {
        let mut pred = 0.0;
        if t >= m {
            for (i, a) in arma.ar.iter().enumerate() {
                pred += a * path[t - 1 - i];
            }
        }
        for j in (t - n + 1)..=t {
            let c = innov.coef(t, j);
            if c != 0.0 {
                pred += c * resid[t - j];
            }
        }
        path.push(pred);
    }
    let diffed: Vec<f64> = path.iter().map(|v| v + mu).collect();
    let lost = diff.lost();
    let integrated = undifference(&diffed, &diff, &history[..lost])?;
    let point = integrated[integrated.len() - h..].to_vec();

    let psi = psi_weights(spec, params, h);
    let mut acc = 0.0;
    let sigma_h = psi
        .iter()
        .map(|p| {
            acc += p * p;
            (params.sigma2 * acc).sqrt()
        })
        .collect();
    ForecastResult::from_point_and_sigma(point, sigma_h, levels)
}

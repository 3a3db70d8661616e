//! Expanded ARMA representation and the exact likelihood machinery.
//!
//! The likelihood uses the innovations algorithm applied to the transformed
//! process `W_t = X_t` for `t <= m`, `W_t = φ(B) X_t` for `t > m`, with
//! `m = max(p, q)`. Its covariances only need the ARMA autocovariances, so the
//! exact initial covariance comes for free and the per-step cost after `m`
//! is `O(q^2)`.

use nalgebra::{DMatrix, DVector};

use super::{SarimaParams, SarimaSpec};
use crate::error::{Error, Result};
use crate::series::poly_mul;

/// `x_t = Σ ar_i x_{t-i} + e_t + Σ ma_j e_{t-j}` (lags start at 1).
#[derive(Debug, Clone)]
pub(crate) struct Arma {
    pub ar: Vec<f64>,
    pub ma: Vec<f64>,
}

fn seasonal_poly(coefs: &[f64], period: usize, sign: f64) -> Vec<f64> {
    let mut poly = vec![0.0; coefs.len() * period + 1];
    poly[0] = 1.0;
    for (i, c) in coefs.iter().enumerate() {
        poly[(i + 1) * period] = sign * c;
    }
    poly
}

impl Arma {
    pub fn new(spec: &SarimaSpec, params: &SarimaParams) -> Self {
        Self::from_parts(
            spec.period,
            &params.phi,
            &params.theta,
            &params.seasonal_phi,
            &params.seasonal_theta,
        )
    }

    pub fn from_parts(period: usize, phi: &[f64], theta: &[f64], sphi: &[f64], stheta: &[f64]) -> Self {
        let ar_poly = poly_mul(&seasonal_poly(phi, 1, -1.0), &seasonal_poly(sphi, period, -1.0));
        let ma_poly = poly_mul(&seasonal_poly(theta, 1, 1.0), &seasonal_poly(stheta, period, 1.0));
        // Keep nominal orders even when trailing coefficients are zero.
        let p = phi.len() + period * sphi.len();
        let q = theta.len() + period * stheta.len();
        let mut ar: Vec<f64> = ar_poly[1..].iter().map(|c| -c).collect();
        let mut ma: Vec<f64> = ma_poly[1..].to_vec();
        ar.resize(p, 0.0);
        ma.resize(q, 0.0);
        Self { ar, ma }
    }

    pub fn p(&self) -> usize {
        self.ar.len()
    }

    pub fn q(&self) -> usize {
        self.ma.len()
    }

    /// `max(p, q)`, the number of leading observations handled without the AR filter.
    pub fn m(&self) -> usize {
        self.p().max(self.q())
    }

    /// Autocovariances at lags `0..=max_lag` for unit innovation variance.
    pub fn autocovariance(&self, max_lag: usize) -> Result<Vec<f64>> {
        let p = self.p();
        let q = self.q();
        let psi = psi_from(&self.ar, &self.ma, q + 1);
        let ma_at = |j: usize| if j == 0 { 1.0 } else { self.ma[j - 1] };
        let rhs = |k: usize| -> f64 {
            if k > q {
                0.0
            } else {
                (k..=q).map(|j| ma_at(j) * psi[j - k]).sum()
            }
        };
        let mut gamma = vec![0.0; max_lag.max(p) + 1];
        if p == 0 {
            for (k, g) in gamma.iter_mut().enumerate() {
                *g = rhs(k);
            }
            gamma.truncate(max_lag + 1);
            return Ok(gamma);
        }
        // γ(k) - Σ_r ar_r γ(|k - r|) = rhs(k), k = 0..=p.
        let mut a = DMatrix::<f64>::zeros(p + 1, p + 1);
        let mut b = DVector::<f64>::zeros(p + 1);
        for k in 0..=p {
            a[(k, k)] += 1.0;
            for r in 1..=p {
                a[(k, k.abs_diff(r))] -= self.ar[r - 1];
            }
            b[k] = rhs(k);
        }
        let sol = a
            .lu()
            .solve(&b)
            .ok_or_else(|| Error::InvalidParameters("autocovariance system is singular".into()))?;
        for k in 0..=p {
            gamma[k] = sol[k];
        }
        for k in p + 1..gamma.len() {
            gamma[k] = (1..=p).map(|r| self.ar[r - 1] * gamma[k - r]).sum::<f64>() + rhs(k);
        }
        if gamma[0].is_nan() || gamma[0] <= 0.0 || gamma.iter().any(|g| !g.is_finite()) {
            return Err(Error::InvalidParameters("autocovariance is not positive".into()));
        }
        gamma.truncate(max_lag + 1);
        Ok(gamma)
    }
}

/// ψ-weights `ψ_0..ψ_{n-1}` of `ma(B) / ar(B)` with the sign conventions of [`Arma`].
pub(crate) fn psi_from(ar: &[f64], ma: &[f64], n: usize) -> Vec<f64> {
    let mut psi = vec![0.0; n];
    for j in 0..n {
        let mut v = if j == 0 {
            1.0
        } else if j <= ma.len() {
            ma[j - 1]
        } else {
            0.0
        };
        for i in 1..=j.min(ar.len()) {
            v += ar[i - 1] * psi[j - i];
        }
        psi[j] = v;
    }
    psi
}

/// Innovations-algorithm coefficients `θ_{n,j}` and normalized mean squared
/// errors `r_n` for the first `len` one-step predictions.
pub(crate) struct Innovations {
    m: usize,
    /// `theta[n][j - 1] = θ_{n,j}`; entries beyond the stored length are zero.
    theta: Vec<Vec<f64>>,
    pub v: Vec<f64>,
}

impl Innovations {
    pub fn new(arma: &Arma, len: usize) -> Result<Self> {
        let p = arma.p();
        let q = arma.q();
        let m = arma.m();
        let gamma = arma.autocovariance(2 * m + 1)?;
        let ma_at = |j: usize| if j == 0 { 1.0 } else { arma.ma[j - 1] };
        // Covariance of the transformed process, 1-based indices.
        let kappa = |i: usize, j: usize| -> f64 {
            let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
            let h = hi - lo;
            if hi <= m {
                gamma[h]
            } else if lo <= m {
                if hi > 2 * m {
                    return 0.0;
                }
                let mut v = gamma[h];
                for r in 1..=p {
                    let lag = (r as isize - h as isize).unsigned_abs();
                    v -= arma.ar[r - 1] * gamma[lag];
                }
                v
            } else if h > q {
                0.0
            } else {
                (0..=q - h).map(|r| ma_at(r) * ma_at(r + h)).sum()
            }
        };

        let mut theta: Vec<Vec<f64>> = Vec::with_capacity(len);
        let mut v: Vec<f64> = Vec::with_capacity(len);
        if len == 0 {
            return Ok(Self { m, theta, v });
        }
        theta.push(Vec::new());
        v.push(kappa(1, 1));
        for n in 1..len {
            let k_start = if n >= m { n.saturating_sub(q) } else { 0 };
            let mut row = vec![0.0; n - k_start];
            // row index for θ_{n,n-k} is n-k-1.
            for k in k_start..n {
                let mut acc = kappa(n + 1, k + 1);
                for j in k_start..k {
                    let t_kj = get(&theta[k], k - j);
                    if t_kj != 0.0 {
                        acc -= t_kj * row[n - j - 1] * v[j];
                    }
                }
                row[n - k - 1] = acc / v[k];
            }
            let mut vn = kappa(n + 1, n + 1);
            for j in k_start..n {
                let t = row[n - j - 1];
                vn -= t * t * v[j];
            }
            if !vn.is_finite() || vn <= 0.0 {
                return Err(Error::NonFinite("innovation variance became non-positive".into()));
            }
            theta.push(row);
            v.push(vn);
        }
        Ok(Self { m, theta, v })
    }

    pub fn coef(&self, n: usize, j: usize) -> f64 {
        get(&self.theta[n], j)
    }
}

fn get(row: &[f64], j: usize) -> f64 {
    if j >= 1 && j <= row.len() {
        row[j - 1]
    } else {
        0.0
    }
}

/// One-step predictions of a zero-mean series and their normalized variances.
pub(crate) struct Predictions {
    pub xhat: Vec<f64>,
    pub r: Vec<f64>,
}

pub(crate) fn predict(arma: &Arma, innov: &Innovations, x: &[f64]) -> Predictions {
    let n_obs = x.len();
    let m = innov.m;
    let mut xhat = vec![0.0; n_obs];
    for n in 1..n_obs {
        let mut pred = 0.0;
        if n >= m {
            for (i, a) in arma.ar.iter().enumerate() {
                pred += a * x[n - 1 - i];
            }
            for j in 1..=arma.q().min(n) {
                pred += innov.coef(n, j) * (x[n - j] - xhat[n - j]);
            }
        } else {
            for j in 1..=n {
                pred += innov.coef(n, j) * (x[n - j] - xhat[n - j]);
            }
        }
        xhat[n] = pred;
    }
    Predictions {
        xhat,
        r: innov.v[..n_obs].to_vec(),
    }
}

/// Concentrated (σ² profiled out) exact log-likelihood pieces.
pub(crate) struct LikelihoodTerms {
    /// Σ (x_t - x̂_t)² / r_t.
    pub weighted_ss: f64,
    /// Σ ln r_t.
    pub log_det: f64,
    pub n: usize,
    pub predictions: Predictions,
}

impl LikelihoodTerms {
    pub fn sigma2_hat(&self) -> f64 {
        self.weighted_ss / self.n as f64
    }

    pub fn concentrated(&self) -> f64 {
        let n = self.n as f64;
        -0.5 * n * ((2.0 * std::f64::consts::PI * self.sigma2_hat()).ln() + 1.0) - 0.5 * self.log_det
    }

    pub fn with_sigma2(&self, sigma2: f64) -> f64 {
        let n = self.n as f64;
        -0.5 * n * (2.0 * std::f64::consts::PI * sigma2).ln() - 0.5 * self.log_det - 0.5 * self.weighted_ss / sigma2
    }

    /// Prediction errors scaled by `1/sqrt(r_t)`; variance σ² under the model.
    pub fn standardized_residuals(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.predictions.xhat)
            .zip(&self.predictions.r)
            .map(|((x, xh), r)| (x - xh) / r.sqrt())
            .collect()
    }
}

pub(crate) fn likelihood_terms(arma: &Arma, x: &[f64]) -> Result<LikelihoodTerms> {
    let innov = Innovations::new(arma, x.len())?;
    terms_from(arma, &innov, x)
}

fn terms_from(arma: &Arma, innov: &Innovations, x: &[f64]) -> Result<LikelihoodTerms> {
    let predictions = predict(arma, innov, x);
    let mut weighted_ss = 0.0;
    let mut log_det = 0.0;
    for ((x, xh), r) in x.iter().zip(&predictions.xhat).zip(&predictions.r) {
        weighted_ss += (x - xh) * (x - xh) / r;
        log_det += r.ln();
    }
    if !weighted_ss.is_finite() || !log_det.is_finite() {
        return Err(Error::NonFinite("log-likelihood".into()));
    }
    Ok(LikelihoodTerms {
        weighted_ss,
        log_det,
        n: x.len(),
        predictions,
    })
}

/// Generalized least-squares mean of `w` under `arma`, with the likelihood
/// terms of the centered series.
///
/// Prediction errors are linear in the data, so the weighted sum of squares
/// is a quadratic in the mean and is minimized in closed form.
pub(crate) fn profile_mean(arma: &Arma, w: &[f64]) -> Result<(f64, LikelihoodTerms)> {
    let innov = Innovations::new(arma, w.len())?;
    let ones = vec![1.0; w.len()];
    let pw = predict(arma, &innov, w);
    let p1 = predict(arma, &innov, &ones);
    let mut num = 0.0;
    let mut den = 0.0;
    for (t, &wt) in w.iter().enumerate() {
        let ew = wt - pw.xhat[t];
        let e1 = 1.0 - p1.xhat[t];
        num += ew * e1 / innov.v[t];
        den += e1 * e1 / innov.v[t];
    }
    if den.is_nan() || den <= 0.0 {
        return Err(Error::Singular);
    }
    let mu = num / den;
    let centered: Vec<f64> = w.iter().map(|v| v - mu).collect();
    Ok((mu, terms_from(arma, &innov, &centered)?))
}

/// Conditional sum of squares with zero pre-sample innovations, starting
/// after the first `p` observations.
pub(crate) fn conditional_ss(arma: &Arma, x: &[f64]) -> f64 {
    let p = arma.p();
    let q = arma.q();
    let mut e = vec![0.0; x.len()];
    let mut ss = 0.0;
    for t in p..x.len() {
        let mut v = x[t];
        for (i, a) in arma.ar.iter().enumerate() {
            v -= a * x[t - 1 - i];
        }
        for j in 1..=q.min(t) {
            v -= arma.ma[j - 1] * e[t - j];
        }
        e[t] = v;
        ss += v * v;
    }
    ss
}

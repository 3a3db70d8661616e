//! Maximum-likelihood fitting in unconstrained coordinates.

use nalgebra::DMatrix;

use super::arma::{conditional_ss, likelihood_terms, profile_mean, Arma, LikelihoodTerms};
use super::transform::{ar_from_unconstrained, ma_from_unconstrained};
use super::{information_criteria, SarimaFit, SarimaParams, SarimaSpec};
use crate::error::{Error, Result};
use crate::optim::NelderMead;
use crate::series::{difference, mean, sample_sd, TimeSeries};

/// Fitting controls.
#[derive(Debug, Clone, Copy)]
pub struct FitOptions {
    pub optimizer: NelderMead,
    /// Compute coefficient standard errors from the numeric Hessian.
    pub std_errors: bool,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            optimizer: NelderMead::default(),
            std_errors: true,
        }
    }
}

/// Exact Gaussian log-likelihood of the differenced series.
pub fn loglik(spec: &SarimaSpec, params: &SarimaParams, series: &TimeSeries) -> Result<f64> {
    spec.validate()?;
    params.validate(spec)?;
    let w = difference(series.values(), &spec.difference_spec())?;
    let mu = params.differenced_mean(spec);
    let x: Vec<f64> = w.iter().map(|v| v - mu).collect();
    let arma = Arma::new(spec, params);
    let ll = likelihood_terms(&arma, &x)?.with_sigma2(params.sigma2);
    if ll.is_finite() {
        Ok(ll)
    } else {
        Err(Error::NonFinite("log-likelihood".into()))
    }
}

/// Fits `spec` with default options.
pub fn fit(spec: &SarimaSpec, series: &TimeSeries) -> Result<SarimaFit> {
    fit_with(spec, series, &FitOptions::default())
}

/// Optimizer coordinates: unconstrained AR/MA partials, then (for the full
/// objective only) the standardized differenced mean.
struct Problem<'a> {
    spec: &'a SarimaSpec,
    w: Vec<f64>,
    mu0: f64,
    scale: f64,
}

impl Problem<'_> {
    fn arma_dim(&self) -> usize {
        let s = self.spec;
        s.p + s.q + s.seasonal_p + s.seasonal_q
    }

    fn arma_params(&self, x: &[f64]) -> SarimaParams {
        let s = self.spec;
        let mut at = 0;
        let mut take = |n: usize| {
            let part = &x[at..at + n];
            at += n;
            part
        };
        SarimaParams {
            phi: ar_from_unconstrained(take(s.p)),
            theta: ma_from_unconstrained(take(s.q)),
            seasonal_phi: ar_from_unconstrained(take(s.seasonal_p)),
            seasonal_theta: ma_from_unconstrained(take(s.seasonal_q)),
            mu_or_drift: 0.0,
            sigma2: 1.0,
        }
    }

    fn report_constant(&self, mu_w: f64) -> f64 {
        if self.spec.total_differencing() == 0 {
            mu_w
        } else {
            mu_w / self.spec.drift_scale()
        }
    }

    /// Parameters from full coordinates (mean coordinate last when present).
    fn params(&self, x: &[f64]) -> SarimaParams {
        let mut params = self.arma_params(&x[..self.arma_dim()]);
        if self.spec.include_drift {
            params.mu_or_drift = self.report_constant(self.mu0 + x[self.arma_dim()] * self.scale);
        }
        params
    }

    fn centered(&self, params: &SarimaParams) -> Vec<f64> {
        let mu = params.differenced_mean(self.spec);
        self.w.iter().map(|v| v - mu).collect()
    }

    /// Negative concentrated log-likelihood in full coordinates.
    fn objective(&self, x: &[f64]) -> f64 {
        let params = self.params(x);
        let arma = Arma::new(self.spec, &params);
        match likelihood_terms(&arma, &self.centered(&params)) {
            Ok(t) => -t.concentrated(),
            Err(_) => f64::INFINITY,
        }
    }

    /// Parameters with the mean profiled out by GLS; σ² still unset.
    fn profiled(&self, x_arma: &[f64]) -> Result<(SarimaParams, LikelihoodTerms)> {
        let mut params = self.arma_params(x_arma);
        let arma = Arma::new(self.spec, &params);
        if self.spec.include_drift {
            let (mu_w, terms) = profile_mean(&arma, &self.w)?;
            params.mu_or_drift = self.report_constant(mu_w);
            Ok((params, terms))
        } else {
            Ok((params, likelihood_terms(&arma, &self.w)?))
        }
    }

    /// Negative concentrated log-likelihood over the AR/MA coordinates only.
    fn profiled_objective(&self, x_arma: &[f64]) -> f64 {
        match self.profiled(x_arma) {
            Ok((_, t)) => -t.concentrated(),
            Err(_) => f64::INFINITY,
        }
    }

    fn css(&self, x_arma: &[f64]) -> f64 {
        let params = self.arma_params(x_arma);
        let arma = Arma::new(self.spec, &params);
        let mu = if self.spec.include_drift { self.mu0 } else { 0.0 };
        let centered: Vec<f64> = self.w.iter().map(|v| v - mu).collect();
        conditional_ss(&arma, &centered)
    }

    /// Full coordinates for given parameters.
    fn full_coords(&self, x_arma: &[f64], params: &SarimaParams) -> Vec<f64> {
        let mut x = x_arma.to_vec();
        if self.spec.include_drift {
            x.push((params.differenced_mean(self.spec) - self.mu0) / self.scale);
        }
        x
    }

    /// Reported coefficients in label order.
    fn reported(&self, x: &[f64]) -> Vec<f64> {
        self.params(x).coefficients(self.spec)
    }
}

/// Central-difference Hessian with step `1e-4·(1+|x_i|)`.
pub(crate) fn numeric_hessian<F: Fn(&[f64]) -> f64>(f: F, x: &[f64]) -> DMatrix<f64> {
    let k = x.len();
    let h: Vec<f64> = x.iter().map(|v| 1e-4 * (1.0 + v.abs())).collect();
    let f0 = f(x);
    let mut at = x.to_vec();
    let mut eval = |moves: &[(usize, f64)]| {
        for &(i, s) in moves {
            at[i] += s * h[i];
        }
        let v = f(&at);
        at.copy_from_slice(x);
        v
    };
    let mut hess = DMatrix::zeros(k, k);
    for i in 0..k {
        let fp = eval(&[(i, 1.0)]);
        let fm = eval(&[(i, -1.0)]);
        hess[(i, i)] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for j in 0..i {
            let fpp = eval(&[(i, 1.0), (j, 1.0)]);
            let fpm = eval(&[(i, 1.0), (j, -1.0)]);
            let fmp = eval(&[(i, -1.0), (j, 1.0)]);
            let fmm = eval(&[(i, -1.0), (j, -1.0)]);
            let v = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
            hess[(i, j)] = v;
            hess[(j, i)] = v;
        }
    }
    hess
}

/// Central-difference Jacobian of a vector map.
fn numeric_jacobian<F: Fn(&[f64]) -> Vec<f64>>(f: F, x: &[f64]) -> DMatrix<f64> {
    let k = x.len();
    let rows = f(x).len();
    let mut jac = DMatrix::zeros(rows, k);
    let mut at = x.to_vec();
    for j in 0..k {
        let h = 1e-6 * (1.0 + x[j].abs());
        at[j] = x[j] + h;
        let up = f(&at);
        at[j] = x[j] - h;
        let down = f(&at);
        at[j] = x[j];
        for i in 0..rows {
            jac[(i, j)] = (up[i] - down[i]) / (2.0 * h);
        }
    }
    jac
}

fn standard_errors(problem: &Problem<'_>, x: &[f64]) -> Vec<f64> {
    let k = x.len();
    let nan = vec![f64::NAN; k];
    let hess = numeric_hessian(|v| problem.objective(v), x);
    if hess.iter().any(|v| !v.is_finite()) {
        return nan;
    }
    let Some(chol) = hess.cholesky() else {
        return nan;
    };
    let cov_x = chol.inverse();
    let jac = numeric_jacobian(|v| problem.reported(v), x);
    let cov = &jac * cov_x * jac.transpose();
    (0..k)
        .map(|i| {
            let v = cov[(i, i)];
            if v >= 0.0 {
                v.sqrt()
            } else {
                f64::NAN
            }
        })
        .collect()
}

/// Fits `spec` by exact maximum likelihood.
///
/// Starting values come from a conditional-sum-of-squares pass, kept only if
/// it beats the all-zero start. A run that exhausts its restarts returns the
/// best point found with `converged = false`.
pub fn fit_with(spec: &SarimaSpec, series: &TimeSeries, options: &FitOptions) -> Result<SarimaFit> {
    spec.validate()?;
    let w = difference(series.values(), &spec.difference_spec())?;
    let n = w.len();
    let k = spec.n_parameters();
    if n < k + 10 {
        return Err(Error::TooShort {
            needed: k + 10 + spec.difference_spec().lost(),
            got: series.len(),
        });
    }
    let mu0 = mean(&w);
    let sd = sample_sd(&w);
    let constant = w.iter().all(|v| *v == w[0]);
    if constant && (spec.include_drift || w[0] == 0.0) {
        return Err(Error::ZeroVariance);
    }
    let problem = Problem {
        spec,
        mu0,
        scale: if sd > 0.0 { sd } else { 1.0 },
        w,
    };
    let dim = problem.arma_dim();
    let zero = vec![0.0; dim];
    let mut start = zero.clone();
    let mut f_start = problem.profiled_objective(&zero);
    let (p_full, _) = spec.expanded_orders();
    if dim > 0 && n > p_full + k {
        let css_opt = NelderMead {
            max_evals: 2000,
            max_restarts: 0,
            tol: 1e-6,
            ..options.optimizer
        };
        let css = css_opt.minimize(|x| problem.css(x), &zero);
        let f_css = problem.profiled_objective(&css.x);
        if f_css < f_start {
            start = css.x;
            f_start = f_css;
        }
    }
    if !f_start.is_finite() {
        return Err(Error::NonFinite("log-likelihood at the starting values".into()));
    }

    let (x_hat, evaluations, converged) = if dim == 0 {
        (Vec::new(), 1, true)
    } else {
        let min = options.optimizer.minimize(|x| problem.profiled_objective(x), &start);
        (min.x, min.evals, min.converged)
    };
    let (mut params, terms) = problem.profiled(&x_hat)?;
    params.sigma2 = terms.sigma2_hat();
    let ll = terms.concentrated();
    if !ll.is_finite() || params.sigma2.is_nan() || params.sigma2 <= 0.0 {
        return Err(Error::NonFinite("log-likelihood at the optimum".into()));
    }
    let (aic, bic) = information_criteria(ll, k, n)?;
    let n_coef = spec.n_coefficients();
    let std_errors = if options.std_errors && n_coef > 0 {
        standard_errors(&problem, &problem.full_coords(&x_hat, &params))
    } else {
        vec![f64::NAN; n_coef]
    };
    let centered = problem.centered(&params);
    Ok(SarimaFit {
        spec: *spec,
        params,
        std_errors,
        loglik: ll,
        aic,
        bic,
        residuals: terms.standardized_residuals(&centered),
        n_effective: n,
        converged,
        evaluations,
        initial_loglik: -f_start,
        history: series.values().to_vec(),
    })
}

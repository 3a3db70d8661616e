use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub(crate) struct OlsFit {
    pub coef: Vec<f64>,
    pub std_err: Vec<f64>,
    pub residuals: Vec<f64>,
    /// SSR / (n - k).
    pub sigma2: f64,
}

/// Ordinary least squares with classical standard errors. `columns` are the
/// regressors, each of length `y.len()`.
pub(crate) fn ols(y: &[f64], columns: &[Vec<f64>]) -> Result<OlsFit> {
    let n = y.len();
    let k = columns.len();
    if n <= k {
        return Err(Error::TooShort { needed: k + 1, got: n });
    }
    let x = DMatrix::from_fn(n, k, |i, j| columns[j][i]);
    let yv = DVector::from_column_slice(y);
    let xtx = x.transpose() * &x;
    let chol = xtx.clone().cholesky().ok_or(Error::Singular)?;
    // A pivot that keeps almost none of its column's norm means collinearity.
    let l = chol.l_dirty();
    if (0..k).any(|j| l[(j, j)] * l[(j, j)] <= 1e-12 * xtx[(j, j)]) {
        return Err(Error::Singular);
    }
    let beta = chol.solve(&(x.transpose() * &yv));
    let resid = &yv - &x * &beta;
    let ssr = resid.norm_squared();
    let sigma2 = ssr / (n - k) as f64;
    let inv = chol.inverse();
    let std_err = (0..k).map(|j| (sigma2 * inv[(j, j)]).sqrt()).collect();
    if !beta.iter().all(|b| b.is_finite()) {
        return Err(Error::Singular);
    }
    Ok(OlsFit {
        coef: beta.iter().copied().collect(),
        std_err,
        residuals: resid.iter().copied().collect(),
        sigma2,
    })
}

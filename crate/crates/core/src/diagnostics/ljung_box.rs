use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::{PValue, TestResult};
use crate::error::{Error, Result};
use crate::series::acf;

/// Ljung-Box portmanteau test on the first `lags` sample autocorrelations,
/// referred to a chi-squared law with `lags - fitdf` degrees of freedom.
pub fn ljung_box(residuals: &[f64], lags: usize, fitdf: usize) -> Result<TestResult> {
    let n = residuals.len();
    if lags == 0 {
        return Err(Error::InvalidArgument("Ljung-Box needs at least one lag".into()));
    }
    if lags <= fitdf {
        return Err(Error::InvalidArgument(format!(
            "Ljung-Box lag {lags} must exceed fitted parameter count {fitdf}"
        )));
    }
    if lags + 1 > n {
        return Err(Error::TooShort {
            needed: lags + 1,
            got: n,
        });
    }
    let r = acf(residuals, lags)?;
    let nf = n as f64;
    let q = nf
        * (nf + 2.0)
        * (1..=lags)
            .map(|j| r.values[j] * r.values[j] / (nf - j as f64))
            .sum::<f64>();
    let chi = ChiSquared::new((lags - fitdf) as f64).expect("positive degrees of freedom");
    Ok(TestResult::new(
        "Ljung-Box",
        q,
        PValue::exact(chi.sf(q)),
        "no autocorrelation up to the tested lag",
    ))
}

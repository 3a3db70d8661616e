//! Shared inputs for the benchmarks.

use weekcast::io::{parse_csv, Columns};
use weekcast_core::{SarimaParams, SarimaSpec, TimeSeries};

/// The bundled 244-week sample at period 52.
pub fn sample() -> TimeSeries {
    parse_csv(weekcast::SAMPLE_CSV, &Columns::default(), 52).expect("bundled sample parses")
}

/// `(2,0,2)(1,1,1)[52]` with drift and the coefficients that generated the sample.
pub fn sample_model() -> (SarimaSpec, SarimaParams) {
    let spec = SarimaSpec::arima(2, 0, 2).seasonal(1, 1, 1, 52).with_drift(true);
    let params = SarimaParams {
        mu_or_drift: 0.14,
        phi: vec![-0.03, 0.55],
        theta: vec![0.09, -0.58],
        seasonal_phi: vec![-0.11],
        seasonal_theta: vec![-0.42],
        sigma2: 36.0,
    };
    (spec, params)
}

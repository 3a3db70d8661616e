//! Critical-value tables for the unit-root and stationarity tests, and the
//! interpolation that turns a statistic into a (possibly bounded) p-value.

use super::{PValue, UnitRootHypothesis};

/// Sample sizes indexing the rows of the Dickey-Fuller tables.
const DF_SIZES: [f64; 6] = [25.0, 50.0, 100.0, 250.0, 500.0, 100_000.0];

/// Cumulative probabilities for the Dickey-Fuller table columns.
const DF_PROBS: [f64; 8] = [0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99];

// Quantiles of the Dickey-Fuller t-statistic. Fuller (1976), Table 8.5.2;
// reproduced in Hamilton (1994), Table B.6, cases 1, 2 and 4.
const DF_NONE: [[f64; 8]; 6] = [
    [-2.66, -2.26, -1.95, -1.60, 0.92, 1.33, 1.70, 2.16],
    [-2.62, -2.25, -1.95, -1.61, 0.91, 1.31, 1.66, 2.08],
    [-2.60, -2.24, -1.95, -1.61, 0.90, 1.29, 1.64, 2.03],
    [-2.58, -2.23, -1.95, -1.62, 0.89, 1.29, 1.63, 2.01],
    [-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00],
    [-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00],
];

// -3.14 is a tabulated quantile, not an approximation of pi.
#[allow(clippy::approx_constant)]
const DF_CONSTANT: [[f64; 8]; 6] = [
    [-3.75, -3.33, -3.00, -2.63, -0.37, 0.00, 0.34, 0.72],
    [-3.58, -3.22, -2.93, -2.60, -0.40, -0.03, 0.29, 0.66],
    [-3.51, -3.17, -2.89, -2.58, -0.42, -0.05, 0.26, 0.63],
    [-3.46, -3.14, -2.88, -2.57, -0.42, -0.06, 0.24, 0.62],
    [-3.44, -3.13, -2.87, -2.57, -0.43, -0.07, 0.24, 0.61],
    [-3.43, -3.12, -2.86, -2.57, -0.44, -0.07, 0.23, 0.60],
];

const DF_TREND: [[f64; 8]; 6] = [
    [-4.38, -3.95, -3.60, -3.24, -1.14, -0.80, -0.50, -0.15],
    [-4.15, -3.80, -3.50, -3.18, -1.19, -0.87, -0.58, -0.24],
    [-4.04, -3.73, -3.45, -3.15, -1.22, -0.90, -0.62, -0.28],
    [-3.99, -3.69, -3.43, -3.13, -1.23, -0.92, -0.64, -0.31],
    [-3.98, -3.68, -3.42, -3.13, -1.24, -0.93, -0.65, -0.32],
    [-3.96, -3.66, -3.41, -3.12, -1.25, -0.94, -0.66, -0.33],
];

// Upper-tail critical values of the KPSS statistic at 10%, 5%, 2.5%, 1%.
// Kwiatkowski, Phillips, Schmidt & Shin (1992), Table 1.
const KPSS_PROBS: [f64; 4] = [0.10, 0.05, 0.025, 0.01];
const KPSS_LEVEL: [f64; 4] = [0.347, 0.463, 0.574, 0.739];
const KPSS_TREND: [f64; 4] = [0.119, 0.146, 0.176, 0.216];

/// Piecewise-linear interpolation over increasing `xs`, clamped at the ends.
fn interpolate(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    if x <= xs[0] {
        return ys[0];
    }
    let last = xs.len() - 1;
    if x >= xs[last] {
        return ys[last];
    }
    let i = xs.windows(2).position(|w| x < w[1]).unwrap_or(last - 1);
    let t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    ys[i] + t * (ys[i + 1] - ys[i])
}

fn df_table(hypothesis: UnitRootHypothesis) -> &'static [[f64; 8]; 6] {
    match hypothesis {
        UnitRootHypothesis::None => &DF_NONE,
        UnitRootHypothesis::Constant => &DF_CONSTANT,
        UnitRootHypothesis::ConstantAndTrend => &DF_TREND,
    }
}

/// Dickey-Fuller critical values for sample size `n`, one per `DF_PROBS` entry.
pub(crate) fn df_critical_values(hypothesis: UnitRootHypothesis, n: usize) -> [f64; 8] {
    let table = df_table(hypothesis);
    let mut row = [0.0; 8];
    for (j, cell) in row.iter_mut().enumerate() {
        let column: Vec<f64> = table.iter().map(|r| r[j]).collect();
        *cell = interpolate(&DF_SIZES, &column, n as f64);
    }
    row
}

/// Left-tail p-value for a Dickey-Fuller type t-statistic.
pub(crate) fn df_p_value(hypothesis: UnitRootHypothesis, n: usize, statistic: f64) -> PValue {
    let cv = df_critical_values(hypothesis, n);
    if statistic <= cv[0] {
        PValue::at_most(DF_PROBS[0])
    } else if statistic >= cv[7] {
        PValue::at_least(DF_PROBS[7])
    } else {
        PValue::exact(interpolate(&cv, &DF_PROBS, statistic))
    }
}

/// Upper-tail p-value for the KPSS statistic.
pub(crate) fn kpss_p_value(hypothesis: UnitRootHypothesis, statistic: f64) -> PValue {
    let cv = match hypothesis {
        UnitRootHypothesis::ConstantAndTrend => &KPSS_TREND,
        _ => &KPSS_LEVEL,
    };
    if statistic <= cv[0] {
        PValue::at_least(KPSS_PROBS[0])
    } else if statistic >= cv[3] {
        PValue::at_most(KPSS_PROBS[3])
    } else {
        PValue::exact(interpolate(cv, &KPSS_PROBS, statistic))
    }
}

//! Normality tests for model residuals. Mean and variance are always
//! estimated from the sample, so every statistic uses its composite-null
//! reference distribution.

use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

use super::{PValue, TestResult};
use crate::error::{Error, Result};
use crate::series::{mean, sample_sd};

const NORMAL_NULL: &str = "data are normally distributed";

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("valid parameters")
}

fn sorted_checked(x: &[f64], min_n: usize) -> Result<Vec<f64>> {
    if x.len() < min_n {
        return Err(Error::TooShort {
            needed: min_n,
            got: x.len(),
        });
    }
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!("residual {i}")));
    }
    let mut s = x.to_vec();
    s.sort_by(f64::total_cmp);
    if s[s.len() - 1] - s[0] <= 1e-12 * s[0].abs().max(1.0) {
        return Err(Error::ZeroVariance);
    }
    Ok(s)
}

fn standardized(sorted: &[f64]) -> Vec<f64> {
    let m = mean(sorted);
    let sd = sample_sd(sorted);
    sorted.iter().map(|v| (v - m) / sd).collect()
}

fn poly(coefs: &[f64], x: f64) -> f64 {
    coefs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Shapiro-Wilk W with Royston's (1995) coefficient and p-value
/// approximations, valid for 3 <= n <= 5000.
pub fn shapiro_wilk(x: &[f64]) -> Result<TestResult> {
    let s = sorted_checked(x, 3)?;
    let n = s.len();
    if n > 5000 {
        return Err(Error::InvalidArgument(
            "Shapiro-Wilk approximation is limited to n <= 5000".into(),
        ));
    }
    let nf = n as f64;
    let half = n / 2;
    let norm = std_normal();

    // a[i] for i < half pairs the i-th smallest with the i-th largest.
    let mut a = vec![0.0; half];
    if n == 3 {
        a[0] = std::f64::consts::FRAC_1_SQRT_2;
    } else {
        const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
        const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
        let m: Vec<f64> = (1..=half)
            .map(|i| norm.inverse_cdf((i as f64 - 0.375) / (nf + 0.25)))
            .collect();
        let summ2 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
        let ssumm2 = summ2.sqrt();
        let rsn = 1.0 / nf.sqrt();
        let a1 = poly(&C1, rsn) - m[0] / ssumm2;
        let (first_free, fac) = if n > 5 {
            let a2 = -m[1] / ssumm2 + poly(&C2, rsn);
            a[1] = a2;
            let fac = ((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2)).sqrt();
            (2, fac)
        } else {
            let fac = ((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1)).sqrt();
            (1, fac)
        };
        a[0] = a1;
        for i in first_free..half {
            a[i] = -m[i] / fac;
        }
    }

    let xbar = mean(&s);
    let ss: f64 = s.iter().map(|v| (v - xbar) * (v - xbar)).sum();
    let numer: f64 = (0..half).map(|i| a[i] * (s[n - 1 - i] - s[i])).sum();
    let w = (numer * numer / ss).min(1.0);

    let p = if n == 3 {
        let pw = 6.0 / std::f64::consts::PI * (w.sqrt().asin() - std::f64::consts::PI / 3.0);
        pw.max(0.0)
    } else {
        let y = (1.0 - w).ln();
        let lnn = nf.ln();
        if n <= 11 {
            let gamma = -2.273 + 0.459 * nf;
            if y >= gamma {
                1e-99
            } else {
                let y = -(gamma - y).ln();
                let mu = poly(&[0.544, -0.39978, 0.025054, -6.714e-4], nf);
                let sigma = poly(&[1.3822, -0.77857, 0.062767, -0.0020322], nf).exp();
                norm.sf((y - mu) / sigma)
            }
        } else {
            let mu = poly(&[-1.5861, -0.31082, -0.083751, 0.0038915], lnn);
            let sigma = poly(&[-0.4803, -0.082676, 0.0030302], lnn).exp();
            norm.sf((y - mu) / sigma)
        }
    };
    Ok(TestResult::new("Shapiro-Wilk", w, PValue::exact(p), NORMAL_NULL))
}

/// Shapiro-Francia W' with Royston's (1993) log-normal approximation,
/// valid for 5 <= n <= 5000.
pub fn shapiro_francia(x: &[f64]) -> Result<TestResult> {
    let s = sorted_checked(x, 5)?;
    let n = s.len();
    if n > 5000 {
        return Err(Error::InvalidArgument(
            "Shapiro-Francia approximation is limited to n <= 5000".into(),
        ));
    }
    let nf = n as f64;
    let norm = std_normal();
    let m: Vec<f64> = (1..=n)
        .map(|i| norm.inverse_cdf((i as f64 - 0.375) / (nf + 0.25)))
        .collect();
    let w = correlation(&s, &m).powi(2);
    let u = nf.ln();
    let v = u.ln();
    let mu = -1.2725 + 1.0521 * (v - u);
    let sigma = 1.0308 - 0.26758 * (v + 2.0 / u);
    let z = ((1.0 - w).ln() - mu) / sigma;
    Ok(TestResult::new(
        "Shapiro-Francia",
        w,
        PValue::exact(norm.sf(z)),
        NORMAL_NULL,
    ))
}

fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let (ma, mb) = (mean(a), mean(b));
    let mut sab = 0.0;
    let mut saa = 0.0;
    let mut sbb = 0.0;
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    sab / (saa * sbb).sqrt()
}

/// Anderson-Darling A² with the Stephens small-sample modification for
/// estimated mean and variance.
pub fn anderson_darling(x: &[f64]) -> Result<TestResult> {
    let s = sorted_checked(x, 8)?;
    let n = s.len();
    let nf = n as f64;
    let z = standardized(&s);
    let norm = std_normal();
    let sum: f64 = (0..n)
        .map(|i| {
            let ln_cdf = norm.cdf(z[i]).ln();
            let ln_sf = norm.sf(z[n - 1 - i]).ln();
            (2.0 * i as f64 + 1.0) * (ln_cdf + ln_sf)
        })
        .sum();
    let a2 = -nf - sum / nf;
    let aa = (1.0 + 0.75 / nf + 2.25 / (nf * nf)) * a2;
    let p = if aa < 0.2 {
        1.0 - (-13.436 + 101.14 * aa - 223.73 * aa * aa).exp()
    } else if aa < 0.34 {
        1.0 - (-8.318 + 42.796 * aa - 59.938 * aa * aa).exp()
    } else if aa < 0.6 {
        (0.9177 - 4.279 * aa - 1.38 * aa * aa).exp()
    } else if aa < 10.0 {
        (1.2937 - 5.709 * aa + 0.0186 * aa * aa).exp()
    } else {
        3.7e-24
    };
    Ok(TestResult::new("Anderson-Darling", a2, PValue::exact(p), NORMAL_NULL))
}

/// Cramér-von Mises W² with Stephens' modification for estimated parameters.
pub fn cramer_von_mises(x: &[f64]) -> Result<TestResult> {
    let s = sorted_checked(x, 8)?;
    let nf = s.len() as f64;
    let z = standardized(&s);
    let norm = std_normal();
    let w2 = 1.0 / (12.0 * nf)
        + z.iter()
            .enumerate()
            .map(|(i, v)| (norm.cdf(*v) - (2.0 * i as f64 + 1.0) / (2.0 * nf)).powi(2))
            .sum::<f64>();
    let ww = (1.0 + 0.5 / nf) * w2;
    let p = if ww < 0.0275 {
        1.0 - (-13.953 + 775.5 * ww - 12542.61 * ww * ww).exp()
    } else if ww < 0.051 {
        1.0 - (-5.903 + 179.546 * ww - 1515.29 * ww * ww).exp()
    } else if ww < 0.092 {
        (0.886 - 31.62 * ww + 10.897 * ww * ww).exp()
    } else if ww < 1.1 {
        (1.111 - 34.242 * ww + 12.832 * ww * ww).exp()
    } else {
        7.37e-10
    };
    Ok(TestResult::new("Cramer-von Mises", w2, PValue::exact(p), NORMAL_NULL))
}

/// Kolmogorov-Smirnov distance to the fitted normal, with the Lilliefors
/// p-value (Dallal-Wilkinson approximation, Stephens' formula above 0.1).
pub fn lilliefors(x: &[f64]) -> Result<TestResult> {
    let s = sorted_checked(x, 5)?;
    let n = s.len();
    let nf = n as f64;
    let z = standardized(&s);
    let norm = std_normal();
    let mut d = 0.0f64;
    for (i, v) in z.iter().enumerate() {
        let p = norm.cdf(*v);
        d = d.max((i as f64 + 1.0) / nf - p).max(p - i as f64 / nf);
    }
    let (kd, nd) = if n <= 100 {
        (d, nf)
    } else {
        (d * (nf / 100.0).powf(0.49), 100.0)
    };
    let mut p = (-7.01256 * kd * kd * (nd + 2.78019) + 2.99587 * kd * (nd + 2.78019).sqrt() - 0.122119
        + 0.974598 / nd.sqrt()
        + 1.67997 / nd)
        .exp();
    if p > 0.1 {
        let kk = (nf.sqrt() - 0.01 + 0.85 / nf.sqrt()) * d;
        p = if kk <= 0.302 {
            1.0
        } else if kk <= 0.5 {
            2.76773 - 19.828315 * kk + 80.709644 * kk.powi(2) - 138.55152 * kk.powi(3) + 81.218052 * kk.powi(4)
        } else if kk <= 0.9 {
            -4.901232 + 40.662806 * kk - 97.490286 * kk.powi(2) + 94.029866 * kk.powi(3) - 32.355711 * kk.powi(4)
        } else if kk <= 1.31 {
            6.198765 - 19.558097 * kk + 23.186922 * kk.powi(2) - 12.234627 * kk.powi(3) + 2.423045 * kk.powi(4)
        } else {
            0.0
        };
    }
    Ok(TestResult::new(
        "Kolmogorov-Smirnov (Lilliefors)",
        d,
        PValue::exact(p),
        NORMAL_NULL,
    ))
}

/// Pearson chi-squared goodness of fit with `ceil(2 n^(2/5))` classes that
/// are equiprobable under the fitted normal; two degrees of freedom are
/// removed for the estimated parameters.
pub fn pearson_chi_squared(x: &[f64]) -> Result<TestResult> {
    let s = sorted_checked(x, 8)?;
    let nf = s.len() as f64;
    let classes = (2.0 * nf.powf(0.4)).ceil() as usize;
    let z = standardized(&s);
    let norm = std_normal();
    let mut counts = vec![0usize; classes];
    for v in &z {
        let bin = ((classes as f64) * norm.cdf(*v)).floor() as usize;
        counts[bin.min(classes - 1)] += 1;
    }
    let expected = nf / classes as f64;
    let stat: f64 = counts.iter().map(|c| (*c as f64 - expected).powi(2) / expected).sum();
    let df = classes.saturating_sub(3).max(1);
    let chi = ChiSquared::new(df as f64).expect("positive degrees of freedom");
    Ok(TestResult::new(
        "Pearson chi-square",
        stat,
        PValue::exact(chi.sf(stat)),
        NORMAL_NULL,
    ))
}

/// All six normality tests, in a fixed order: Anderson-Darling,
/// Shapiro-Wilk, Cramér-von Mises, Kolmogorov-Smirnov (Lilliefors),
/// Pearson chi-square, Shapiro-Francia.
pub fn normality_battery(residuals: &[f64]) -> Result<Vec<TestResult>> {
    if residuals.len() < 8 {
        return Err(Error::TooShort {
            needed: 8,
            got: residuals.len(),
        });
    }
    Ok(vec![
        anderson_darling(residuals)?,
        shapiro_wilk(residuals)?,
        cramer_von_mises(residuals)?,
        lilliefors(residuals)?,
        pearson_chi_squared(residuals)?,
        shapiro_francia(residuals)?,
    ])
}

//! Order selection by information criterion and the holdout comparison of
//! ARIMA against the baseline forecasters.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baseline::{
    drift_forecast, holt_forecast, mean_forecast, naive_forecast, seasonal_naive_forecast, ses_forecast, Smoothing,
};
use crate::diagnostics::{kpss_test, UnitRootHypothesis};
use crate::error::{Error, Result};
use crate::sarima::{fit_with, forecast, FitOptions, SarimaFit, SarimaSpec};
use crate::series::TimeSeries;

/// Candidate-count ceiling for exhaustive search unless forced.
pub const EXHAUSTIVE_LIMIT: usize = 5000;

/// Upper bounds on the model orders considered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_p: usize,
    pub max_q: usize,
    pub max_d: usize,
    pub max_seasonal_p: usize,
    pub max_seasonal_q: usize,
    pub max_seasonal_d: usize,
    pub period: usize,
    pub try_drift: bool,
}

impl SearchBounds {
    /// p, q ≤ 24, d ≤ 4, P, Q, D ≤ 1.
    pub fn new(period: usize) -> Self {
        Self {
            max_p: 24,
            max_q: 24,
            max_d: 4,
            max_seasonal_p: 1,
            max_seasonal_q: 1,
            max_seasonal_d: 1,
            period,
            try_drift: true,
        }
    }

    fn seasonal(&self) -> bool {
        self.period >= 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Aic,
    Bic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    Stepwise,
    /// Every spec within bounds; `force` lifts the candidate-count guard.
    Exhaustive {
        force: bool,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct SelectionOptions {
    pub criterion: Criterion,
    pub strategy: SearchStrategy,
    /// Evaluate each batch of candidates on the rayon pool.
    pub parallel: bool,
    pub fit: FitOptions,
}

impl Default for SelectionOptions {
    fn default() -> Self {
        Self {
            criterion: Criterion::Aic,
            strategy: SearchStrategy::Stepwise,
            parallel: true,
            fit: FitOptions {
                std_errors: false,
                ..FitOptions::default()
            },
        }
    }
}

/// Criterion values of one candidate; failed fits carry infinite criteria.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateScore {
    pub spec: SarimaSpec,
    pub aic: f64,
    pub bic: f64,
    pub converged: bool,
}

impl CandidateScore {
    pub fn value(&self, criterion: Criterion) -> f64 {
        match criterion {
            Criterion::Aic => self.aic,
            Criterion::Bic => self.bic,
        }
    }
}

/// Converged first, then lower criterion, fewer coefficients, and spec order.
pub fn rank_order(a: &CandidateScore, b: &CandidateScore, criterion: Criterion) -> Ordering {
    b.converged
        .cmp(&a.converged)
        .then_with(|| a.value(criterion).total_cmp(&b.value(criterion)))
        .then_with(|| a.spec.n_coefficients().cmp(&b.spec.n_coefficients()))
        .then_with(|| a.spec.cmp(&b.spec))
}

/// Outcome of [`select_sarima`].
#[derive(Debug, Clone)]
pub struct Selection {
    /// Every evaluated candidate in rank order.
    pub ranked: Vec<CandidateScore>,
    /// The winner refitted with standard errors.
    pub best: SarimaFit,
}

/// Chooses `(d, D)`: seasonal differences while a level KPSS test rejects at
/// 5% (up to `max_seasonal_d`), then ordinary differences the same way.
pub fn choose_differencing(train: &TimeSeries, bounds: &SearchBounds) -> (usize, usize) {
    let rejects = |x: &[f64]| {
        kpss_test(x, UnitRootHypothesis::Constant)
            .map(|r| r.rejected_at_05)
            .unwrap_or(false)
    };
    let mut x = train.values().to_vec();
    let mut seasonal_d = 0;
    if bounds.seasonal() {
        while seasonal_d < bounds.max_seasonal_d && x.len() > bounds.period + 10 && rejects(&x) {
            x = x.windows(bounds.period + 1).map(|w| w[bounds.period] - w[0]).collect();
            seasonal_d += 1;
        }
    }
    let mut d = 0;
    while d < bounds.max_d && x.len() > 11 && rejects(&x) {
        x = x.windows(2).map(|w| w[1] - w[0]).collect();
        d += 1;
    }
    (d, seasonal_d)
}

struct Search<'a> {
    train: &'a TimeSeries,
    bounds: &'a SearchBounds,
    options: &'a SelectionOptions,
    d: usize,
    seasonal_d: usize,
    scores: BTreeMap<SarimaSpec, CandidateScore>,
}

impl Search<'_> {
    fn drift_options(&self) -> Vec<bool> {
        if self.bounds.try_drift && self.d + self.seasonal_d <= 1 {
            vec![false, true]
        } else {
            vec![false]
        }
    }

    fn spec(&self, p: usize, q: usize, sp: usize, sq: usize, drift: bool) -> SarimaSpec {
        let base = SarimaSpec::arima(p, self.d, q).with_drift(drift);
        if self.bounds.seasonal() {
            base.seasonal(sp, self.seasonal_d, sq, self.bounds.period)
        } else {
            base
        }
    }

    fn in_bounds(&self, s: &SarimaSpec) -> bool {
        let b = self.bounds;
        s.p <= b.max_p && s.q <= b.max_q && s.seasonal_p <= b.max_seasonal_p && s.seasonal_q <= b.max_seasonal_q
    }

    fn score(&self, spec: &SarimaSpec) -> CandidateScore {
        match fit_with(spec, self.train, &self.options.fit) {
            Ok(f) => CandidateScore {
                spec: *spec,
                aic: f.aic,
                bic: f.bic,
                converged: f.converged,
            },
            Err(_) => CandidateScore {
                spec: *spec,
                aic: f64::INFINITY,
                bic: f64::INFINITY,
                converged: false,
            },
        }
    }

    /// Scores the specs not seen before; results are merged in input order.
    fn evaluate(&mut self, specs: Vec<SarimaSpec>) {
        let mut fresh: Vec<SarimaSpec> = Vec::new();
        for s in specs {
            if self.in_bounds(&s) && !self.scores.contains_key(&s) && !fresh.contains(&s) {
                fresh.push(s);
            }
        }
        let results: Vec<CandidateScore> = if self.options.parallel {
            fresh.par_iter().map(|s| self.score(s)).collect()
        } else {
            fresh.iter().map(|s| self.score(s)).collect()
        };
        for r in results {
            self.scores.insert(r.spec, r);
        }
    }

    fn best(&self) -> Option<CandidateScore> {
        self.scores
            .values()
            .min_by(|a, b| rank_order(a, b, self.options.criterion))
            .cloned()
    }

    fn neighbours(&self, s: &SarimaSpec) -> Vec<SarimaSpec> {
        let step = |v: usize, delta: i32| -> Option<usize> {
            let n = v as i32 + delta;
            (n >= 0).then_some(n as usize)
        };
        let mut moves: Vec<(i32, i32, i32, i32)> = Vec::new();
        for delta in [-1, 1] {
            moves.push((delta, 0, 0, 0));
            moves.push((0, delta, 0, 0));
            moves.push((delta, delta, 0, 0));
            if self.bounds.seasonal() {
                moves.push((0, 0, delta, 0));
                moves.push((0, 0, 0, delta));
                moves.push((0, 0, delta, delta));
            }
        }
        let mut out = Vec::new();
        for (dp, dq, dsp, dsq) in moves {
            if let (Some(p), Some(q), Some(sp), Some(sq)) = (
                step(s.p, dp),
                step(s.q, dq),
                step(s.seasonal_p, dsp),
                step(s.seasonal_q, dsq),
            ) {
                out.push(self.spec(p, q, sp, sq, s.include_drift));
            }
        }
        if self.drift_options().len() == 2 {
            out.push(s.with_drift(!s.include_drift));
        }
        out
    }

    fn stepwise(&mut self) {
        let mut starts = Vec::new();
        let seasonal_starts: &[(usize, usize)] = if self.bounds.seasonal() {
            &[(0, 0), (1, 1)]
        } else {
            &[(0, 0)]
        };
        for (p, q) in [(0, 0), (1, 1), (2, 2)] {
            for &(sp, sq) in seasonal_starts {
                for drift in self.drift_options() {
                    starts.push(self.spec(p, q, sp, sq, drift));
                }
            }
        }
        self.evaluate(starts);
        let Some(mut best) = self.best() else { return };
        loop {
            self.evaluate(self.neighbours(&best.spec));
            let candidate = self.best().expect("scores are nonempty");
            if candidate.spec == best.spec {
                break;
            }
            best = candidate;
        }
    }

    fn exhaustive(&mut self, force: bool) -> Result<()> {
        let b = self.bounds;
        let (sp_max, sq_max) = if b.seasonal() {
            (b.max_seasonal_p, b.max_seasonal_q)
        } else {
            (0, 0)
        };
        let drift = self.drift_options();
        let count = (b.max_p + 1) * (b.max_q + 1) * (sp_max + 1) * (sq_max + 1) * drift.len();
        if count > EXHAUSTIVE_LIMIT && !force {
            return Err(Error::GridTooLarge {
                count,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let mut specs = Vec::with_capacity(count);
        for p in 0..=b.max_p {
            for q in 0..=b.max_q {
                for sp in 0..=sp_max {
                    for sq in 0..=sq_max {
                        for &dr in &drift {
                            specs.push(self.spec(p, q, sp, sq, dr));
                        }
                    }
                }
            }
        }
        self.evaluate(specs);
        Ok(())
    }
}

/// Selects a seasonal ARIMA order for `train`.
///
/// Differencing orders are fixed first by [`choose_differencing`]; the AR and
/// MA orders are then searched stepwise or exhaustively. Candidates that fail
/// to fit are ranked last with infinite criteria.
pub fn select_sarima(train: &TimeSeries, bounds: &SearchBounds, options: &SelectionOptions) -> Result<Selection> {
    if train.is_constant() {
        return Err(Error::ZeroVariance);
    }
    let (d, seasonal_d) = choose_differencing(train, bounds);
    let mut search = Search {
        train,
        bounds,
        options,
        d,
        seasonal_d,
        scores: BTreeMap::new(),
    };
    match options.strategy {
        SearchStrategy::Stepwise => search.stepwise(),
        SearchStrategy::Exhaustive { force } => search.exhaustive(force)?,
    }
    let mut ranked: Vec<CandidateScore> = search.scores.into_values().collect();
    ranked.sort_by(|a, b| rank_order(a, b, options.criterion));
    let winner = ranked
        .first()
        .filter(|c| c.converged)
        .ok_or(Error::NoConvergedCandidate)?;
    let best = fit_with(
        &winner.spec,
        train,
        &FitOptions {
            std_errors: true,
            ..options.fit
        },
    )?;
    Ok(Selection { ranked, best })
}

/// Holdout accuracy of a point forecast.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HoldoutErrors {
    /// Σ |actual - predicted|.
    pub sum_of_error: f64,
    pub mae: f64,
    pub rmse: f64,
}

pub fn holdout_errors(actual: &[f64], predicted: &[f64]) -> Result<HoldoutErrors> {
    if actual.len() != predicted.len() {
        return Err(Error::InvalidArgument(format!(
            "actual has {} values, predicted has {}",
            actual.len(),
            predicted.len()
        )));
    }
    if actual.is_empty() {
        return Err(Error::InvalidArgument("holdout is empty".into()));
    }
    let n = actual.len() as f64;
    let mut abs = 0.0;
    let mut sq = 0.0;
    for (a, p) in actual.iter().zip(predicted) {
        abs += (a - p).abs();
        sq += (a - p) * (a - p);
    }
    Ok(HoldoutErrors {
        sum_of_error: abs,
        mae: abs / n,
        rmse: (sq / n).sqrt(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub method: String,
    pub sum_of_error: f64,
    pub mae: f64,
    pub rmse: f64,
    pub forecast: Vec<f64>,
}

/// Holdout comparison, rows ascending by sum of absolute errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub winner: String,
    /// Model behind the ARIMA row; `None` for a constant training series or
    /// when no candidate converged (the row then has infinite errors).
    pub arima_spec: Option<SarimaSpec>,
    /// Ranked candidates from the ARIMA search; empty when no search ran.
    pub candidates: Vec<CandidateScore>,
}

/// Scores ARIMA (stepwise AIC selection) and the six baselines on `test`.
pub fn compare_methods(
    train: &TimeSeries,
    test: &[f64],
    bounds: &SearchBounds,
    options: &SelectionOptions,
) -> Result<ComparisonReport> {
    let h = test.len();
    if h == 0 {
        return Err(Error::InvalidArgument("holdout is empty".into()));
    }
    let (arima_point, arima_spec, candidates) = if train.is_constant() {
        (vec![train.last(); h], None, Vec::new())
    } else {
        match select_sarima(train, bounds, options) {
            Ok(sel) => (forecast(&sel.best, h, &[0.95])?.point, Some(sel.best.spec), sel.ranked),
            // Scored as a failed method rather than aborting the comparison.
            Err(Error::NoConvergedCandidate) => (vec![f64::NAN; h], None, Vec::new()),
            Err(e) => return Err(e),
        }
    };
    let forecasts = vec![
        ("ARIMA".to_string(), arima_point),
        (
            "HOLT".to_string(),
            holt_forecast(train, h, Smoothing::Auto, Smoothing::Auto)?.point,
        ),
        ("SES".to_string(), ses_forecast(train, h, Smoothing::Auto)?.point),
        ("MEAN".to_string(), mean_forecast(train, h)?.point),
        ("DRIFT".to_string(), drift_forecast(train, h)?.point),
        ("NAIVE".to_string(), naive_forecast(train, h)?.point),
        ("SN".to_string(), seasonal_naive_forecast(train, h)?.point),
    ];
    let mut rows = Vec::with_capacity(forecasts.len());
    for (method, point) in forecasts {
        let mut e = holdout_errors(test, &point)?;
        if e.sum_of_error.is_nan() {
            e = HoldoutErrors {
                sum_of_error: f64::INFINITY,
                mae: f64::INFINITY,
                rmse: f64::INFINITY,
            };
        }
        rows.push(ComparisonRow {
            method,
            sum_of_error: e.sum_of_error,
            mae: e.mae,
            rmse: e.rmse,
            forecast: point,
        });
    }
    rows.sort_by(|a, b| {
        a.sum_of_error
            .total_cmp(&b.sum_of_error)
            .then_with(|| a.method.cmp(&b.method))
    });
    let winner = rows[0].method.clone();
    Ok(ComparisonReport {
        rows,
        winner,
        arima_spec,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn holdout_examples() {
        let e = holdout_errors(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!((e.sum_of_error, e.mae, e.rmse), (0.0, 0.0, 0.0));
        let e = holdout_errors(&[1.0, 2.0], &[2.0, 4.0]).unwrap();
        assert_eq!(e.sum_of_error, 3.0);
        assert_eq!(e.mae, 1.5);
        assert_eq!(e.rmse, 2.5f64.sqrt());
        assert!(holdout_errors(&[1.0], &[1.0, 2.0]).is_err());
        assert!(holdout_errors(&[], &[]).is_err());
    }

    #[test]
    fn ranking_puts_nonconverged_last() {
        let mk = |p, aic, converged| CandidateScore {
            spec: SarimaSpec::arima(p, 0, 0),
            aic,
            bic: aic,
            converged,
        };
        let mut v = [
            mk(0, 10.0, false),
            mk(1, 12.0, true),
            mk(2, 12.0, true),
            mk(3, 11.0, true),
        ];
        v.sort_by(|a, b| rank_order(a, b, Criterion::Aic));
        let order: Vec<usize> = v.iter().map(|c| c.spec.p).collect();
        assert_eq!(order, vec![3, 1, 2, 0]);
    }

    #[test]
    fn exhaustive_guard() {
        let train = TimeSeries::new((0..100).map(|i| ((i * 31) % 17) as f64).collect(), 4).unwrap();
        let opts = SelectionOptions {
            strategy: SearchStrategy::Exhaustive { force: false },
            ..SelectionOptions::default()
        };
        let bounds = SearchBounds {
            max_p: 40,
            max_q: 40,
            ..SearchBounds::new(4)
        };
        let err = select_sarima(&train, &bounds, &opts).unwrap_err();
        assert!(matches!(err, Error::GridTooLarge { .. }));
    }

    #[test]
    fn constant_split_ties_in_name_order() {
        let train = TimeSeries::new(vec![5.0; 20], 4).unwrap();
        let report = compare_methods(&train, &[5.0; 6], &SearchBounds::new(4), &SelectionOptions::default()).unwrap();
        let names: Vec<&str> = report.rows.iter().map(|r| r.method.as_str()).collect();
        assert_eq!(names, vec!["ARIMA", "DRIFT", "HOLT", "MEAN", "NAIVE", "SES", "SN"]);
        assert!(report.rows.iter().all(|r| r.sum_of_error == 0.0));
        assert_eq!(report.winner, "ARIMA");
    }

    #[test]
    fn sawtooth_is_won_by_seasonal_naive() {
        let v: Vec<f64> = (0..40).map(|i| [1.0, 3.0, 7.0, 2.0][i % 4]).collect();
        let train = TimeSeries::new(v[..32].to_vec(), 4).unwrap();
        let bounds = SearchBounds {
            max_p: 2,
            max_q: 2,
            ..SearchBounds::new(4)
        };
        let report = compare_methods(&train, &v[32..], &bounds, &SelectionOptions::default()).unwrap();
        let sn = report.rows.iter().find(|r| r.method == "SN").unwrap();
        assert_eq!(sn.sum_of_error, 0.0);
        assert_eq!(report.rows[0].sum_of_error, 0.0);
        assert!(report.rows.windows(2).all(|w| w[0].sum_of_error <= w[1].sum_of_error));
    }

    proptest! {
        #[test]
        fn holdout_error_properties(
            pairs in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 1..50)
        ) {
            let (a, p): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
            let e = holdout_errors(&a, &p).unwrap();
            prop_assert!(e.sum_of_error >= 0.0);
            prop_assert!(e.rmse + 1e-12 >= e.mae);
            prop_assert_eq!(e.sum_of_error == 0.0, a == p);
        }
    }
}

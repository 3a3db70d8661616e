//! Acceptance gate: one PASS/FAIL/SKIP line per criterion.
//!
//! Criteria 1-3 need the real admissions export; point `WEEKCAST_REAL_DATA`
//! at it (optionally with `WEEKCAST_DATE_COLUMN` / `WEEKCAST_VALUE_COLUMN`).

use std::process::Command;
use std::time::Instant;

use serde_json::Value;
use weekcast::io::{parse_csv, Columns};
use weekcast_core::diagnostics::{
    adf_test, anderson_darling, cramer_von_mises, kpss_test, lilliefors, ljung_box, pearson_chi_squared, pp_test,
    shapiro_francia, shapiro_wilk, LagOrder, TestResult, UnitRootHypothesis,
};
use weekcast_core::{
    acf, difference, fit, forecast, information_criteria, loglik, select_sarima, simulate, undifference,
    DifferenceSpec, Result as CoreResult, SarimaParams, SarimaSpec, SearchBounds, SelectionOptions, TimeSeries,
};

#[derive(Clone, Copy, PartialEq)]
enum Status {
    Pass,
    Fail,
    Skip,
}

struct Outcome {
    status: Status,
    detail: String,
}

fn pass_if(ok: bool, detail: String) -> Outcome {
    Outcome {
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn weekcast(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_weekcast"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

/// Global flags selecting the real dataset, or `None` when it is absent.
fn real_data_args() -> Option<Vec<String>> {
    let path = std::env::var("WEEKCAST_REAL_DATA").ok()?;
    if !std::path::Path::new(&path).exists() {
        return None;
    }
    let mut args = vec!["--real-data".to_string(), path];
    if let Ok(c) = std::env::var("WEEKCAST_DATE_COLUMN") {
        args.extend(["--date-column".into(), c]);
    }
    if let Ok(c) = std::env::var("WEEKCAST_VALUE_COLUMN") {
        args.extend(["--value-column".into(), c]);
    }
    Some(args)
}

fn with_real<'a>(extra: &'a [String], args: &[&'a str]) -> Vec<&'a str> {
    let mut all = args.to_vec();
    all.extend(extra.iter().map(String::as_str));
    all
}

fn skip_without_data() -> Outcome {
    Outcome {
        status: Status::Skip,
        detail: "WEEKCAST_REAL_DATA not set".into(),
    }
}

fn criterion_1_table_ordering() -> Outcome {
    let Some(extra) = real_data_args() else {
        return skip_without_data();
    };
    let doc = match weekcast(&with_real(&extra, &["compare", "--train-len", "200"])) {
        Ok(d) => d,
        Err(e) => return pass_if(false, e),
    };
    let rows = doc["comparison"]["rows"].as_array().cloned().unwrap_or_default();
    let pairs: Vec<(String, f64)> = rows
        .iter()
        .map(|r| {
            (
                r["method"].as_str().unwrap_or("?").to_string(),
                r["sum_of_error"].as_f64().unwrap_or(f64::INFINITY),
            )
        })
        .collect();
    let order: Vec<&str> = pairs.iter().map(|(m, _)| m.as_str()).collect();
    let ok = pairs.len() == 7
        && pairs[0].0 == "ARIMA"
        && pairs[0].1 < pairs[1].1
        && pairs[6].0 == "SN"
        && pairs[5].1 < pairs[6].1;
    let full = order == ["ARIMA", "HOLT", "SES", "MEAN", "DRIFT", "NAIVE", "SN"];
    pass_if(
        ok,
        format!(
            "order {order:?}; full published order {}",
            if full { "matched" } else { "not matched" }
        ),
    )
}

fn criterion_2_reference_model() -> Outcome {
    let Some(extra) = real_data_args() else {
        return skip_without_data();
    };
    let args = with_real(
        &extra,
        &[
            "fit",
            "--order",
            "2,0,2",
            "--seasonal",
            "1,1,1",
            "--drift",
            "--train-len",
            "200",
        ],
    );
    let doc = match weekcast(&args) {
        Ok(d) => d,
        Err(e) => return pass_if(false, e),
    };
    let m = &doc["model"];
    let aic = m["aic"].as_f64().unwrap_or(f64::NAN);
    let bic = m["bic"].as_f64().unwrap_or(f64::NAN);
    let within = |x: f64, target: f64| (x - target).abs() <= 0.03 * target;
    let shape = m["labels"].as_array().map_or(0, Vec::len) == 7 && m["std_errors"].as_array().map_or(0, Vec::len) == 7;
    let converged = m["converged"].as_bool() == Some(true);
    pass_if(
        converged && shape && within(aic, 1528.0) && within(bic, 1553.0),
        format!("converged={converged} aic={aic} (1528 +-3%) bic={bic} (1553 +-3%) table_shape_ok={shape}"),
    )
}

fn criterion_3_diagnostic_directions() -> Outcome {
    let Some(extra) = real_data_args() else {
        return skip_without_data();
    };
    let doc = match weekcast(&with_real(&extra, &["report"])) {
        Ok(d) => d,
        Err(e) => return pass_if(false, e),
    };
    let tests = doc["diagnostics"].as_array().cloned().unwrap_or_default();
    let find = |target: &str, name: &str| {
        tests
            .iter()
            .find(|t| t["target"] == target && t["test"].as_str().is_some_and(|n| n.starts_with(name)))
            .map(|t| t["rejected_at_05"].as_bool() == Some(true))
    };
    let normality = [
        "Anderson-Darling",
        "Shapiro-Wilk",
        "Cramer-von Mises",
        "Kolmogorov-Smirnov",
        "Pearson",
        "Shapiro-Francia",
    ];
    let mut wrong = Vec::new();
    for (target, name, want_reject) in [
        ("series", "Augmented Dickey-Fuller", true),
        ("series", "Phillips-Perron", true),
        ("series", "KPSS", false),
        ("residuals", "Ljung-Box", false),
    ]
    .into_iter()
    .chain(normality.iter().map(|n| ("residuals", *n, true)))
    {
        if find(target, name) != Some(want_reject) {
            wrong.push(name);
        }
    }
    pass_if(wrong.is_empty(), format!("direction mismatches: {wrong:?}"))
}

fn criterion_4_recovery() -> Outcome {
    // AR and MA roots are kept well apart: near-cancelling pairs such as
    // (0.4, -0.3) are weakly identified and Hessian intervals under-cover.
    let cases: Vec<(SarimaSpec, SarimaParams)> = vec![
        (SarimaSpec::arima(1, 0, 0), params(&[0.6], &[], &[], &[])),
        (SarimaSpec::arima(0, 0, 1), params(&[], &[0.5], &[], &[])),
        (SarimaSpec::arima(1, 0, 1), params(&[0.5], &[0.3], &[], &[])),
        (SarimaSpec::arima(1, 1, 1), params(&[0.5], &[0.3], &[], &[])),
        (
            SarimaSpec::arima(0, 1, 1).seasonal(0, 1, 1, 4),
            params(&[], &[-0.4], &[], &[-0.6]),
        ),
    ];
    let mut worst = (1.0, String::new());
    let mut failures = 0;
    for (spec, truth) in &cases {
        let true_coefs = truth.coefficients(spec);
        let mut covered = vec![0usize; true_coefs.len()];
        for seed in 0..20u64 {
            let s = simulate(spec, truth, 500, 4000 + seed).expect("valid model");
            let Ok(f) = fit(spec, &s) else { continue };
            for (i, (&c, &t)) in f.coefficients().iter().zip(&true_coefs).enumerate() {
                let se = f.std_errors[i];
                if se.is_finite() && (c - t).abs() <= 3.0 * se {
                    covered[i] += 1;
                }
            }
        }
        for (label, hits) in spec.coefficient_labels().iter().zip(&covered) {
            let rate = *hits as f64 / 20.0;
            if rate < 0.9 {
                failures += 1;
            }
            if rate < worst.0 {
                worst = (rate, format!("{label} of {spec}"));
            }
        }
    }
    pass_if(
        failures == 0,
        format!(
            "5 specs x 20 seeds, n=500; lowest +-3se coverage {:.2} ({}); coefficients below 0.90: {failures}",
            worst.0,
            if worst.1.is_empty() { "all 1.00" } else { &worst.1 }
        ),
    )
}

fn params(phi: &[f64], theta: &[f64], sphi: &[f64], stheta: &[f64]) -> SarimaParams {
    SarimaParams {
        mu_or_drift: 0.0,
        phi: phi.to_vec(),
        theta: theta.to_vec(),
        seasonal_phi: sphi.to_vec(),
        seasonal_theta: stheta.to_vec(),
        sigma2: 1.0,
    }
}

fn noise(n: usize, seed: u64) -> Vec<f64> {
    let spec = SarimaSpec::arima(0, 0, 0);
    simulate(&spec, &SarimaParams::zeros(&spec), n, seed)
        .unwrap()
        .values()
        .to_vec()
}

fn walk(n: usize, seed: u64) -> Vec<f64> {
    let spec = SarimaSpec::arima(0, 1, 0);
    simulate(&spec, &SarimaParams::zeros(&spec), n, seed)
        .unwrap()
        .values()
        .to_vec()
}

type TestFn = fn(&[f64]) -> CoreResult<TestResult>;

fn criterion_5_calibration() -> Outcome {
    const SIMS: u64 = 1000;
    const N: usize = 200;
    let adf: TestFn = |x| adf_test(x, UnitRootHypothesis::ConstantAndTrend, LagOrder::Auto);
    let pp: TestFn = |x| pp_test(x, UnitRootHypothesis::ConstantAndTrend);
    let kpss: TestFn = |x| kpss_test(x, UnitRootHypothesis::Constant);
    let lb: TestFn = |x| ljung_box(x, 10, 0);
    let under_walk = [("ADF", adf), ("PP", pp)];
    let under_noise: [(&str, TestFn); 8] = [
        ("KPSS", kpss),
        ("Ljung-Box", lb),
        ("Shapiro-Wilk", shapiro_wilk),
        ("Shapiro-Francia", shapiro_francia),
        ("Anderson-Darling", anderson_darling),
        ("Cramer-von Mises", cramer_von_mises),
        ("Lilliefors", lilliefors),
        ("Pearson", pearson_chi_squared),
    ];
    let mut sizes = Vec::new();
    for (name, test) in under_walk {
        let hits = (0..SIMS)
            .filter(|&s| test(&walk(N, 10_000 + s)).unwrap().rejected_at_05)
            .count();
        sizes.push((name, hits as f64 / SIMS as f64));
    }
    for (name, test) in under_noise {
        let hits = (0..SIMS)
            .filter(|&s| test(&noise(N, 20_000 + s)).unwrap().rejected_at_05)
            .count();
        sizes.push((name, hits as f64 / SIMS as f64));
    }
    let size_ok = sizes.iter().all(|(_, a)| (0.02..=0.09).contains(a));

    // Power: 200 noise/walk pairs at n = 500; each test should reject on
    // noise and not on the walk (KPSS the other way round).
    let mut power = Vec::new();
    for (name, test, rejects_noise) in [("ADF", adf, true), ("PP", pp, true), ("KPSS", kpss, false)] {
        let (mut correct, mut both) = (0, 0);
        for s in 0..200u64 {
            let on_noise = test(&noise(500, 30_000 + s)).unwrap().rejected_at_05 == rejects_noise;
            let on_walk = test(&walk(500, 40_000 + s)).unwrap().rejected_at_05 != rejects_noise;
            correct += usize::from(on_noise) + usize::from(on_walk);
            both += usize::from(on_noise && on_walk);
        }
        power.push((name, correct as f64 / 400.0, both as f64 / 200.0));
    }
    let power_ok = power.iter().all(|(_, per_decision, _)| *per_decision >= 0.95);
    let sizes_text: Vec<String> = sizes.iter().map(|(n, a)| format!("{n}={a:.3}")).collect();
    let power_text: Vec<String> = power
        .iter()
        .map(|(n, d, p)| format!("{n}={d:.3} (pairs {p:.3})"))
        .collect();
    pass_if(
        size_ok && power_ok,
        format!(
            "size at 0.05 over {SIMS} nulls in [0.02,0.09]: {}; correct decisions over 200 pairs >= 0.95: {}",
            sizes_text.join(" "),
            power_text.join(" ")
        ),
    )
}

fn criterion_6_oracles() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut check = |name: &str, pass: bool, detail: String| {
        ok &= pass;
        notes.push(format!("{name}:{}{detail}", if pass { "ok" } else { "FAILED " }));
    };

    let alt = [1.0, -1.0, 1.0, -1.0];
    let q = ljung_box(&alt, 1, 0).unwrap().statistic;
    check("ljung_box", (q - 4.5).abs() < 1e-12, format!(" Q={q}"));
    let r1 = acf(&alt, 1).unwrap().values[1];
    check("acf1", (r1 + 0.75).abs() < 1e-12, format!(" r1={r1}"));

    let x = noise(150, 7);
    let spec = SarimaSpec::arima(0, 0, 0);
    let p = SarimaParams {
        sigma2: 1.7,
        ..SarimaParams::zeros(&spec)
    };
    let series = TimeSeries::new(x.clone(), 1).unwrap();
    let ll = loglik(&spec, &p, &series).unwrap();
    let n = x.len() as f64;
    let closed =
        -0.5 * n * (2.0 * std::f64::consts::PI * 1.7).ln() - x.iter().map(|v| v * v).sum::<f64>() / (2.0 * 1.7);
    check(
        "iid_loglik",
        (ll - closed).abs() < 1e-9,
        format!(" diff={:.1e}", (ll - closed).abs()),
    );

    // Counts (the domain data) for every order; real-valued draws for d <= 2
    // with the tolerance scaled by the series magnitude.
    let mut worst_counts: f64 = 0.0;
    let mut worst_real: f64 = 0.0;
    for period in [4, 12, 52] {
        for seasonal_d in 0..=1 {
            for d in 0..=4 {
                let ds = DifferenceSpec::new(d, seasonal_d, period);
                let counts: Vec<f64> = noise(160, (period * 10 + seasonal_d * 5 + d) as u64)
                    .iter()
                    .map(|v| (150.0 + 30.0 * v).round())
                    .collect();
                let back = undifference(&difference(&counts, &ds).unwrap(), &ds, &counts[..ds.lost()]).unwrap();
                worst_counts = counts
                    .iter()
                    .zip(&back)
                    .map(|(a, b)| (a - b).abs())
                    .fold(worst_counts, f64::max);
                if d <= 2 {
                    let real: Vec<f64> = noise(160, (period * 100 + seasonal_d * 7 + d) as u64)
                        .iter()
                        .map(|v| 10.0 * v)
                        .collect();
                    let scale = real.iter().fold(1.0f64, |m, v| m.max(v.abs()));
                    let back = undifference(&difference(&real, &ds).unwrap(), &ds, &real[..ds.lost()]).unwrap();
                    worst_real = real
                        .iter()
                        .zip(&back)
                        .map(|(a, b)| (a - b).abs() / scale)
                        .fold(worst_real, f64::max);
                }
            }
        }
    }
    check(
        "round_trip",
        worst_counts <= 1e-9 && worst_real <= 1e-9,
        format!(" counts d<=4 max={worst_counts:.1e} real d<=2 rel={worst_real:.1e}"),
    );

    let rw = TimeSeries::new(walk(300, 11), 1).unwrap();
    let f = fit(&SarimaSpec::arima(0, 1, 0), &rw).unwrap();
    let fc = forecast(&f, 30, &[0.95]).unwrap();
    let sigma = f.params.sigma2.sqrt();
    let dev = (1..=30)
        .map(|h| (fc.sigma_h[h - 1] - sigma * (h as f64).sqrt()).abs())
        .fold(0.0, f64::max);
    check("rw_sigma_h", dev < 1e-9, format!(" max_dev={dev:.1e}"));

    let k = f.spec.n_parameters();
    let (aic, bic) = information_criteria(f.loglik, k, f.n_effective).unwrap();
    let exact = aic == f.aic
        && bic == f.bic
        && aic == -2.0 * f.loglik + 2.0 * k as f64
        && bic == -2.0 * f.loglik + k as f64 * (f.n_effective as f64).ln();
    check("aic_bic", exact, String::new());

    pass_if(ok, notes.join(" "))
}

fn criterion_7_determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("weekcast-acceptance-{}", std::process::id()));
    let _ = std::fs::create_dir_all(&dir);
    let mut outputs = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_weekcast"))
            .args(["report", "-o", path.to_str().unwrap()])
            .status();
        if !matches!(status, Ok(s) if s.success()) {
            return pass_if(false, format!("report failed: {status:?}"));
        }
        outputs.push(std::fs::read(&path).unwrap_or_default());
    }
    let _ = std::fs::remove_dir_all(&dir);
    let identical = !outputs[0].is_empty() && outputs[0] == outputs[1];

    let series = parse_csv(weekcast::SAMPLE_CSV, &Columns::default(), 52).unwrap();
    let train = series.head(200).unwrap();
    let bounds = SearchBounds::new(52);
    let parallel = select_sarima(&train, &bounds, &SelectionOptions::default()).unwrap();
    let sequential = select_sarima(
        &train,
        &bounds,
        &SelectionOptions {
            parallel: false,
            ..SelectionOptions::default()
        },
    )
    .unwrap();
    let same_ranking = parallel.ranked == sequential.ranked;
    pass_if(
        identical && same_ranking,
        format!(
            "report bytes identical={identical} ({} bytes); parallel==sequential ranking={same_ranking} ({} candidates)",
            outputs[0].len(),
            parallel.ranked.len()
        ),
    )
}

fn criterion_8_fan_chart() -> Outcome {
    let dir = std::env::temp_dir().join(format!("weekcast-fan-{}", std::process::id()));
    let _ = std::fs::create_dir_all(&dir);
    let svg = dir.join("fan.svg");
    if let Err(e) = weekcast(&[
        "forecast",
        "--horizon",
        "52",
        "--levels",
        "10..99",
        "--svg",
        svg.to_str().unwrap(),
    ]) {
        return pass_if(false, e);
    }
    let text = std::fs::read_to_string(svg.with_extension("csv")).unwrap_or_default();
    let svg_text = std::fs::read_to_string(&svg).unwrap_or_default();
    let _ = std::fs::remove_dir_all(&dir);

    // bands[level] = (step -> (lower, upper))
    let mut bands: Vec<(f64, Vec<(f64, f64)>)> = Vec::new();
    for line in text.lines().skip(1) {
        let f: Vec<f64> = line.split(',').map(|c| c.parse().unwrap_or(f64::NAN)).collect();
        match bands.last_mut() {
            Some((level, steps)) if *level == f[0] => steps.push((f[4], f[5])),
            _ => bands.push((f[0], vec![(f[4], f[5])])),
        }
    }
    bands.sort_by(|a, b| a.0.total_cmp(&b.0));
    let count_ok = bands.len() == 10 && bands.iter().all(|(_, s)| s.len() == 52);
    let mut nested = count_ok;
    let mut widening = count_ok;
    for pair in bands.windows(2) {
        for (inner, outer) in pair[0].1.iter().zip(&pair[1].1) {
            nested &= outer.0 <= inner.0 && inner.1 <= outer.1;
            widening &= outer.1 - outer.0 > inner.1 - inner.0;
        }
    }
    let polygons = svg_text.matches("class=\"band\"").count();
    pass_if(
        count_ok && nested && widening && polygons == 10,
        format!(
            "levels={:?} nested={nested} strictly_widening={widening} svg_bands={polygons}",
            bands.iter().map(|b| b.0).collect::<Vec<_>>()
        ),
    )
}

type Criterion = (u8, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "method ordering on real data", criterion_1_table_ordering),
        (2, "reference model AIC/BIC on real data", criterion_2_reference_model),
        (
            3,
            "diagnostic directions on real data",
            criterion_3_diagnostic_directions,
        ),
        (4, "simulation recovery", criterion_4_recovery),
        (5, "test size and power", criterion_5_calibration),
        (6, "oracle equivalences", criterion_6_oracles),
        (7, "determinism", criterion_7_determinism),
        (8, "fan chart structure", criterion_8_fan_chart),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let tag = match outcome.status {
            Status::Pass => "PASS",
            Status::Fail => {
                failed += 1;
                "FAIL"
            }
            Status::Skip => "SKIP",
        };
        println!(
            "{tag} criterion {id} ({name}) [{:.1}s]: {}",
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if failed > 0 {
        println!("acceptance: {failed} criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: no failures");
}

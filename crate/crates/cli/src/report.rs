//! Report documents: key-sorted JSON or one CSV table per section.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use weekcast_core::diagnostics::{BoundKind, TestResult};
use weekcast_core::{CandidateScore, ComparisonReport, ForecastResult, SarimaFit};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Rounds to 6 significant digits; non-finite values become `null`.
pub fn number(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
    json!(rounded)
}

fn cell(x: f64) -> String {
    if !x.is_finite() {
        return "NA".to_string();
    }
    let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
    if rounded != 0.0 && !(1e-4..1e15).contains(&rounded.abs()) {
        format!("{rounded:e}")
    } else {
        rounded.to_string()
    }
}

fn numbers(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| number(x)).collect())
}

/// Flat table rendering of a section.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn to_csv(&self) -> std::io::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

/// A named part of a [`Document`]. A `null` JSON value keeps the section
/// out of JSON output.
#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub json: Value,
    pub table: Table,
}

/// Where the input came from and how the run was configured.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub input: String,
    pub input_sha256: String,
    pub seed: u64,
    pub observations: usize,
    pub period: usize,
    pub start_date: Option<String>,
}

impl Provenance {
    fn section(&self) -> Section {
        let mut fields = vec![
            ("input", json!(self.input)),
            ("input_sha256", json!(self.input_sha256)),
            ("observations", json!(self.observations)),
            ("period", json!(self.period)),
            ("seed", json!(self.seed)),
            ("version", json!(env!("CARGO_PKG_VERSION"))),
        ];
        if let Some(d) = &self.start_date {
            fields.push(("start_date", json!(d)));
        }
        let mut table = Table::new(&["key", "value"]);
        for (k, v) in &fields {
            let text = v.as_str().map_or_else(|| v.to_string(), str::to_string);
            table.rows.push(vec![k.to_string(), text]);
        }
        Section {
            name: "provenance".into(),
            json: Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect()),
            table,
        }
    }
}

/// A run's output: provenance plus named sections in emission order.
#[derive(Debug, Clone)]
pub struct Document {
    pub provenance: Provenance,
    pub sections: Vec<Section>,
}

impl Document {
    pub fn new(provenance: Provenance) -> Self {
        Self {
            provenance,
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    fn all_sections(&self) -> Vec<Section> {
        let mut out = vec![self.provenance.section()];
        out.extend(self.sections.iter().cloned());
        out
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        for s in self.all_sections() {
            if !s.json.is_null() {
                map.insert(s.name, s.json);
            }
        }
        Value::Object(map)
    }

    /// Pretty JSON with a trailing newline; keys come out sorted.
    pub fn render_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        text.push('\n');
        text
    }

    /// Every section as `# name` followed by its CSV table.
    pub fn render_csv(&self) -> std::io::Result<String> {
        let mut out = String::new();
        for (i, s) in self.all_sections().iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&format!("# {}\n", s.name));
            out.push_str(&s.table.to_csv()?);
        }
        Ok(out)
    }

    /// Writes the document to `path`. CSV output goes to one
    /// `<stem>_<section>.csv` file per section next to `path`.
    pub fn write(&self, format: Format, path: &Path) -> std::io::Result<Vec<PathBuf>> {
        match format {
            Format::Json => {
                std::fs::write(path, self.render_json())?;
                Ok(vec![path.to_path_buf()])
            }
            Format::Csv => {
                let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("report");
                let dir = path.parent().unwrap_or(Path::new(""));
                let mut written = Vec::new();
                for s in self.all_sections() {
                    let target = dir.join(format!("{stem}_{}.csv", s.name));
                    std::fs::write(&target, s.table.to_csv()?)?;
                    written.push(target);
                }
                Ok(written)
            }
        }
    }
}

/// A test result tagged with what it was applied to.
#[derive(Debug, Clone)]
pub struct Diagnostic {
    pub target: String,
    pub result: TestResult,
}

fn bound_name(kind: BoundKind) -> &'static str {
    match kind {
        BoundKind::Exact => "exact",
        BoundKind::AtMost => "at_most",
        BoundKind::AtLeast => "at_least",
    }
}

pub fn diagnostics_section(items: &[Diagnostic]) -> Section {
    let mut table = Table::new(&[
        "target",
        "test",
        "statistic",
        "p_value",
        "p_value_kind",
        "rejected_at_05",
        "null_hypothesis",
    ]);
    let mut list = Vec::new();
    for d in items {
        let r = &d.result;
        list.push(json!({
            "target": d.target,
            "test": r.test_name,
            "statistic": number(r.statistic),
            "p_value": number(r.p_value.value),
            "p_value_kind": bound_name(r.p_value.kind),
            "rejected_at_05": r.rejected_at_05,
            "null_hypothesis": r.null_hypothesis,
        }));
        table.rows.push(vec![
            d.target.clone(),
            r.test_name.clone(),
            cell(r.statistic),
            cell(r.p_value.value),
            bound_name(r.p_value.kind).into(),
            r.rejected_at_05.to_string(),
            r.null_hypothesis.clone(),
        ]);
    }
    Section {
        name: "diagnostics".into(),
        json: Value::Array(list),
        table,
    }
}

pub fn comparison_section(report: &ComparisonReport, train_len: usize, test_len: usize) -> Section {
    let mut table = Table::new(&["rank", "method", "sum_of_error", "mae", "rmse"]);
    let mut rows = Vec::new();
    for (i, r) in report.rows.iter().enumerate() {
        rows.push(json!({
            "rank": i + 1,
            "method": r.method,
            "sum_of_error": number(r.sum_of_error),
            "mae": number(r.mae),
            "rmse": number(r.rmse),
        }));
        table.rows.push(vec![
            (i + 1).to_string(),
            r.method.clone(),
            cell(r.sum_of_error),
            cell(r.mae),
            cell(r.rmse),
        ]);
    }
    Section {
        name: "comparison".into(),
        json: json!({
            "arima_model": report.arima_spec.map(|s| s.to_string()),
            "rows": rows,
            "test_len": test_len,
            "train_len": train_len,
            "winner": report.winner,
        }),
        table,
    }
}

/// Fitted coefficients as parallel `labels`/`coefficients`/`std_errors`
/// arrays, plus fit statistics and, when a search ran, the ranked candidates.
pub fn model_section(fit: &SarimaFit, sample: &str, candidates: Option<&[CandidateScore]>) -> Section {
    let labels = fit.coefficient_labels();
    let coefs = fit.coefficients();
    let mut table = Table::new(&["term", "estimate", "std_error"]);
    for (i, label) in labels.iter().enumerate() {
        let se = fit.std_errors.get(i).copied().unwrap_or(f64::NAN);
        table.rows.push(vec![label.clone(), cell(coefs[i]), cell(se)]);
    }
    let se: Vec<f64> = (0..labels.len())
        .map(|i| fit.std_errors.get(i).copied().unwrap_or(f64::NAN))
        .collect();
    table
        .rows
        .push(vec!["sigma2".into(), cell(fit.params.sigma2), "NA".into()]);
    let s = fit.spec;
    let mut obj = json!({
        "model": s.to_string(),
        "orders": {
            "p": s.p, "d": s.d, "q": s.q,
            "seasonal_p": s.seasonal_p, "seasonal_d": s.seasonal_d, "seasonal_q": s.seasonal_q,
            "period": s.period, "include_drift": s.include_drift,
        },
        "sample": sample,
        "labels": labels,
        "coefficients": numbers(&coefs),
        "std_errors": numbers(&se),
        "sigma2": number(fit.params.sigma2),
        "loglik": number(fit.loglik),
        "aic": number(fit.aic),
        "bic": number(fit.bic),
        "n_effective": fit.n_effective,
        "converged": fit.converged,
    });
    if let Some(list) = candidates {
        let (ok, failed): (Vec<_>, Vec<_>) = list.iter().partition(|c| c.converged);
        let entry =
            |c: &&CandidateScore| json!({"model": c.spec.to_string(), "aic": number(c.aic), "bic": number(c.bic)});
        obj["candidates"] = Value::Array(ok.iter().map(entry).collect());
        obj["not_converged"] = Value::Array(failed.iter().map(entry).collect());
    }
    Section {
        name: "model".into(),
        json: obj,
        table,
    }
}

/// Ranked search candidates as a CSV-only table; JSON carries them inside
/// the model section.
pub fn candidates_section(list: &[CandidateScore]) -> Section {
    let mut table = Table::new(&["rank", "model", "aic", "bic", "converged"]);
    for (i, c) in list.iter().enumerate() {
        table.rows.push(vec![
            (i + 1).to_string(),
            c.spec.to_string(),
            cell(c.aic),
            cell(c.bic),
            c.converged.to_string(),
        ]);
    }
    Section {
        name: "candidates".into(),
        json: Value::Null,
        table,
    }
}

/// Forecast steps with the date of each week when the series is dated.
pub fn forecast_section(fc: &ForecastResult, model: &str, dates: Option<&[String]>) -> Section {
    let pct = |l: f64| format!("{}", (l * 1000.0).round() / 10.0);
    let mut header = vec![
        "step".to_string(),
        "week_start_date".into(),
        "point".into(),
        "sigma".into(),
    ];
    for &l in &fc.levels {
        header.push(format!("lower_{}", pct(l)));
        header.push(format!("upper_{}", pct(l)));
    }
    let mut table = Table {
        header,
        rows: Vec::new(),
    };
    let mut steps = Vec::new();
    for t in 0..fc.horizon() {
        let date = dates.and_then(|d| d.get(t)).cloned();
        let mut row = vec![
            (t + 1).to_string(),
            date.clone().unwrap_or_default(),
            cell(fc.point[t]),
            cell(fc.sigma_h[t]),
        ];
        for j in 0..fc.levels.len() {
            row.push(cell(fc.lower[t][j]));
            row.push(cell(fc.upper[t][j]));
        }
        table.rows.push(row);
        steps.push(json!({
            "step": t + 1,
            "week_start_date": date,
            "point": number(fc.point[t]),
            "sigma": number(fc.sigma_h[t]),
            "lower": numbers(&fc.lower[t]),
            "upper": numbers(&fc.upper[t]),
        }));
    }
    Section {
        name: "forecast".into(),
        json: json!({
            "horizon": fc.horizon(),
            "levels": numbers(&fc.levels),
            "model": model,
            "steps": steps,
        }),
        table,
    }
}

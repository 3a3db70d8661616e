//! Dataset ingestion and the train/holdout split.

use std::path::Path;

use chrono::{Duration, NaiveDate};
use sha2::{Digest, Sha256};
use thiserror::Error;
use weekcast_core::TimeSeries;

/// Problems with input data. Line numbers count the header as line 1.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("input has no data rows")]
    Empty,
    #[error("missing column `{0}` in header")]
    MissingColumn(String),
    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },
    #[error("line {line}: invalid date `{value}` (expected YYYY-MM-DD)")]
    BadDate { line: u64, value: String },
    #[error("line {line}: date {found} does not follow {previous} by 7 days")]
    DateGap {
        line: u64,
        previous: NaiveDate,
        found: NaiveDate,
    },
    #[error("line {line}: negative count {value}")]
    Negative { line: u64, value: String },
    #[error("line {line}: `{value}` is not a whole-number count")]
    NotACount { line: u64, value: String },
    #[error("{0}")]
    Invalid(String),
}

/// Header names of the date and count columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Columns {
    pub date: String,
    pub value: String,
}

impl Default for Columns {
    fn default() -> Self {
        Self {
            date: "week_start_date".into(),
            value: "admissions".into(),
        }
    }
}

/// Parses weekly counts: consecutive dates exactly 7 days apart and
/// nonnegative whole-number values.
pub fn parse_csv(text: &str, columns: &Columns, period: usize) -> Result<TimeSeries, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| DataError::Malformed {
            line: 1,
            message: e.to_string(),
        })?
        .clone();
    if header.iter().all(str::is_empty) {
        return Err(DataError::Empty);
    }
    let find = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| DataError::MissingColumn(name.to_string()))
    };
    let date_idx = find(&columns.date)?;
    let value_idx = find(&columns.value)?;

    let mut values = Vec::new();
    let mut start = None;
    let mut previous: Option<NaiveDate> = None;
    for record in reader.records() {
        let record = record.map_err(|e| DataError::Malformed {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let date_text = record.get(date_idx).unwrap_or_default();
        let date = NaiveDate::parse_from_str(date_text, "%Y-%m-%d").map_err(|_| DataError::BadDate {
            line,
            value: date_text.to_string(),
        })?;
        if let Some(prev) = previous {
            if date - prev != Duration::days(7) {
                return Err(DataError::DateGap {
                    line,
                    previous: prev,
                    found: date,
                });
            }
        }
        let raw = record.get(value_idx).unwrap_or_default();
        let count: f64 = raw.parse().map_err(|_| DataError::NotACount {
            line,
            value: raw.to_string(),
        })?;
        if !count.is_finite() || count.fract() != 0.0 {
            return Err(DataError::NotACount {
                line,
                value: raw.to_string(),
            });
        }
        if count < 0.0 {
            return Err(DataError::Negative {
                line,
                value: raw.to_string(),
            });
        }
        start.get_or_insert(date);
        previous = Some(date);
        values.push(count);
    }
    let Some(start) = start else {
        return Err(DataError::Empty);
    };
    TimeSeries::new(values, period)
        .map(|s| s.with_start_date(start))
        .map_err(|e| DataError::Invalid(e.to_string()))
}

pub fn read_input(path: &Path) -> Result<Vec<u8>, DataError> {
    std::fs::read(path).map_err(|e| DataError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Reads and parses a CSV file; see [`parse_csv`].
pub fn load_csv(path: &Path, columns: &Columns, period: usize) -> Result<TimeSeries, DataError> {
    let bytes = read_input(path)?;
    let text = String::from_utf8(bytes).map_err(|_| DataError::Malformed {
        line: 0,
        message: "input is not UTF-8".into(),
    })?;
    parse_csv(&text, columns, period)
}

/// First `train_len` observations and the remainder.
pub fn split(series: &TimeSeries, train_len: usize) -> Result<(TimeSeries, Vec<f64>), DataError> {
    if train_len < 1 || train_len >= series.len() {
        return Err(DataError::Invalid(format!(
            "train length {train_len} must be in 1..{}",
            series.len()
        )));
    }
    let train = series.head(train_len).map_err(|e| DataError::Invalid(e.to_string()))?;
    Ok((train, series.values()[train_len..].to_vec()))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

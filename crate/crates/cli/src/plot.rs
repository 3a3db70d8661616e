//! Fan-chart and seasonal-plot SVG output with companion CSV coordinates.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use chrono::{Datelike, Duration, NaiveDate};
use thiserror::Error;
use weekcast_core::{seasonal_table, ForecastResult, TimeSeries};

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("{0}")]
    Invalid(String),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 40.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Linear map from data coordinates to the plot area.
struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn new(x0: f64, x1: f64, ys: impl Iterator<Item = f64>) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for y in ys.filter(|y| y.is_finite()) {
            lo = lo.min(y);
            hi = hi.max(y);
        }
        if !lo.is_finite() {
            (lo, hi) = (0.0, 1.0);
        }
        let pad = if hi > lo { 0.05 * (hi - lo) } else { 1.0 };
        let x1 = if x1 > x0 { x1 } else { x0 + 1.0 };
        Self {
            x0,
            x1,
            y0: lo - pad,
            y1: hi + pad,
        }
    }

    fn x(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn y(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - TOP - BOTTOM)
    }

    fn points(&self, pts: impl Iterator<Item = (f64, f64)>) -> String {
        pts.map(|(x, y)| format!("{:.2},{:.2}", self.x(x), self.y(y)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="18" text-anchor="middle" font-size="14">{title}</text>"#,
        WIDTH / 2.0
    );
}

fn y_axis(out: &mut String, frame: &Frame) {
    let (x_left, x_right) = (LEFT, WIDTH - RIGHT);
    let _ = writeln!(
        out,
        r##"<line x1="{x_left}" y1="{TOP}" x2="{x_left}" y2="{}" stroke="#333"/>"##,
        HEIGHT - BOTTOM
    );
    for i in 0..=4 {
        let v = frame.y0 + (frame.y1 - frame.y0) * f64::from(i) / 4.0;
        let y = frame.y(v);
        let _ = writeln!(
            out,
            r##"<line x1="{x_left}" y1="{y:.2}" x2="{x_right}" y2="{y:.2}" stroke="#eee"/><text x="{}" y="{:.2}" text-anchor="end">{v:.0}</text>"##,
            x_left - 4.0,
            y + 4.0
        );
    }
}

/// Band fill for a confidence level: lower levels are darker.
fn band_fill(level: f64) -> String {
    let shade = |lo: f64, hi: f64| (lo + (hi - lo) * level).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        shade(40.0, 215.0),
        shade(80.0, 225.0),
        shade(160.0, 245.0)
    )
}

/// Week indices (1-based) where a new calendar year starts.
fn year_starts(start: NaiveDate, len: usize) -> Vec<(usize, i32)> {
    (1..len)
        .filter_map(|i| {
            let prev = start + Duration::weeks(i as i64 - 1);
            let cur = start + Duration::weeks(i as i64);
            (cur.year() != prev.year()).then_some((i + 1, cur.year()))
        })
        .collect()
}

/// History line, point forecast and one translucent band per level, widest
/// drawn first. The x axis counts weeks from 1.
pub fn fan_chart_svg(history: &TimeSeries, fc: &ForecastResult) -> Result<String, PlotError> {
    if fc.levels.is_empty() || fc.horizon() == 0 {
        return Err(PlotError::Invalid(
            "forecast needs at least one step and one level".into(),
        ));
    }
    let n = history.len();
    let h = fc.horizon();
    let ys = history
        .values()
        .iter()
        .copied()
        .chain(fc.lower.iter().flatten().copied())
        .chain(fc.upper.iter().flatten().copied());
    let frame = Frame::new(1.0, (n + h) as f64, ys);
    let mut out = String::new();
    header(&mut out, "Forecast with nested prediction intervals");
    y_axis(&mut out, &frame);

    let grid: Vec<(usize, String)> = match history.start_date() {
        Some(start) => year_starts(start, n + h)
            .into_iter()
            .map(|(i, y)| (i, y.to_string()))
            .collect(),
        None => (1..)
            .map(|k| k * history.period().max(1) + 1)
            .take_while(|&i| i <= n + h)
            .map(|i| (i, format!("week {i}")))
            .collect(),
    };
    for (i, label) in grid {
        let x = frame.x(i as f64);
        let _ = writeln!(
            out,
            r##"<line class="gridline" x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{}" stroke="#ccc" stroke-dasharray="4 3"/><text x="{x:.2}" y="{}" text-anchor="middle">{label}</text>"##,
            HEIGHT - BOTTOM,
            HEIGHT - BOTTOM + 16.0
        );
    }

    let mut order: Vec<usize> = (0..fc.levels.len()).collect();
    order.sort_by(|&a, &b| fc.levels[b].total_cmp(&fc.levels[a]));
    for j in order {
        let upper = (0..h).map(|t| ((n + t + 1) as f64, fc.upper[t][j]));
        let lower = (0..h).rev().map(|t| ((n + t + 1) as f64, fc.lower[t][j]));
        let _ = writeln!(
            out,
            r#"<polygon class="band" data-level="{}" points="{}" fill="{}" fill-opacity="0.75" stroke="none"/>"#,
            fc.levels[j],
            frame.points(upper.chain(lower)),
            band_fill(fc.levels[j])
        );
    }
    let hist = history.values().iter().enumerate().map(|(i, &v)| ((i + 1) as f64, v));
    let _ = writeln!(
        out,
        r##"<polyline class="history" points="{}" fill="none" stroke="#222" stroke-width="1.2"/>"##,
        frame.points(hist)
    );
    let point = (0..h).map(|t| ((n + t + 1) as f64, fc.point[t]));
    let _ = writeln!(
        out,
        r##"<polyline class="point-forecast" points="{}" fill="none" stroke="#08306b" stroke-width="1.5"/>"##,
        frame.points(point)
    );
    out.push_str("</svg>\n");
    Ok(out)
}

/// `level,step,week,point,lower,upper` rows copied verbatim from the forecast.
pub fn fan_chart_csv(history_len: usize, fc: &ForecastResult) -> String {
    let mut out = String::from("level,step,week,point,lower,upper\n");
    for (j, level) in fc.levels.iter().enumerate() {
        for t in 0..fc.horizon() {
            let _ = writeln!(
                out,
                "{level},{},{},{},{},{}",
                t + 1,
                history_len + t + 1,
                fc.point[t],
                fc.lower[t][j],
                fc.upper[t][j]
            );
        }
    }
    out
}

fn write_file(path: &Path, text: &str) -> Result<(), PlotError> {
    std::fs::write(path, text).map_err(|e| PlotError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Writes the SVG to `path` and the band coordinates beside it with a `.csv`
/// extension; returns the CSV path.
pub fn emit_fan_chart(history: &TimeSeries, fc: &ForecastResult, path: &Path) -> Result<PathBuf, PlotError> {
    let svg = fan_chart_svg(history, fc)?;
    let csv_path = path.with_extension("csv");
    write_file(path, &svg)?;
    write_file(&csv_path, &fan_chart_csv(history.len(), fc))?;
    Ok(csv_path)
}

fn cycle_label(series: &TimeSeries, cycle: usize) -> String {
    match series.start_date() {
        Some(start) => {
            let first = start + Duration::weeks((cycle * series.period()) as i64);
            format!("from {first}")
        }
        None => format!("cycle {}", cycle + 1),
    }
}

/// One polyline per seasonal cycle against position `1..=period`.
pub fn seasonal_plot_svg(series: &TimeSeries) -> Result<String, PlotError> {
    let period = series.period();
    if period > series.len() {
        return Err(PlotError::Invalid(format!(
            "period {period} exceeds series length {}",
            series.len()
        )));
    }
    let table = seasonal_table(series).map_err(|e| PlotError::Invalid(e.to_string()))?;
    let frame = Frame::new(1.0, period as f64, series.values().iter().copied());
    let mut out = String::new();
    header(&mut out, "Seasonal plot");
    y_axis(&mut out, &frame);
    let step = (period / 13).max(1);
    for pos in (1..=period).filter(|p| (p - 1) % step == 0 || *p == period) {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{}" text-anchor="middle">{pos}</text>"#,
            frame.x(pos as f64),
            HEIGHT - BOTTOM + 16.0
        );
    }
    for (k, row) in table.rows.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let pts = row.iter().enumerate().map(|(i, &v)| ((i + 1) as f64, v));
        let _ = writeln!(
            out,
            r#"<polyline class="cycle" data-cycle="{}" points="{}" fill="none" stroke="{color}" stroke-width="1.3"/>"#,
            k + 1,
            frame.points(pts)
        );
        let ly = TOP + 14.0 * k as f64 + 8.0;
        let lx = WIDTH - RIGHT - 130.0;
        let _ = writeln!(
            out,
            r#"<g class="legend"><line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}">{}</text></g>"#,
            lx + 18.0,
            lx + 22.0,
            ly + 4.0,
            cycle_label(series, k)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// `cycle,position,value` rows of the seasonal table.
pub fn seasonal_plot_csv(series: &TimeSeries) -> Result<String, PlotError> {
    let table = seasonal_table(series).map_err(|e| PlotError::Invalid(e.to_string()))?;
    let mut out = String::from("cycle,position,value\n");
    for (cycle, position, value) in table.entries() {
        let _ = writeln!(out, "{cycle},{position},{value}");
    }
    Ok(out)
}

/// Writes the SVG to `path` and its table beside it with a `.csv`
/// extension; returns the CSV path.
pub fn emit_seasonal_plot(series: &TimeSeries, path: &Path) -> Result<PathBuf, PlotError> {
    let svg = seasonal_plot_svg(series)?;
    let csv = seasonal_plot_csv(series)?;
    let csv_path = path.with_extension("csv");
    write_file(path, &svg)?;
    write_file(&csv_path, &csv)?;
    Ok(csv_path)
}

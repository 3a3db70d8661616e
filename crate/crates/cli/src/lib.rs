//! Command-line front end: CSV ingestion, the train/holdout pipeline,
//! JSON/CSV reports and SVG charts.

pub mod app;
pub mod io;
pub mod plot;
pub mod report;

/// The bundled synthetic 244-week sample.
pub const SAMPLE_CSV: &str = include_str!("../data/sample_admissions.csv");
pub const SAMPLE_NAME: &str = "bundled:sample_admissions.csv";

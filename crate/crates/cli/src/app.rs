//! Argument parsing, subcommand dispatch and exit codes.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::{Duration, NaiveDate};
use clap::{Args, Parser, Subcommand, ValueEnum};
use weekcast_core::diagnostics::{
    adf_test, kpss_test, ljung_box, normality_battery, pp_test, LagOrder, UnitRootHypothesis,
};
use weekcast_core::{
    compare_methods, fit_with, forecast, select_sarima, simulate, Criterion, Error as CoreError, FitOptions, SarimaFit,
    SarimaParams, SarimaSpec, SearchBounds, SearchStrategy, SelectionOptions, TimeSeries,
};

use crate::io::{self, Columns, DataError};
use crate::plot::{self, PlotError};
use crate::report::{self, Diagnostic, Document, Format, Provenance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

/// Failure classes, one per nonzero exit code.
#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Data(String),
    Convergence(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => EXIT_USAGE,
            AppError::Data(_) => EXIT_DATA,
            AppError::Convergence(_) => EXIT_CONVERGENCE,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Data(m) | AppError::Convergence(m) => m,
        }
    }
}

impl From<DataError> for AppError {
    fn from(e: DataError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NoConvergedCandidate => AppError::Convergence(e.to_string()),
            CoreError::InvalidArgument(_) | CoreError::GridTooLarge { .. } => AppError::Usage(e.to_string()),
            _ => AppError::Data(e.to_string()),
        }
    }
}

impl From<PlotError> for AppError {
    fn from(e: PlotError) -> Self {
        match e {
            PlotError::Invalid(m) => AppError::Data(m),
            PlotError::Io { .. } => AppError::Usage(e.to_string()),
        }
    }
}

fn write_error(path: &Path, e: std::io::Error) -> AppError {
    AppError::Usage(format!("cannot write {}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(
    name = "weekcast",
    version,
    about = "Diagnostics, seasonal ARIMA selection and fan-chart forecasts for weekly counts",
    after_help = "Without a CSV argument every command reads the bundled 244-week synthetic sample.\n\
                  Exit codes: 0 success, 1 usage error, 2 data error, 3 convergence failure."
)]
pub struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Seasonal period in weeks.
    #[arg(long, global = true, default_value_t = 52)]
    period: usize,
    /// Seed for simulation; recorded in every report.
    #[arg(long, global = true, default_value_t = 20120301)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Header of the date column.
    #[arg(long, global = true, default_value = "week_start_date")]
    date_column: String,
    /// Header of the count column.
    #[arg(long, global = true, default_value = "admissions")]
    value_column: String,
    /// Dataset export to use when no CSV argument is given.
    #[arg(long, global = true, value_name = "PATH")]
    real_data: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Non-seasonal orders `p,d,q`.
    #[arg(long, value_name = "P,D,Q", value_parser = parse_triple)]
    order: Option<[usize; 3]>,
    /// Seasonal orders `P,D,Q` at `--period`.
    #[arg(long, value_name = "P,D,Q", value_parser = parse_triple)]
    seasonal: Option<[usize; 3]>,
    /// Include a mean (undifferenced) or drift (differenced) term.
    #[arg(long)]
    drift: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Aic,
    Bic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Stepwise,
    Exhaustive,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = CriterionArg::Aic)]
    criterion: CriterionArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Stepwise)]
    strategy: StrategyArg,
    /// Run an exhaustive search even above the candidate limit.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 24)]
    max_p: usize,
    #[arg(long, default_value_t = 24)]
    max_q: usize,
    #[arg(long, default_value_t = 4)]
    max_d: usize,
    #[arg(long, default_value_t = 1)]
    max_seasonal_p: usize,
    #[arg(long, default_value_t = 1)]
    max_seasonal_q: usize,
    #[arg(long, default_value_t = 1)]
    max_seasonal_d: usize,
    /// Never add a drift or mean term.
    #[arg(long)]
    no_drift: bool,
    /// Evaluate candidates on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct ForecastArgs {
    #[arg(long, default_value_t = 52)]
    horizon: usize,
    /// Interval levels in percent: a list `10,50,95` or a range `10..99`
    /// (steps of 10 plus the upper end).
    #[arg(long, default_value = "10..99", value_parser = parse_levels)]
    levels: Levels,
}

#[derive(Debug, Clone)]
struct Levels(Vec<f64>);

#[derive(Debug, Subcommand)]
enum Command {
    /// Unit-root, whiteness and normality tests on the series, or on the
    /// residuals of a model given with --order.
    Diagnose {
        csv: Option<PathBuf>,
        #[command(flatten)]
        model: ModelArgs,
        /// Use only the first N weeks.
        #[arg(long)]
        train_len: Option<usize>,
    },
    /// Fit one seasonal ARIMA model.
    Fit {
        csv: Option<PathBuf>,
        #[command(flatten)]
        model: ModelArgs,
        /// Use only the first N weeks.
        #[arg(long)]
        train_len: Option<usize>,
    },
    /// Choose differencing by KPSS and orders by AIC or BIC.
    Autofit {
        csv: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
        /// Use only the first N weeks.
        #[arg(long)]
        train_len: Option<usize>,
    },
    /// Score ARIMA and six baselines on the weeks after the training window.
    Compare {
        csv: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = 200)]
        train_len: usize,
    },
    /// Fit on the whole series and forecast with nested intervals.
    Forecast {
        csv: Option<PathBuf>,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        forecast: ForecastArgs,
        /// Also write a fan chart here and its band coordinates beside it.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Full pipeline: diagnostics, method comparison, model table and forecast.
    Report {
        csv: Option<PathBuf>,
        /// Output file; CSV format writes one file per section next to it.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
        /// Report this model instead of the one chosen by the comparison.
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        forecast: ForecastArgs,
        #[arg(long, default_value_t = 200)]
        train_len: usize,
    },
    /// Seasonal plot: one line per cycle.
    SeasonalPlot {
        csv: Option<PathBuf>,
        /// SVG output; the cycle table goes beside it as CSV.
        #[arg(long, value_name = "PATH")]
        svg: PathBuf,
    },
    /// Simulate weekly counts from a seasonal ARIMA model (rounded, floored
    /// at zero). Defaults reproduce the bundled sample.
    Simulate {
        #[arg(long, default_value_t = 244)]
        n: usize,
        #[arg(long, default_value = "2012-03-01")]
        start: NaiveDate,
        #[arg(long, value_name = "P,D,Q", default_value = "2,0,2", value_parser = parse_triple)]
        order: [usize; 3],
        #[arg(long, value_name = "P,D,Q", default_value = "1,1,1", value_parser = parse_triple)]
        seasonal: [usize; 3],
        #[arg(long, allow_hyphen_values = true, default_value = "-0.03,0.55", value_parser = parse_coefs)]
        ar: Coefs,
        #[arg(long, allow_hyphen_values = true, default_value = "0.09,-0.58", value_parser = parse_coefs)]
        ma: Coefs,
        #[arg(long, allow_hyphen_values = true, default_value = "-0.11", value_parser = parse_coefs)]
        sar: Coefs,
        #[arg(long, allow_hyphen_values = true, default_value = "-0.42", value_parser = parse_coefs)]
        sma: Coefs,
        /// Drift per week (mean when undifferenced); `none` for no constant.
        #[arg(long, allow_hyphen_values = true, default_value = "0.14")]
        drift: String,
        #[arg(long, default_value_t = 36.0)]
        sigma2: f64,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

fn parse_triple(s: &str) -> Result<[usize; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated integers, got `{s}`"));
    }
    let mut out = [0; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| format!("`{p}` is not a nonnegative integer"))?;
    }
    Ok(out)
}

fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("`{p}` is not a number")))
        .collect()
}

/// Comma-separated coefficients; an empty string means none.
#[derive(Debug, Clone)]
struct Coefs(Vec<f64>);

fn parse_coefs(s: &str) -> Result<Coefs, String> {
    parse_list(s).map(Coefs)
}

fn parse_levels(s: &str) -> Result<Levels, String> {
    let percents: Vec<f64> = if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
        let hi: u32 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
        if lo == 0 || lo > hi {
            return Err(format!("empty level range `{s}`"));
        }
        let mut v: Vec<f64> = (lo..hi).step_by(10).map(f64::from).collect();
        v.push(f64::from(hi));
        v
    } else {
        parse_list(s)?
    };
    if percents.is_empty() || percents.iter().any(|&p| !(p > 0.0 && p < 100.0)) {
        return Err(format!(
            "levels must be percentages strictly between 0 and 100, got `{s}`"
        ));
    }
    Ok(Levels(percents.iter().map(|p| p / 100.0).collect()))
}

impl ModelArgs {
    fn spec(&self, period: usize) -> Result<Option<SarimaSpec>, AppError> {
        let Some([p, d, q]) = self.order else {
            if self.seasonal.is_some() || self.drift {
                return Err(AppError::Usage("--seasonal and --drift need --order".into()));
            }
            return Ok(None);
        };
        let mut spec = SarimaSpec::arima(p, d, q).with_drift(self.drift);
        if let Some([sp, sd, sq]) = self.seasonal {
            spec = spec.seasonal(sp, sd, sq, period);
        }
        spec.validate()?;
        Ok(Some(spec))
    }
}

impl SearchArgs {
    fn bounds(&self, period: usize) -> SearchBounds {
        SearchBounds {
            max_p: self.max_p,
            max_q: self.max_q,
            max_d: self.max_d,
            max_seasonal_p: self.max_seasonal_p,
            max_seasonal_q: self.max_seasonal_q,
            max_seasonal_d: self.max_seasonal_d,
            period,
            try_drift: !self.no_drift,
        }
    }

    fn options(&self) -> SelectionOptions {
        SelectionOptions {
            criterion: match self.criterion {
                CriterionArg::Aic => Criterion::Aic,
                CriterionArg::Bic => Criterion::Bic,
            },
            strategy: match self.strategy {
                StrategyArg::Stepwise => SearchStrategy::Stepwise,
                StrategyArg::Exhaustive => SearchStrategy::Exhaustive { force: self.force },
            },
            parallel: !self.sequential,
            ..SelectionOptions::default()
        }
    }
}

/// A loaded series and where it came from.
struct Input {
    series: TimeSeries,
    provenance: Provenance,
}

fn load(global: &GlobalArgs, csv: Option<&Path>) -> Result<Input, AppError> {
    let columns = Columns {
        date: global.date_column.clone(),
        value: global.value_column.clone(),
    };
    let path = csv.or(global.real_data.as_deref());
    let (name, bytes) = match path {
        Some(p) => (p.display().to_string(), io::read_input(p)?),
        None => (crate::SAMPLE_NAME.to_string(), crate::SAMPLE_CSV.as_bytes().to_vec()),
    };
    let text = String::from_utf8(bytes).map_err(|_| AppError::Data("input is not UTF-8".into()))?;
    let series = io::parse_csv(&text, &columns, global.period)?;
    let provenance = Provenance {
        input: name,
        input_sha256: io::sha256_hex(text.as_bytes()),
        seed: global.seed,
        observations: series.len(),
        period: global.period,
        start_date: series.start_date().map(|d| d.to_string()),
    };
    Ok(Input { series, provenance })
}

fn window(series: &TimeSeries, train_len: Option<usize>) -> Result<TimeSeries, AppError> {
    match train_len {
        None => Ok(series.clone()),
        Some(n) if n == series.len() => Ok(series.clone()),
        Some(n) => Ok(io::split(series, n)?.0),
    }
}

fn sample_name(series: &TimeSeries, full_len: usize) -> String {
    if series.len() == full_len {
        format!("weeks 1-{full_len}")
    } else {
        format!("weeks 1-{} of {full_len}", series.len())
    }
}

fn series_diagnostics(series: &TimeSeries) -> Result<Vec<Diagnostic>, AppError> {
    let x = series.values();
    let tag = |result| Diagnostic {
        target: "series".into(),
        result,
    };
    Ok(vec![
        tag(adf_test(x, UnitRootHypothesis::ConstantAndTrend, LagOrder::Auto)?),
        tag(pp_test(x, UnitRootHypothesis::ConstantAndTrend)?),
        tag(kpss_test(x, UnitRootHypothesis::Constant)?),
    ])
}

/// Ljung-Box over two seasonal cycles of lags, then the normality battery.
fn residual_diagnostics(fit: &SarimaFit) -> Result<Vec<Diagnostic>, AppError> {
    let s = fit.spec;
    let lags = (2 * s.period).max(10).min(fit.residuals.len().saturating_sub(1));
    let fitdf = s.p + s.q + s.seasonal_p + s.seasonal_q;
    let mut out = vec![ljung_box(&fit.residuals, lags, fitdf)?];
    out.extend(normality_battery(&fit.residuals)?);
    Ok(out
        .into_iter()
        .map(|result| Diagnostic {
            target: "residuals".into(),
            result,
        })
        .collect())
}

fn fit_model(spec: &SarimaSpec, series: &TimeSeries) -> Result<SarimaFit, AppError> {
    Ok(fit_with(spec, series, &FitOptions::default())?)
}

fn forecast_dates(series: &TimeSeries, h: usize) -> Option<Vec<String>> {
    let start = series.start_date()?;
    let last = start + Duration::weeks(series.len() as i64 - 1);
    Some(
        (1..=h)
            .map(|t| (last + Duration::weeks(t as i64)).to_string())
            .collect(),
    )
}

/// Writes the document to `path` or prints it.
fn emit(doc: &Document, format: Format, path: Option<&Path>, out: &mut dyn Write) -> Result<(), AppError> {
    match path {
        Some(p) => {
            doc.write(format, p).map_err(|e| write_error(p, e))?;
        }
        None => {
            let text = match format {
                Format::Json => doc.render_json(),
                Format::Csv => doc.render_csv().map_err(|e| AppError::Usage(e.to_string()))?,
            };
            out.write_all(text.as_bytes())
                .map_err(|e| AppError::Usage(format!("cannot write output: {e}")))?;
        }
    }
    Ok(())
}

fn convergence_check(fit: &SarimaFit) -> Result<(), AppError> {
    if fit.converged {
        Ok(())
    } else {
        Err(AppError::Convergence(format!("{} did not converge", fit.spec)))
    }
}

/// Parses `argv` and runs the command; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), AppError> {
    let g = &cli.global;
    match &cli.command {
        Command::Diagnose { csv, model, train_len } => {
            let input = load(g, csv.as_deref())?;
            let series = window(&input.series, *train_len)?;
            let mut doc = Document::new(input.provenance);
            let mut status = Ok(());
            let items = match model.spec(g.period)? {
                Some(spec) => {
                    let fit = fit_model(&spec, &series)?;
                    status = convergence_check(&fit);
                    doc.push(report::model_section(
                        &fit,
                        &sample_name(&series, input.series.len()),
                        None,
                    ));
                    residual_diagnostics(&fit)?
                }
                None => {
                    let mut items = series_diagnostics(&series)?;
                    let lags = (2 * g.period).min(series.len().saturating_sub(1));
                    items.push(Diagnostic {
                        target: "series".into(),
                        result: ljung_box(series.values(), lags, 0)?,
                    });
                    items.extend(
                        normality_battery(series.values())?
                            .into_iter()
                            .map(|result| Diagnostic {
                                target: "series".into(),
                                result,
                            }),
                    );
                    items
                }
            };
            doc.push(report::diagnostics_section(&items));
            emit(&doc, g.format, None, out)?;
            status
        }
        Command::Fit { csv, model, train_len } => {
            let input = load(g, csv.as_deref())?;
            let spec = model
                .spec(g.period)?
                .ok_or_else(|| AppError::Usage("fit needs --order p,d,q".into()))?;
            let series = window(&input.series, *train_len)?;
            let fit = fit_model(&spec, &series)?;
            let mut doc = Document::new(input.provenance);
            doc.push(report::model_section(
                &fit,
                &sample_name(&series, input.series.len()),
                None,
            ));
            emit(&doc, g.format, None, out)?;
            convergence_check(&fit)
        }
        Command::Autofit { csv, search, train_len } => {
            let input = load(g, csv.as_deref())?;
            let series = window(&input.series, *train_len)?;
            let selection = select_sarima(&series, &search.bounds(g.period), &search.options())?;
            let fit = fit_model(&selection.best.spec, &series)?;
            let mut doc = Document::new(input.provenance);
            doc.push(report::model_section(
                &fit,
                &sample_name(&series, input.series.len()),
                Some(&selection.ranked),
            ));
            doc.push(report::candidates_section(&selection.ranked));
            emit(&doc, g.format, None, out)?;
            convergence_check(&fit)
        }
        Command::Compare { csv, search, train_len } => {
            let input = load(g, csv.as_deref())?;
            let (train, test) = io::split(&input.series, *train_len)?;
            let cmp = compare_methods(&train, &test, &search.bounds(g.period), &search.options())?;
            let mut doc = Document::new(input.provenance);
            doc.push(report::comparison_section(&cmp, train.len(), test.len()));
            emit(&doc, g.format, None, out)
        }
        Command::Forecast {
            csv,
            model,
            search,
            forecast: fa,
            svg,
        } => {
            let input = load(g, csv.as_deref())?;
            let series = &input.series;
            let (spec, ranked) = match model.spec(g.period)? {
                Some(spec) => (spec, None),
                None => {
                    let sel = select_sarima(series, &search.bounds(g.period), &search.options())?;
                    (sel.best.spec, Some(sel.ranked))
                }
            };
            let fit = fit_model(&spec, series)?;
            let fc = forecast(&fit, fa.horizon, &fa.levels.0)?;
            if let Some(path) = svg {
                let companion = plot::emit_fan_chart(series, &fc, path)?;
                let _ = writeln!(err, "wrote {} and {}", path.display(), companion.display());
            }
            let mut doc = Document::new(input.provenance);
            doc.push(report::model_section(
                &fit,
                &sample_name(series, series.len()),
                ranked.as_deref(),
            ));
            doc.push(report::forecast_section(
                &fc,
                &spec.to_string(),
                forecast_dates(series, fa.horizon).as_deref(),
            ));
            emit(&doc, g.format, None, out)?;
            convergence_check(&fit)
        }
        Command::Report {
            csv,
            output,
            model,
            search,
            forecast: fa,
            train_len,
        } => {
            let input = load(g, csv.as_deref())?;
            let chosen = model.spec(g.period)?;
            let (train, test) = io::split(&input.series, *train_len)?;
            let mut items = series_diagnostics(&train)?;
            let cmp = compare_methods(&train, &test, &search.bounds(g.period), &search.options())?;
            let spec = match chosen.or(cmp.arima_spec) {
                Some(spec) => spec,
                None if train.is_constant() => return Err(CoreError::ZeroVariance.into()),
                None => return Err(CoreError::NoConvergedCandidate.into()),
            };
            let fit = fit_model(&spec, &train)?;
            items.extend(residual_diagnostics(&fit)?);
            let full = fit_model(&spec, &input.series)?;
            let fc = forecast(&full, fa.horizon, &fa.levels.0)?;

            let mut doc = Document::new(input.provenance);
            doc.push(report::diagnostics_section(&items));
            doc.push(report::comparison_section(&cmp, train.len(), test.len()));
            let candidates = (chosen.is_none() && !cmp.candidates.is_empty()).then_some(cmp.candidates.as_slice());
            doc.push(report::model_section(
                &fit,
                &sample_name(&train, input.series.len()),
                candidates,
            ));
            if let Some(list) = candidates {
                doc.push(report::candidates_section(list));
            }
            let label = format!("{spec} refit on {}", sample_name(&input.series, input.series.len()));
            doc.push(report::forecast_section(
                &fc,
                &label,
                forecast_dates(&input.series, fa.horizon).as_deref(),
            ));
            emit(&doc, g.format, output.as_deref(), out)?;
            convergence_check(&fit).and_then(|()| convergence_check(&full))
        }
        Command::SeasonalPlot { csv, svg } => {
            let input = load(g, csv.as_deref())?;
            let companion = plot::emit_seasonal_plot(&input.series, svg)?;
            let _ = writeln!(err, "wrote {} and {}", svg.display(), companion.display());
            Ok(())
        }
        Command::Simulate {
            n,
            start,
            order,
            seasonal,
            ar,
            ma,
            sar,
            sma,
            drift,
            sigma2,
            output,
        } => {
            let drift_value = match drift.as_str() {
                "none" => None,
                s => Some(
                    s.parse::<f64>()
                        .map_err(|_| AppError::Usage(format!("bad --drift `{s}`")))?,
                ),
            };
            let spec = SarimaSpec::arima(order[0], order[1], order[2])
                .seasonal(seasonal[0], seasonal[1], seasonal[2], g.period)
                .with_drift(drift_value.is_some());
            spec.validate()?;
            let params = SarimaParams {
                mu_or_drift: drift_value.unwrap_or(0.0),
                phi: ar.0.clone(),
                theta: ma.0.clone(),
                seasonal_phi: sar.0.clone(),
                seasonal_theta: sma.0.clone(),
                sigma2: *sigma2,
            };
            let series = simulate(&spec, &params, *n, g.seed)?;
            let text = simulated_csv(&series, *start, &g.date_column, &g.value_column);
            match output {
                Some(p) => std::fs::write(p, text).map_err(|e| write_error(p, e)),
                None => out
                    .write_all(text.as_bytes())
                    .map_err(|e| AppError::Usage(format!("cannot write output: {e}"))),
            }
        }
    }
}

fn simulated_csv(series: &TimeSeries, start: NaiveDate, date_col: &str, value_col: &str) -> String {
    let mut text = format!("{date_col},{value_col}\n");
    for (i, v) in series.values().iter().enumerate() {
        let date = start + Duration::weeks(i as i64);
        let count = v.round().max(0.0) as u64;
        text.push_str(&format!("{date},{count}\n"));
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_definitions_are_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn level_ranges() {
        let l = parse_levels("10..99").unwrap().0;
        assert_eq!(l.len(), 10);
        assert_eq!(l[0], 0.1);
        assert_eq!(l[9], 0.99);
        assert_eq!(parse_levels("95").unwrap().0, vec![0.95]);
        assert_eq!(parse_levels("80,95").unwrap().0, vec![0.8, 0.95]);
        assert!(parse_levels("0..50").is_err());
        assert!(parse_levels("50,100").is_err());
        assert!(parse_levels("x").is_err());
    }

    #[test]
    fn triples() {
        assert_eq!(parse_triple("2,0,2").unwrap(), [2, 0, 2]);
        assert_eq!(parse_triple(" 1, 1 ,1").unwrap(), [1, 1, 1]);
        assert!(parse_triple("1,1").is_err());
        assert!(parse_triple("1,-1,0").is_err());
    }

    #[test]
    fn model_args_need_order() {
        let m = ModelArgs {
            order: None,
            seasonal: Some([1, 1, 1]),
            drift: false,
        };
        assert!(matches!(m.spec(52), Err(AppError::Usage(_))));
        let m = ModelArgs {
            order: Some([2, 0, 2]),
            seasonal: Some([1, 1, 1]),
            drift: true,
        };
        assert_eq!(m.spec(52).unwrap().unwrap().n_coefficients(), 7);
    }

    #[test]
    fn error_classes() {
        assert_eq!(
            AppError::from(CoreError::NoConvergedCandidate).exit_code(),
            EXIT_CONVERGENCE
        );
        assert_eq!(AppError::from(CoreError::ZeroVariance).exit_code(), EXIT_DATA);
        assert_eq!(AppError::from(DataError::Empty).exit_code(), EXIT_DATA);
    }
}

//! The `asymfit` command line.
//!
//! ```text
//! asymfit <gen|fit|report|scan|ideal|check|compare> --series <builtin:d1|builtin:partitions|file:PATH> [...]
//! ```
//!
//! Exit status is 0 on success, 1 on a data or validation failure and 2 on a
//! usage error.

mod emit;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::approximant::{product_form_values, verify_accuracy_bound, ApproximantSpec};
use crate::error::Error as CoreError;
use crate::fitting::{convergence_scan, fit_ratio_polynomial, solve_ideal, FitConfig};
use crate::metrics::{build_report, compare_growth, Anchors, ComparisonReport, ReportConfig};
use crate::numerics::{Number, PrecisionContext};
use crate::series::{check_sign_pattern, gen_partitions, gen_rect_d1, parse_series_file, SeriesTable};

pub use emit::{
    emit, emit_checks, emit_compare, emit_fits, emit_ideal, emit_scans, emit_series, parse_report_json,
    CheckEntry, FitEntry, Format, IdealEntry, ReportDocument, ReportEntry, ScanEntry,
};

/// The one environment variable consulted: overrides the default precision.
pub const PRECISION_ENV: &str = "ASYMFIT_PRECISION";

const DEFAULT_BUILTIN_NMAX: usize = 20;
const MIN_PRECISION: usize = 10;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    /// `--help` or `--version` output; not a failure.
    #[error("{0}")]
    Info(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 1,
            CliError::Info(_) => 0,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Config(msg) => CliError::Usage(msg),
            other => CliError::Data(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "asymfit", version, about = "Asymptotic fits of lattice-series coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a builtin series in the series file format
    Gen(Flags),
    /// Fit the ratio polynomial c_0..c_r
    Fit(Flags),
    /// Fit, transform to k, and compare Q/q ratios and the l-infinity error
    Report(Flags),
    /// Fit once per r and tabulate c_0 and c_1
    Scan(Flags),
    /// Solve the five-point exponential system by log-linearization
    Ideal(Flags),
    /// Verify the product-form approximant against --epsilon
    Check(Flags),
    /// Pairwise differences of k_-1 between lattices
    Compare(Flags),
}

#[derive(Debug, Clone, Args)]
struct Flags {
    /// builtin:d1, builtin:partitions or file:PATH; repeat for several lattices
    #[arg(long = "series", required = true)]
    series: Vec<String>,
    /// Ratio polynomial degree, or a comma list for scan
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Significant decimal digits (at least 10)
    #[arg(long)]
    precision: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Four increasing indices, e.g. 8,12,16,20
    #[arg(long)]
    anchors: Option<String>,
    /// Exclusive lower bound of the l-infinity range
    #[arg(long)]
    lower: Option<usize>,
    /// Relative accuracy bound for check
    #[arg(long)]
    epsilon: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandName {
    Gen,
    Fit,
    Report,
    Scan,
    Ideal,
    Check,
    Compare,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSource {
    BuiltinD1,
    BuiltinPartitions,
    File(PathBuf),
}

impl SeriesSource {
    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "builtin:d1" => Ok(SeriesSource::BuiltinD1),
            "builtin:partitions" => Ok(SeriesSource::BuiltinPartitions),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(SeriesSource::File(PathBuf::from(path))),
                _ => Err(CliError::Usage(format!(
                    "--series expects builtin:d1, builtin:partitions or file:PATH, got `{s}`"
                ))),
            },
        }
    }

    fn load(&self, nmax: Option<usize>) -> Result<SeriesTable, CliError> {
        match self {
            SeriesSource::BuiltinD1 => Ok(gen_rect_d1(nmax.unwrap_or(DEFAULT_BUILTIN_NMAX))),
            SeriesSource::BuiltinPartitions => Ok(gen_partitions(nmax.unwrap_or(DEFAULT_BUILTIN_NMAX))),
            SeriesSource::File(path) => load_file(path),
        }
    }
}

fn load_file(path: &Path) -> Result<SeriesTable, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    parse_series_file(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandName,
    pub series: Vec<SeriesSource>,
    pub r: Vec<usize>,
    pub nmax: Option<usize>,
    pub ctx: PrecisionContext,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub anchors: Option<Anchors>,
    pub lower: usize,
    pub epsilon: Number,
}

fn parse_list(flag: &str, s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("--{flag}: `{t}` is not a non-negative integer")))
        })
        .collect()
}

impl RunConfig {
    /// Parses `argv` (including the program name). `env_precision` is the
    /// value of [`PRECISION_ENV`], if set.
    pub fn from_args<I, T>(argv: I, env_precision: Option<&str>) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                CliError::Info(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        })?;
        let (command, flags) = match cli.command {
            Command::Gen(f) => (CommandName::Gen, f),
            Command::Fit(f) => (CommandName::Fit, f),
            Command::Report(f) => (CommandName::Report, f),
            Command::Scan(f) => (CommandName::Scan, f),
            Command::Ideal(f) => (CommandName::Ideal, f),
            Command::Check(f) => (CommandName::Check, f),
            Command::Compare(f) => (CommandName::Compare, f),
        };

        let series = flags
            .series
            .iter()
            .map(|s| SeriesSource::parse(s))
            .collect::<Result<Vec<_>, _>>()?;

        let r = match (&flags.r, command) {
            (Some(s), _) => parse_list("r", s)?,
            (None, CommandName::Scan) => (1..=6).collect(),
            (None, _) => vec![6],
        };
        if r.contains(&0) {
            return Err(CliError::Usage("--r: degrees must be at least 1".into()));
        }
        if command != CommandName::Scan && r.len() != 1 {
            return Err(CliError::Usage("--r takes a list only for scan".into()));
        }

        if flags.nmax == Some(0) {
            return Err(CliError::Usage("--nmax must be at least 1".into()));
        }

        let digits = match (flags.precision, env_precision) {
            (Some(p), _) => p,
            (None, Some(env)) => env.trim().parse().map_err(|_| {
                CliError::Usage(format!("{PRECISION_ENV}: `{env}` is not a positive integer"))
            })?,
            (None, None) => PrecisionContext::DEFAULT_DIGITS,
        };
        if digits < MIN_PRECISION {
            return Err(CliError::Usage(format!(
                "precision must be at least {MIN_PRECISION}, got {digits}"
            )));
        }
        let ctx = PrecisionContext::new(digits)?;

        let anchors = flags
            .anchors
            .as_deref()
            .map(|s| parse_list("anchors", s).and_then(|pts| Anchors::from_points(&pts).map_err(CliError::from)))
            .transpose()?;

        let epsilon = match &flags.epsilon {
            Some(s) => Number::Rational(
                Number::parse_exact(s).map_err(|e| CliError::Usage(format!("--epsilon: {e}")))?,
            ),
            None => Number::ratio(1, 1000),
        };
        if !epsilon.is_positive() {
            return Err(CliError::Usage("--epsilon must be positive".into()));
        }

        match command {
            CommandName::Gen => {
                if series.len() != 1 || matches!(series[0], SeriesSource::File(_)) {
                    return Err(CliError::Usage("gen takes exactly one builtin series".into()));
                }
            }
            CommandName::Compare if series.len() < 2 => {
                return Err(CliError::Usage("compare needs at least two --series".into()));
            }
            _ => {}
        }

        Ok(RunConfig {
            command,
            series,
            r,
            nmax: flags.nmax,
            ctx,
            format: flags.format,
            out: flags.out,
            anchors,
            lower: flags.lower.unwrap_or(8),
            epsilon,
        })
    }

    fn fit_config(&self) -> FitConfig {
        FitConfig {
            r: self.r[0],
            nmax: self.nmax,
        }
    }

    fn report_config(&self) -> ReportConfig {
        ReportConfig {
            fit: self.fit_config(),
            anchors: self.anchors,
            lower: self.lower,
            ctx: self.ctx,
        }
    }
}

/// The bytes a command produced and the status it should exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

/// Applies `f` to every series on its own thread, keeping input order.
fn per_series<T, F>(series: &[SeriesTable], f: F) -> Result<Vec<T>, CliError>
where
    T: Send,
    F: Fn(&SeriesTable) -> Result<T, CoreError> + Sync,
{
    let results: Vec<Result<T, CoreError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = series.iter().map(|s| scope.spawn(|| f(s))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    results
        .into_iter()
        .zip(series)
        .map(|(r, s)| r.map_err(|e| with_lattice(e, &s.meta().name)))
        .collect()
}

fn with_lattice(e: CoreError, name: &str) -> CliError {
    match CliError::from(e) {
        CliError::Usage(m) => CliError::Usage(format!("{name}: {m}")),
        CliError::Data(m) => CliError::Data(format!("{name}: {m}")),
        info @ CliError::Info(_) => info,
    }
}

/// Runs a validated configuration without touching stdout or the file system
/// beyond reading series files.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let series = cfg
        .series
        .iter()
        .map(|s| {
            // gen writes exactly nmax terms; elsewhere nmax only bounds the fit
            let len = match cfg.command {
                CommandName::Gen => cfg.nmax,
                _ => Some(cfg.nmax.map_or(DEFAULT_BUILTIN_NMAX, |n| n.max(DEFAULT_BUILTIN_NMAX))),
            };
            s.load(len)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let digits = cfg.ctx.digits();
    let ok = |output| Ok(Outcome { output, status: 0 });

    match cfg.command {
        CommandName::Gen => ok(emit_series(&series[0], cfg.format)),
        CommandName::Fit => {
            let fc = cfg.fit_config();
            let fits = per_series(&series, |s| {
                let nmax = fc.resolve(s)?;
                Ok(FitEntry {
                    lattice: s.meta().clone(),
                    r: fc.r,
                    nmax,
                    c: fit_ratio_polynomial(s, &fc)?,
                })
            })?;
            ok(emit_fits(&fits, cfg.format, digits))
        }
        CommandName::Report => {
            let rc = cfg.report_config();
            let reports = per_series(&series, |s| build_report(s, &rc))?;
            ok(emit(&reports, cfg.format, digits))
        }
        CommandName::Scan => {
            let scans = per_series(&series, |s| {
                let nmax = cfg.nmax.unwrap_or_else(|| s.nmax());
                Ok(ScanEntry {
                    lattice: s.meta().clone(),
                    nmax,
                    rows: convergence_scan(s, &cfg.r, Some(nmax))?,
                })
            })?;
            ok(emit_scans(&scans, cfg.format, digits))
        }
        CommandName::Ideal => {
            let entries = per_series(&series, |s| {
                let top = cfg.nmax.unwrap_or_else(|| s.nmax());
                Ok(IdealEntry {
                    lattice: s.meta().clone(),
                    top_index: top,
                    k: solve_ideal(s, top, cfg.ctx)?,
                })
            })?;
            ok(emit_ideal(&entries, cfg.format, digits))
        }
        CommandName::Check => {
            let fc = cfg.fit_config();
            let entries = per_series(&series, |s| {
                let sign = check_sign_pattern(s).to_string();
                let nmax = fc.resolve(s)?;
                let c = fit_ratio_polynomial(s, &fc)?;
                let spec = ApproximantSpec::at_fit_window(c, nmax)?;
                // indices past nmax are out of sample; below them the
                // product form reproduces the data exactly
                let values = product_form_values(s, &spec)?;
                let check = verify_accuracy_bound(s, &values, &cfg.epsilon)?;
                Ok(CheckEntry {
                    lattice: s.meta().clone(),
                    sign,
                    r: fc.r,
                    k_anchor: spec.k_anchor,
                    check,
                })
            })?;
            let status = if entries.iter().all(|e| e.check.passed) { 0 } else { 1 };
            Ok(Outcome {
                output: emit_checks(&entries, cfg.format, digits),
                status,
            })
        }
        CommandName::Compare => {
            let rc = cfg.report_config();
            let reports: Vec<ComparisonReport> = per_series(&series, |s| build_report(s, &rc))?;
            let rates: Vec<(String, Number)> = reports
                .iter()
                .map(|r| (r.lattice.name.clone(), r.k.k_minus1.clone()))
                .collect();
            ok(emit_compare(&rates, &compare_growth(&reports), cfg.format, digits))
        }
    }
}

/// Parses, executes and writes the result to `--out` or `stdout`; errors go
/// to `stderr`. Returns the process exit code.
pub fn run_with<I, T>(argv: I, env_precision: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let result = RunConfig::from_args(argv, env_precision).and_then(|cfg| {
        let outcome = execute(&cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, &outcome.output)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?,
            None => stdout
                .write_all(outcome.output.as_bytes())
                .map_err(|e| CliError::Data(e.to_string()))?,
        }
        Ok(outcome.status)
    });
    match result {
        Ok(status) => status,
        Err(CliError::Info(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "asymfit: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(PRECISION_ENV).ok();
    run_with(argv, env.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

//! Command implementations behind the `spectradim` binary.
//!
//! Every command returns an [`Output`] (stdout text plus stderr notes) or a
//! [`CliError`] carrying the process exit code, so the commands can be
//! driven and checked without spawning a process.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use spectradim::stats::{correlate, PairedSeries};
use spectradim::{
    estimate_from_spectrum, full_spectrum_dense, generate_complete, generate_cycle,
    generate_lattice, largest_connected_component, oracle_time_grid, partial_spectrum_iterative,
    return_probability_curve, spectrum, EstimateParams, Error, SpectralDimension, SpectrumConfig,
};

pub mod args;
pub mod input;
pub mod report;

use args::{
    BatchArgs, Cli, Command, CorrelateArgs, EstimateArgs, GenArgs, GenKind, OracleArgs,
    ReportFormat, SpectrumArgs, SpectrumFormat,
};
use input::load_graph;
use report::{rows_to_csv, run_pipeline, OracleReport, Row, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
/// Malformed input, unreadable file or bad argument.
pub const EXIT_INPUT: i32 = 2;
/// The eigensolver failed or refused the problem size.
pub const EXIT_SOLVER: i32 = 3;
/// The spectrum was computed but the estimate is not defined.
pub const EXIT_REFUSED: i32 = 4;

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. }
        | Error::UnsupportedFormat(_)
        | Error::EmptyGraph
        | Error::InvalidArgument(_)
        | Error::LengthMismatch { .. }
        | Error::UndefinedCorrelation(_)
        | Error::Io(_) => EXIT_INPUT,
        Error::DenseThresholdExceeded { .. }
        | Error::NoConvergence { .. }
        | Error::DenseSolver
        | Error::PartialSpectrum => EXIT_SOLVER,
        Error::InsufficientLowSpectrum { .. }
        | Error::UncoveredFitWindow { .. }
        | Error::NonMonotoneFit { .. }
        | Error::ZeroEigenvalueContamination { .. } => EXIT_REFUSED,
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    /// Human-readable diagnostics for stderr.
    pub notes: Vec<String>,
}

impl Output {
    fn text(stdout: String) -> Self {
        Output {
            stdout,
            notes: Vec::new(),
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Estimate(a) => estimate(a),
        Command::Spectrum(a) => spectrum_cmd(a),
        Command::Oracle(a) => oracle(a),
        Command::Gen(a) => gen(a),
        Command::Batch(a) => batch(a),
        Command::Correlate(a) => correlate_cmd(a),
    }
}

fn warnings(list: &[String]) -> Vec<String> {
    list.iter().map(|w| format!("warning: {w}")).collect()
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn estimate(a: EstimateArgs) -> Result<Output, CliError> {
    let params = a.pipeline.params();
    params.spectrum.validate()?;
    let outcome = run_pipeline(&a.input, &a.input_args, &params);
    match a.output {
        ReportFormat::Json => {
            let report = outcome.map_err(|f| CliError::from(f.error))?;
            Ok(Output {
                stdout: to_json(&report),
                notes: warnings(&report.warnings),
            })
        }
        ReportFormat::Csv => {
            let row = Row::from_outcome(display_name(&a.input), &outcome, true);
            let stdout = rows_to_csv(&[row]);
            match outcome {
                Ok(r) => Ok(Output {
                    stdout,
                    notes: warnings(&r.warnings),
                }),
                Err(f) => Err(f.error.into()),
            }
        }
    }
}

fn spectrum_cmd(a: SpectrumArgs) -> Result<Output, CliError> {
    let cfg = SpectrumConfig {
        dense_threshold: a.dense_threshold,
        seed: a.seed,
        ..SpectrumConfig::default()
    };
    cfg.validate()?;
    let g = load_graph(&a.input, &a.input_args)?.graph;
    let spec = if a.full {
        full_spectrum_dense(&g, &cfg)?
    } else if let Some(m) = a.smallest {
        if m == 0 || m >= g.n() {
            return Err(CliError::input(format!(
                "--smallest must be in 1..{}, got {m}; use --full for the whole spectrum",
                g.n()
            )));
        }
        partial_spectrum_iterative(&g, m, &cfg)?
    } else {
        spectrum(&g, &cfg)?
    };
    let stdout = match a.output {
        SpectrumFormat::Json => {
            let mut s = spec.to_json();
            s.push('\n');
            s
        }
        SpectrumFormat::Txt => spec.to_text(),
    };
    Ok(Output::text(stdout))
}

fn oracle(a: OracleArgs) -> Result<Output, CliError> {
    let cfg = SpectrumConfig {
        dense_threshold: a.dense_threshold,
        ..SpectrumConfig::default()
    };
    let params = EstimateParams {
        grid_size: a.grid_size,
        s: a.s,
        spectrum: cfg,
        use_lcc: !a.keep_disconnected,
        ..EstimateParams::default()
    };
    let g = load_graph(&a.input, &a.input_args)?.graph;
    let g = if params.use_lcc {
        largest_connected_component(&g)
    } else {
        g
    };
    let spec = full_spectrum_dense(&g, &cfg)?;
    let times = oracle_time_grid(&spec, a.points)?;
    let curve = return_probability_curve(&spec, &times)?;
    let (weyl, weyl_error) = match estimate_from_spectrum(&spec, &params) {
        Ok(e) => (Some(e), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let difference = match (curve.fitted_dimension, weyl.map(|w| w.d_s)) {
        (Some(f), Some(SpectralDimension::Finite(d))) => Some((f - d).abs()),
        _ => None,
    };
    let mut notes = Vec::new();
    if let Some(e) = &weyl_error {
        notes.push(format!("warning: eigenvalue-growth estimate refused: {e}"));
    }
    let report = OracleReport {
        schema_version: SCHEMA_VERSION,
        input: a.input.display().to_string(),
        n: g.n(),
        curve,
        weyl,
        weyl_error,
        difference,
    };
    Ok(Output {
        stdout: to_json(&report),
        notes,
    })
}

fn gen(a: GenArgs) -> Result<Output, CliError> {
    let (g, dimension) = match &a.kind {
        GenKind::Lattice { dims, periodic } => {
            (generate_lattice(dims, *periodic)?, dims.len().to_string())
        }
        GenKind::Complete { n } => (generate_complete(*n)?, "inf".to_string()),
        GenKind::Cycle { n } => (generate_cycle(*n)?, "1".to_string()),
    };
    let text = g.to_edge_list();
    let notes = vec![format!(
        "n={} edges={} d={dimension}",
        g.n(),
        g.edge_count()
    )];
    match a.out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| {
                CliError::input(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Output {
                stdout: String::new(),
                notes,
            })
        }
        None => Ok(Output {
            stdout: text,
            notes,
        }),
    }
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Graph files of a batch: the non-hidden regular files of a directory in
/// name order, or the paths listed in a manifest (relative to it).
pub fn batch_inputs(path: &Path) -> Result<Vec<PathBuf>, CliError> {
    let meta = fs::metadata(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    if meta.is_dir() {
        let mut files = Vec::new();
        let entries = fs::read_dir(path)
            .map_err(|e| CliError::input(format!("cannot list {}: {e}", path.display())))?;
        for entry in entries {
            let entry = entry.map_err(|e| CliError::input(e.to_string()))?;
            let hidden = entry.file_name().to_string_lossy().starts_with('.');
            if !hidden && entry.path().is_file() {
                files.push(entry.path());
            }
        }
        files.sort();
        return Ok(files);
    }
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| base.join(l))
        .collect())
}

fn batch(a: BatchArgs) -> Result<Output, CliError> {
    let params = a.pipeline.params();
    params.spectrum.validate()?;
    let inputs = batch_inputs(&a.path)?;
    let jobs = match a.jobs {
        Some(0) => return Err(CliError::input("--jobs must be at least 1")),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::input(format!("cannot start worker pool: {e}")))?;
    let timing = !a.no_timing;
    let rows: Vec<Row> = pool.install(|| {
        inputs
            .par_iter()
            .map(|p| {
                let outcome = run_pipeline(p, &a.input_args, &params);
                Row::from_outcome(display_name(p), &outcome, timing)
            })
            .collect()
    });
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    let mut notes = Vec::new();
    if failed > 0 {
        notes.push(format!("warning: {failed} of {} inputs failed", rows.len()));
    }
    Ok(Output {
        stdout: rows_to_csv(&rows),
        notes,
    })
}

fn correlate_cmd(a: CorrelateArgs) -> Result<Output, CliError> {
    let file = fs::File::open(&a.csv)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", a.csv.display())))?;
    let series = PairedSeries::from_csv(file)?;
    let report = correlate(&series, a.bins)?;
    let mut notes = Vec::new();
    if report.dropped > 0 {
        notes.push(format!(
            "warning: dropped {} rows with missing or non-finite values",
            report.dropped
        ));
    }
    Ok(Output {
        stdout: to_json(&report),
        notes,
    })
}

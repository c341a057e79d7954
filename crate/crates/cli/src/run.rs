//! Batch pipelines: load a configuration, realize the symbol, probe the
//! eigenvalue grid, and assemble the report.

use std::path::Path;

use num_complex::Complex64;
use toeplitz_spectra::annulus::{
    alpha_curve, annihilator_defect_annulus, eigenvector_for, index_from_symbol, uniqueness_gap,
    verify_eigenpair,
};
use toeplitz_spectra::errors::Error as CoreError;
use toeplitz_spectra::neil::{
    annihilator_defect_neil, eigenvector_for as neil_eigenvector_for, lipschitz_probe,
    verify_eigenpair_neil, ChartCoordinate,
};
use toeplitz_spectra::numerics::UniformGrid;
use toeplitz_spectra::symbols::{
    classify_annulus, classify_neil, realize, scan_neil_c, AnnulusSymbol, CircleSymbol,
    IntervalClassification,
};

use crate::config::{linspace, Mode, RunConfig};
use crate::report::{
    emit_csv, emit_json, timestamp_now, ChartRecord, CurveSummary, EigenReport, LambdaRecord,
    RecordStatus, ToolInfo,
};

/// CLI failure with the exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad configuration or unusable inputs: exit status 2.
    Config(String),
    /// A verification or self-test check failed: exit status 1.
    Failure(String),
}

impl CliError {
    /// The process exit status for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    /// The diagnostic for the error stream.
    pub fn message(&self) -> &str {
        match self {
            CliError::Config(msg) | CliError::Failure(msg) => msg,
        }
    }
}

fn config_err(context: &str, err: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("{context}: {err}"))
}

/// Reads and validates a JSON run configuration.
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| config_err(&format!("could not read {}", path.display()), e))?;
    let config: RunConfig = serde_json::from_str(&raw)
        .map_err(|e| config_err(&format!("could not parse {}", path.display()), e))?;
    config.validate().map_err(CliError::Config)?;
    Ok(config)
}

/// Command-line overrides applied on top of the config file.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    /// Replaces `n_points`.
    pub n_points: Option<usize>,
    /// Replaces `K`.
    pub k: Option<usize>,
    /// Replaces `lambda.count`.
    pub lambda_count: Option<usize>,
    /// Forces the weight-coefficient phase scan.
    pub c_scan: bool,
    /// Replaces the JSON output path.
    pub out: Option<std::path::PathBuf>,
    /// Replaces the CSV output path.
    pub csv: Option<std::path::PathBuf>,
}

/// Applies overrides and re-validates.
pub fn apply_overrides(
    mut config: RunConfig,
    overrides: &Overrides,
) -> Result<RunConfig, CliError> {
    if let Some(n) = overrides.n_points {
        config.n_points = n;
    }
    if let Some(k) = overrides.k {
        config.k = k;
    }
    if let Some(count) = overrides.lambda_count {
        config.lambda.count = count;
    }
    if overrides.c_scan {
        config.c_scan = true;
    }
    if let Some(path) = &overrides.out {
        config.out = Some(path.clone());
    }
    if let Some(path) = &overrides.csv {
        config.csv = Some(path.clone());
    }
    config.validate().map_err(CliError::Config)?;
    Ok(config)
}

/// The eigenvalue grid implied by the config and the classification: explicit
/// bounds verbatim, or the classified interval shrunk by 1% margins at each
/// end when `auto` is set.
///
/// An `auto` grid over a degenerate classification is empty: there is no
/// interval to sample.
pub fn lambda_grid(config: &RunConfig, classification: &IntervalClassification) -> Vec<f64> {
    if config.lambda.auto {
        // Negated so a NaN width yields an empty grid rather than a scan.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !classification.is_interval() || !(classification.width() > 0.0) {
            return Vec::new();
        }
        let margin = 0.01 * classification.width();
        linspace(
            classification.lower + margin,
            classification.upper - margin,
            config.lambda.count,
        )
    } else {
        // Validation guarantees the bounds are present and ordered.
        linspace(
            config.lambda.min.unwrap_or(0.0),
            config.lambda.max.unwrap_or(0.0),
            config.lambda.count,
        )
    }
}

/// Splits a core error into a per-row rejection reason (`NotEigenvalue`) or a
/// fatal configuration error (anything else).
fn row_or_fatal(err: CoreError) -> Result<String, CliError> {
    match err {
        CoreError::NotEigenvalue { reason, .. } => Ok(reason),
        other => Err(CliError::Config(format!("run failed: {other}"))),
    }
}

fn annulus_row(symbol: &AnnulusSymbol, lambda: f64, k: usize) -> Result<LambdaRecord, CliError> {
    let record = match eigenvector_for(symbol, lambda) {
        Ok(record) => record,
        Err(err) => return Ok(LambdaRecord::rejection(lambda, row_or_fatal(err)?)),
    };
    let record = match verify_eigenpair(symbol, record, k) {
        Ok(record) => record,
        Err(err) => return Ok(LambdaRecord::rejection(lambda, row_or_fatal(err)?)),
    };
    let record = match uniqueness_gap(symbol, record, k) {
        Ok(record) => record,
        Err(err) => return Ok(LambdaRecord::rejection(lambda, row_or_fatal(err)?)),
    };
    let index = index_from_symbol(symbol, lambda)
        .map_err(|e| CliError::Config(format!("run failed: {e}")))?;

    let mut row = LambdaRecord::blank(lambda);
    row.alpha = Some(record.alpha().alpha());
    row.c_sign = Some(record.c_sign());
    row.residual = record.residual();
    row.tail_energy = record.tail_energy();
    row.gap = record.gap();
    row.clamped_samples = index.clamped_samples;
    if index.excessive_clamping {
        row.warnings
            .push("more than 1% of boundary samples clamped; the index is floor-dominated".into());
    }
    Ok(row)
}

/// Runs the annulus pipeline and assembles (but does not write) the report.
pub fn run_annulus(config: &RunConfig) -> Result<EigenReport, CliError> {
    if config.mode != Mode::Annulus {
        return Err(CliError::Config(
            "run_annulus requires mode = annulus".into(),
        ));
    }
    let q = config
        .effective_q()
        .ok_or_else(|| CliError::Config("annulus mode requires an inner radius q".into()))?;
    let grid = UniformGrid::new(config.n_points).map_err(|e| config_err("invalid n_points", e))?;
    let mut spec = config.symbol.clone();
    spec.q = Some(q);
    let symbol: AnnulusSymbol = realize(&spec, &grid)
        .and_then(|realized| realized.into_annulus())
        .map_err(|e| config_err("could not realize the symbol", e))?;

    let classification = classify_annulus(&symbol);
    let lambdas = lambda_grid(config, &classification);

    let mut records = Vec::with_capacity(lambdas.len());
    for &lambda in &lambdas {
        records.push(annulus_row(&symbol, lambda, config.k)?);
    }

    // The index curve is defined over the accepted, strictly interior rows.
    let curve_lambdas: Vec<f64> = records
        .iter()
        .filter(|row| {
            row.status == RecordStatus::Ok
                && classification.lower < row.lambda
                && row.lambda < classification.upper
        })
        .map(|row| row.lambda)
        .collect();
    let curve = if classification.is_interval() && !curve_lambdas.is_empty() {
        let curve = alpha_curve(&symbol, &curve_lambdas)
            .map_err(|e| CliError::Config(format!("index curve failed: {e}")))?;
        let mut points = curve.points.iter();
        for row in &mut records {
            if row.status == RecordStatus::Ok && curve_lambdas.contains(&row.lambda) {
                if let Some(point) = points.next() {
                    row.beta_unwrapped = Some(point.beta_unwrapped);
                }
            }
        }
        Some(CurveSummary {
            wrap_count: Some(curve.wrap_count),
            lipschitz_probe: None,
        })
    } else {
        None
    };

    let annihilator_defect = annihilator_defect_annulus(q, 512, 16)
        .map_err(|e| CliError::Config(format!("annihilator self-test failed to run: {e}")))?;

    Ok(EigenReport {
        tool: ToolInfo::current(),
        timestamp: timestamp_now(),
        mode: Mode::Annulus,
        config: config.clone(),
        classification,
        scanned_c: None,
        annihilator_defect,
        records,
        curve,
    })
}

fn neil_row(
    symbol: &CircleSymbol,
    c: Complex64,
    lambda: f64,
    k: usize,
) -> Result<LambdaRecord, CliError> {
    let record = match neil_eigenvector_for(symbol, c, lambda) {
        Ok(record) => record,
        Err(err) => return Ok(LambdaRecord::rejection(lambda, row_or_fatal(err)?)),
    };
    let record = match verify_eigenpair_neil(symbol, &record, k) {
        Ok(record) => record,
        Err(err) => return Ok(LambdaRecord::rejection(lambda, row_or_fatal(err)?)),
    };

    let mut row = LambdaRecord::blank(lambda);
    row.value0 = Some(record.f().value0());
    let d0 = record.f().deriv0();
    row.deriv0 = Some([d0.re, d0.im]);
    row.chart = Some(match record.point().chart() {
        ChartCoordinate::Zeta(z) => ChartRecord {
            chart: "zeta",
            value: [z.re, z.im],
        },
        ChartCoordinate::Xi(z) => ChartRecord {
            chart: "xi",
            value: [z.re, z.im],
        },
    });
    let (a, b) = record.subspace().span_vector();
    row.subspace_span = Some([[a.re, a.im], [b.re, b.im]]);
    row.residual = record.residual();
    row.gap = record.gap();
    row.clamped_samples = record.clamped_samples();
    if record.clamped_samples() * 100 > symbol.f().len() {
        row.warnings
            .push("more than 1% of weight samples clamped; the modulus is floor-dominated".into());
    }
    Ok(row)
}

/// Runs the disc pipeline and assembles (but does not write) the report.
pub fn run_neil(config: &RunConfig) -> Result<EigenReport, CliError> {
    if config.mode != Mode::Neil {
        return Err(CliError::Config("run_neil requires mode = neil".into()));
    }
    let grid = UniformGrid::new(config.n_points).map_err(|e| config_err("invalid n_points", e))?;
    let symbol: CircleSymbol = realize(&config.symbol, &grid)
        .and_then(|realized| realized.into_circle())
        .map_err(|e| config_err("could not realize the symbol", e))?;

    let (c, classification, scanned_c) = if config.c_scan {
        let (c, classification) = scan_neil_c(&symbol, 16)
            .map_err(|e| config_err("weight-coefficient scan failed", e))?;
        (c, classification, Some([c.re, c.im]))
    } else {
        let [re, im] = config
            .c
            .ok_or_else(|| CliError::Config("neil mode requires c or the c-scan flag".into()))?;
        let c = Complex64::new(re, im);
        (c, classify_neil(&symbol, c), None)
    };

    let lambdas = lambda_grid(config, &classification);
    let mut records = Vec::with_capacity(lambdas.len());
    for &lambda in &lambdas {
        records.push(neil_row(&symbol, c, lambda, config.k)?);
    }

    let probe_lambdas: Vec<f64> = records
        .iter()
        .filter(|row| row.status == RecordStatus::Ok)
        .map(|row| row.lambda)
        .collect();
    let probe = lipschitz_probe(&symbol, c, &probe_lambdas)
        .map_err(|e| CliError::Config(format!("eigenvalue-curve probe failed: {e}")))?;
    let curve = Some(CurveSummary {
        wrap_count: None,
        lipschitz_probe: Some(probe),
    });

    let annihilator_defect = annihilator_defect_neil(512, 16, c)
        .map_err(|e| CliError::Config(format!("annihilator self-test failed to run: {e}")))?;

    Ok(EigenReport {
        tool: ToolInfo::current(),
        timestamp: timestamp_now(),
        mode: Mode::Neil,
        config: config.clone(),
        classification,
        scanned_c,
        annihilator_defect,
        records,
        curve,
    })
}

/// Runs the configured pipeline and writes the JSON/CSV outputs.
///
/// The JSON report goes to `--out` (or stdout); the per-λ rows additionally
/// go to `--csv` when that path is set.
pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    let report = match config.mode {
        Mode::Annulus => run_annulus(config)?,
        Mode::Neil => run_neil(config)?,
    };
    emit_json(&report, config.out.as_deref()).map_err(CliError::Config)?;
    if let Some(csv_path) = &config.csv {
        emit_csv(report.mode, &report.records, csv_path).map_err(CliError::Config)?;
    }
    Ok(())
}

//! Machine-readable run reports: JSON document shapes and the CSV curve
//! emitter that mirrors them row for row.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use toeplitz_spectra::symbols::IntervalClassification;

use crate::config::{Mode, RunConfig};

/// Name and version of the emitting binary.
#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    /// Binary name.
    pub name: &'static str,
    /// Crate version.
    pub version: &'static str,
}

impl ToolInfo {
    /// The current binary.
    pub fn current() -> Self {
        Self {
            name: "tspectra",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// Seconds since the Unix epoch; the one field excluded from determinism
/// comparisons.
pub fn timestamp_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Outcome of one spectral-parameter probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    /// The constructor produced a candidate (and verification ran).
    Ok,
    /// The parameter was rejected with a recorded reason.
    NotEigenvalue,
}

/// Affine chart data of a projective point.
#[derive(Debug, Clone, Serialize)]
pub struct ChartRecord {
    /// `"zeta"` (second coordinate dominates) or `"xi"`.
    pub chart: &'static str,
    /// The affine coordinate as `[re, im]`.
    pub value: [f64; 2],
}

/// One row of the per-parameter results, covering both modes; fields that do
/// not apply to the mode (or to a rejected parameter) are omitted.
#[derive(Debug, Clone, Serialize)]
pub struct LambdaRecord {
    /// The probed spectral parameter.
    pub lambda: f64,
    /// Constructor outcome.
    pub status: RecordStatus,
    /// Rejection reason when `status` is `not_eigenvalue`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Annulus: wrapped Hardy-space index in `[0, 1)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// Annulus: sign of the eigenvector's distinguished component.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_sign: Option<i32>,
    /// Annulus: unwrapped index exponent along the curve.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_unwrapped: Option<f64>,
    /// Annulus: energy fraction beyond half the truncation band.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_energy: Option<f64>,
    /// Disc: outer candidate's value at the origin.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value0: Option<f64>,
    /// Disc: outer candidate's derivative at the origin as `[re, im]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deriv0: Option<[f64; 2]>,
    /// Disc: chart coordinates of the projective point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartRecord>,
    /// Disc: spanning vector of the selected subspace, `[[re, im], [re, im]]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace_span: Option<[[f64; 2]; 2]>,
    /// Relative residual of the verified eigenpair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Distance from the parameter to the rest of the truncated spectrum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    /// Number of boundary samples clamped during construction.
    pub clamped_samples: usize,
    /// Human-readable cautions (heavy clamping, ...).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl LambdaRecord {
    /// A blank row for `lambda`; callers fill the mode-specific fields.
    pub fn blank(lambda: f64) -> Self {
        Self {
            lambda,
            status: RecordStatus::Ok,
            reason: None,
            alpha: None,
            c_sign: None,
            beta_unwrapped: None,
            tail_energy: None,
            value0: None,
            deriv0: None,
            chart: None,
            subspace_span: None,
            residual: None,
            gap: None,
            clamped_samples: 0,
            warnings: Vec::new(),
        }
    }

    /// A rejection row.
    pub fn rejection(lambda: f64, reason: String) -> Self {
        let mut row = Self::blank(lambda);
        row.status = RecordStatus::NotEigenvalue;
        row.reason = Some(reason);
        row
    }
}

/// Curve-level summaries that only make sense for the whole run.
#[derive(Debug, Clone, Serialize)]
pub struct CurveSummary {
    /// Annulus: whole number of index wraps along the curve.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wrap_count: Option<usize>,
    /// Disc: largest chordal difference quotient over consecutive points.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lipschitz_probe: Option<f64>,
}

/// The full JSON report of one batch run.
#[derive(Debug, Clone, Serialize)]
pub struct EigenReport {
    /// Emitting binary.
    pub tool: ToolInfo,
    /// Emission time (seconds since epoch); excluded from comparisons.
    pub timestamp: u64,
    /// Pipeline that produced the report.
    pub mode: Mode,
    /// Effective configuration after command-line overrides.
    pub config: RunConfig,
    /// Classified candidate spectrum.
    pub classification: IntervalClassification,
    /// Disc: weight coefficient chosen by the phase scan, as `[re, im]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scanned_c: Option<[f64; 2]>,
    /// Annihilating-measure self-test defect for the run's geometry.
    pub annihilator_defect: f64,
    /// Per-parameter rows, sorted by `lambda`.
    pub records: Vec<LambdaRecord>,
    /// Whole-curve summaries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSummary>,
}

/// Result of one self-test check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    /// Stable identifier of the check.
    pub name: &'static str,
    /// Measured defect (compared against `tolerance`).
    pub value: f64,
    /// Pass threshold after any tolerance scaling.
    pub tolerance: f64,
    /// Whether `value <= tolerance`.
    pub passed: bool,
}

/// The self-test report.
#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    /// Emitting binary.
    pub tool: ToolInfo,
    /// Emission time (seconds since epoch); excluded from comparisons.
    pub timestamp: u64,
    /// Always `"selftest"`.
    pub mode: &'static str,
    /// Multiplier applied to every tolerance.
    pub tolerance_scale: f64,
    /// All checks, in a fixed order.
    pub checks: Vec<CheckResult>,
    /// Conjunction of the per-check outcomes.
    pub passed: bool,
}

/// Serializes a report as pretty JSON with a trailing newline.
pub fn to_json_string(report: &impl Serialize) -> Result<String, String> {
    serde_json::to_string_pretty(report)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| format!("could not serialize report: {e}"))
}

/// Writes a report to `path`, or to stdout when no path is given.
pub fn emit_json(report: &impl Serialize, path: Option<&Path>) -> Result<(), String> {
    let rendered = to_json_string(report)?;
    match path {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("could not write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.as_bytes())
                .map_err(|e| format!("could not write to stdout: {e}"))
        }
    }
}

fn float_field(value: Option<f64>) -> String {
    value.map(|v| format!("{v}")).unwrap_or_default()
}

/// Writes the per-parameter rows as CSV, one row per JSON record.
pub fn emit_csv(mode: Mode, records: &[LambdaRecord], path: &Path) -> Result<(), String> {
    let mut writer = csv::Writer::from_path(path)
        .map_err(|e| format!("could not open {}: {e}", path.display()))?;
    let err = |e: csv::Error| format!("could not write {}: {e}", path.display());

    match mode {
        Mode::Annulus => {
            writer
                .write_record([
                    "lambda",
                    "status",
                    "alpha",
                    "c_sign",
                    "beta_unwrapped",
                    "residual",
                    "gap",
                    "tail_energy",
                    "clamped_samples",
                    "reason",
                ])
                .map_err(err)?;
            for row in records {
                writer
                    .write_record([
                        format!("{}", row.lambda),
                        status_name(row.status).to_string(),
                        float_field(row.alpha),
                        row.c_sign.map(|s| s.to_string()).unwrap_or_default(),
                        float_field(row.beta_unwrapped),
                        float_field(row.residual),
                        float_field(row.gap),
                        float_field(row.tail_energy),
                        row.clamped_samples.to_string(),
                        row.reason.clone().unwrap_or_default(),
                    ])
                    .map_err(err)?;
            }
        }
        Mode::Neil => {
            writer
                .write_record([
                    "lambda",
                    "status",
                    "chart",
                    "chart_re",
                    "chart_im",
                    "value0",
                    "deriv0_re",
                    "deriv0_im",
                    "residual",
                    "gap",
                    "clamped_samples",
                    "reason",
                ])
                .map_err(err)?;
            for row in records {
                writer
                    .write_record([
                        format!("{}", row.lambda),
                        status_name(row.status).to_string(),
                        row.chart
                            .as_ref()
                            .map(|c| c.chart.to_string())
                            .unwrap_or_default(),
                        float_field(row.chart.as_ref().map(|c| c.value[0])),
                        float_field(row.chart.as_ref().map(|c| c.value[1])),
                        float_field(row.value0),
                        float_field(row.deriv0.map(|d| d[0])),
                        float_field(row.deriv0.map(|d| d[1])),
                        float_field(row.residual),
                        float_field(row.gap),
                        row.clamped_samples.to_string(),
                        row.reason.clone().unwrap_or_default(),
                    ])
                    .map_err(err)?;
            }
        }
    }
    writer
        .flush()
        .map_err(|e| format!("could not write {}: {e}", path.display()))
}

fn status_name(status: RecordStatus) -> &'static str {
    match status {
        RecordStatus::Ok => "ok",
        RecordStatus::NotEigenvalue => "not_eigenvalue",
    }
}

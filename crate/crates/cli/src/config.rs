//! Run configuration: the JSON schema, command-line overrides, and
//! validation shared by the `annulus` and `neil` subcommands.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use toeplitz_spectra::symbols::SymbolSpec;

/// Which algebra the run analyzes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Two-boundary symbols on the annulus.
    Annulus,
    /// Single-boundary symbols on the disc with the constrained subalgebra.
    Neil,
}

impl Mode {
    /// Lowercase name used in reports and diagnostics.
    pub fn name(self) -> &'static str {
        match self {
            Mode::Annulus => "annulus",
            Mode::Neil => "neil",
        }
    }
}

/// Spectral-parameter grid request: either automatic (the interior of the
/// classified interval with 1% margins) or an explicit closed range.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaGridSpec {
    /// Derive the bounds from the classification instead of `min`/`max`.
    #[serde(default)]
    pub auto: bool,
    /// Lower bound; required when `auto` is false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    /// Upper bound; required when `auto` is false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    /// Number of grid points; must be at least 1.
    pub count: usize,
}

/// A full batch-run description, as read from the `--config` JSON file.
///
/// Schema:
/// `{"mode": "annulus"|"neil", "q": number?, "c": [re, im]?, "c_scan": bool?,
///   "symbol": {"kind": "arcs"|"trig"|"samples", "boundaries": [...], "q": number?},
///   "n_points": int, "K": int,
///   "lambda": {"auto": bool?, "min": num?, "max": num?, "count": int},
///   "out": path?, "csv": path?}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Which pipeline to run; must match the subcommand.
    pub mode: Mode,
    /// Inner radius for annulus runs (may also live inside `symbol`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    /// Weight coefficient for disc runs, as `[re, im]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<[f64; 2]>,
    /// Scan weight phases and use the widest classified interval instead of
    /// a fixed `c`.
    #[serde(default)]
    pub c_scan: bool,
    /// The boundary symbol description.
    pub symbol: SymbolSpec,
    /// Angular grid size (a power of two, at least 8).
    pub n_points: usize,
    /// Truncation order for verification.
    #[serde(rename = "K")]
    pub k: usize,
    /// Spectral-parameter grid.
    pub lambda: LambdaGridSpec,
    /// Default JSON report path; overridden by `--out`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    /// Default CSV curve path; overridden by `--csv`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
}

impl RunConfig {
    /// Structural validation that does not need the realized symbol.
    pub fn validate(&self) -> Result<(), String> {
        if self.lambda.count < 1 {
            return Err("lambda.count must be at least 1".into());
        }
        if !self.lambda.auto {
            match (self.lambda.min, self.lambda.max) {
                (Some(lo), Some(hi)) => {
                    if !(lo.is_finite() && hi.is_finite()) {
                        return Err("lambda bounds must be finite".into());
                    }
                    if lo > hi {
                        return Err(format!(
                            "lambda.min ({lo}) must not exceed lambda.max ({hi})"
                        ));
                    }
                }
                _ => {
                    return Err(
                        "lambda.min and lambda.max are required when lambda.auto is false".into(),
                    )
                }
            }
        }
        match self.mode {
            Mode::Annulus => {
                if self.q.or(self.symbol.q).is_none() {
                    return Err("annulus runs need the inner radius q".into());
                }
            }
            Mode::Neil => {
                if self.c.is_none() && !self.c_scan {
                    return Err("disc runs need a weight coefficient c or the c_scan flag".into());
                }
            }
        }
        Ok(())
    }

    /// The effective inner radius for annulus runs.
    pub fn effective_q(&self) -> Option<f64> {
        self.q.or(self.symbol.q)
    }
}

/// Evenly spaced grid over `[lo, hi]`; a single-point request returns the
/// midpoint.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![0.5 * (lo + hi)];
    }
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

//! Built-in verification suite: exact identities with known closed-form
//! answers, runnable without any configuration file.

use num_complex::Complex64;
use toeplitz_spectra::annulus::{
    annihilator_defect_annulus, eigenvector_for, verify_eigenpair, AnnulusHardyBasis, HardyIndex,
};
use toeplitz_spectra::neil::annihilator_defect_neil;
use toeplitz_spectra::numerics::UniformGrid;
use toeplitz_spectra::symbols::AnnulusSymbol;

use crate::report::{timestamp_now, CheckResult, SelftestReport, ToolInfo};
use crate::run::CliError;

const GRID_POINTS: usize = 512;
const MOMENT_RANGE: usize = 16;

fn check(
    checks: &mut Vec<CheckResult>,
    name: &'static str,
    value: Result<f64, String>,
    tolerance: f64,
) -> Result<(), CliError> {
    let value = value.map_err(|e| CliError::Config(format!("{name} could not run: {e}")))?;
    checks.push(CheckResult {
        name,
        value,
        tolerance,
        passed: value.is_finite() && value <= tolerance,
    });
    Ok(())
}

fn step_symbol(q: f64, n_points: usize) -> Result<AnnulusSymbol, String> {
    let grid = UniformGrid::new(n_points).map_err(|e| e.to_string())?;
    let n = grid.len();
    AnnulusSymbol::from_samples(q, grid, vec![1.0; n], vec![-1.0; n]).map_err(|e| e.to_string())
}

fn step_eigenpair_defects(lambda: f64, expected_alpha: f64) -> Result<(f64, f64), String> {
    let symbol = step_symbol(0.25, GRID_POINTS)?;
    let record = eigenvector_for(&symbol, lambda).map_err(|e| e.to_string())?;
    let alpha_defect = (record.alpha().alpha() - expected_alpha).abs();
    let record = verify_eigenpair(&symbol, record, 32).map_err(|e| e.to_string())?;
    let residual = record
        .residual()
        .ok_or_else(|| "verification reported no residual".to_string())?;
    Ok((alpha_defect, residual))
}

/// Runs the full check suite.
///
/// `tolerance_scale` multiplies every pass threshold; values below 1 tighten
/// the suite far past machine precision, forcing a failure on purpose (used
/// to exercise the failing exit path).
pub fn run_selftest(tolerance_scale: f64) -> Result<SelftestReport, CliError> {
    if !(tolerance_scale.is_finite() && tolerance_scale > 0.0) {
        return Err(CliError::Config(format!(
            "tolerance scale must be positive and finite, got {tolerance_scale}"
        )));
    }
    let tol = |base: f64| base * tolerance_scale;
    let mut checks = Vec::new();

    check(
        &mut checks,
        "annihilator_annulus_q_0.25",
        annihilator_defect_annulus(0.25, GRID_POINTS, MOMENT_RANGE).map_err(|e| e.to_string()),
        tol(1e-10),
    )?;
    check(
        &mut checks,
        "annihilator_annulus_q_0.5",
        annihilator_defect_annulus(0.5, GRID_POINTS, MOMENT_RANGE).map_err(|e| e.to_string()),
        tol(1e-10),
    )?;
    check(
        &mut checks,
        "annihilator_disc_c_half",
        annihilator_defect_neil(GRID_POINTS, MOMENT_RANGE, Complex64::new(0.5, 0.0))
            .map_err(|e| e.to_string()),
        tol(1e-10),
    )?;

    let gram = |q: f64, alpha: f64| -> Result<f64, String> {
        let grid = UniformGrid::new(GRID_POINTS).map_err(|e| e.to_string())?;
        let index = HardyIndex::new(alpha).map_err(|e| e.to_string())?;
        let basis = AnnulusHardyBasis::new(q, index, 16).map_err(|e| e.to_string())?;
        basis.gram_defect(&grid).map_err(|e| e.to_string())
    };
    check(
        &mut checks,
        "gram_identity_q_0.25",
        gram(0.25, 0.3),
        tol(1e-10),
    )?;
    check(
        &mut checks,
        "gram_identity_q_0.5",
        gram(0.5, 0.0),
        tol(1e-10),
    )?;

    let (alpha0, residual0) = step_eigenpair_defects(0.0, 0.0)
        .map_err(|e| CliError::Config(format!("step eigenpair at 0 could not run: {e}")))?;
    checks.push(CheckResult {
        name: "step_eigenpair_lambda_0_alpha",
        value: alpha0,
        tolerance: tol(1e-10),
        passed: alpha0 <= tol(1e-10),
    });
    checks.push(CheckResult {
        name: "step_eigenpair_lambda_0_residual",
        value: residual0,
        tolerance: tol(1e-10),
        passed: residual0 <= tol(1e-10),
    });

    let expected_alpha = 3.0_f64.ln() / (4.0 * 2.0_f64.ln());
    let (alpha_half, residual_half) = step_eigenpair_defects(0.5, expected_alpha)
        .map_err(|e| CliError::Config(format!("step eigenpair at 1/2 could not run: {e}")))?;
    checks.push(CheckResult {
        name: "step_eigenpair_lambda_half_alpha",
        value: alpha_half,
        tolerance: tol(1e-8),
        passed: alpha_half <= tol(1e-8),
    });
    checks.push(CheckResult {
        name: "step_eigenpair_lambda_half_residual",
        value: residual_half,
        tolerance: tol(1e-10),
        passed: residual_half <= tol(1e-10),
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(SelftestReport {
        tool: ToolInfo::current(),
        timestamp: timestamp_now(),
        mode: "selftest",
        tolerance_scale,
        checks,
        passed,
    })
}

/// Human summary written to stderr alongside the JSON report: one line per
/// check plus a verdict, naming any failing check.
pub fn summarize(report: &SelftestReport) -> String {
    let mut lines = Vec::with_capacity(report.checks.len() + 1);
    for check in &report.checks {
        lines.push(format!(
            "{}: {} ({:.3e} <= {:.3e})",
            check.name,
            if check.passed { "pass" } else { "FAIL" },
            check.value,
            check.tolerance,
        ));
    }
    lines.push(if report.passed {
        "selftest: all checks passed".to_string()
    } else {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        format!("selftest: FAILED ({})", failing.join(", "))
    });
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_selftest_passes_every_check() {
        let report = run_selftest(1.0).expect("selftest runs");
        assert!(report.passed, "failing checks: {}", summarize(&report));
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn corrupted_tolerance_names_the_failing_check() {
        let report = run_selftest(1e-18).expect("selftest runs");
        assert!(!report.passed);
        let summary = summarize(&report);
        assert!(summary.contains("FAILED"));
        // At 1e-18 scaling even the best checks exceed their thresholds.
        assert!(report.checks.iter().any(|c| !c.passed));
        let failing = report.checks.iter().find(|c| !c.passed).unwrap();
        assert!(summary.contains(failing.name));
    }

    #[test]
    fn nonpositive_scale_is_a_config_error() {
        assert_eq!(run_selftest(0.0).unwrap_err().exit_code(), 2);
        assert_eq!(run_selftest(f64::NAN).unwrap_err().exit_code(), 2);
    }
}

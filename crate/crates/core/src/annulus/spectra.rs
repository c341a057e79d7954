//! Eigenvalue evidence for truncated Toeplitz operators on the annulus.
//!
//! For a symbol whose boundary values bracket an interval `(m, M)` around
//! zero, each `λ` strictly inside the interval admits a candidate
//! eigenvector: the outer function `g` whose squared modulus is
//! `|log-weight / (φ - λ)|`, living in the Hardy space whose index is the
//! winding index of `φ - λ`.  This module constructs those candidates,
//! measures their residuals against truncated Toeplitz matrices, probes
//! eigenspace uniqueness through spectral gaps, traces the index curve
//! `λ ↦ α_λ`, and checks the moment identity that characterizes the
//! log-weight as the annihilating density.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::annulus::hardy::{
    index_from_symbol, project_to_basis, solve_dirichlet_outer, toeplitz_matrix,
    AnnulusOuterBoundary, HardyIndex,
};
use crate::errors::{Error, Result};
use crate::numerics::{
    forward_transform_real, hermitian_eigensolve, UniformGrid, LOG_FLOOR_DEFAULT,
};
use crate::symbols::{classify_annulus, endpoint_membership, AnnulusSymbol, IntegrabilityVerdict};

/// A candidate eigenpair `(λ, g)` on the annulus, together with the evidence
/// gathered about it.
///
/// `g` is outer boundary data with `|g|² = |ψ|` for
/// `ψ = log-weight / (φ - λ)`, `c_sign` the common sign of `ψ`, and `alpha`
/// the index of the Hardy space the candidate lives in.  `residual`,
/// `tail_energy`, and `gap` stay unset until [`verify_eigenpair`] and
/// [`uniqueness_gap`] fill them at a chosen truncation `k`.
#[derive(Debug, Clone)]
pub struct AnnulusEigenRecord {
    lambda: f64,
    alpha: HardyIndex,
    c_sign: i32,
    g: AnnulusOuterBoundary,
    residual: Option<f64>,
    tail_energy: Option<f64>,
    gap: Option<f64>,
    k: Option<usize>,
}

impl AnnulusEigenRecord {
    /// The probed eigenvalue.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Index of the Hardy space carrying the candidate eigenvector.
    pub fn alpha(&self) -> HardyIndex {
        self.alpha
    }

    /// Common sign of `ψ = log-weight / (φ - λ)` on the grid.
    pub fn c_sign(&self) -> i32 {
        self.c_sign
    }

    /// Boundary data of the candidate eigenvector.
    pub fn g(&self) -> &AnnulusOuterBoundary {
        &self.g
    }

    /// Relative residual `‖T_K v − λv‖₂/‖v‖₂`, once computed.
    pub fn residual(&self) -> Option<f64> {
        self.residual
    }

    /// Fraction of the coefficient energy beyond `±K/2`, once computed.
    pub fn tail_energy(&self) -> Option<f64> {
        self.tail_energy
    }

    /// Distance from `λ` to the rest of the truncated spectrum, once computed.
    pub fn gap(&self) -> Option<f64> {
        self.gap
    }

    /// Truncation half-width used by the latest verification.
    pub fn k(&self) -> Option<usize> {
        self.k
    }
}

/// Signed log weights attached to the two boundary circles:
/// `log(q^{-1/2})` on the outer circle and `log(q^{1/2})` on the inner one.
fn log_weights(q: f64) -> (f64, f64) {
    let half_log_q = 0.5 * q.ln();
    (-half_log_q, half_log_q)
}

fn not_eigenvalue(lambda: f64, reason: impl Into<String>) -> Error {
    Error::NotEigenvalue {
        lambda,
        reason: reason.into(),
    }
}

/// Largest probe depth usable on `n` samples (at most 5 levels, at least 8
/// samples on the coarsest level).
fn probe_levels(n: usize) -> Option<usize> {
    (2..=5)
        .rev()
        .find(|&l| n.is_multiple_of(1 << l) && n / (1 << l) >= 8)
}

/// Build the candidate eigenvector for `λ` from the shifted symbol `φ - λ`.
///
/// The pointwise ratio `ψ = log-weight / (φ - λ)` must be sign-definite on
/// the grid; its square-root modulus is handed to the boundary-matching
/// solver, and the resulting outer data `g` carries the candidate.  `λ` must
/// lie inside the classification interval of `φ`: values outside (or with
/// sign-indefinite `ψ`) fail with a not-an-eigenvalue error, and endpoint
/// values are admitted only when the refinement probe certifies `|ψ|` as
/// integrable.
pub fn eigenvector_for(symbol: &AnnulusSymbol, lambda: f64) -> Result<AnnulusEigenRecord> {
    if !lambda.is_finite() {
        return Err(Error::Argument(format!("λ must be finite, got {lambda}")));
    }
    let classification = classify_annulus(symbol);
    if !classification.is_interval() {
        return Err(not_eigenvalue(
            lambda,
            "the symbol's boundary values do not bracket an interval around zero",
        ));
    }
    if lambda < classification.lower || lambda > classification.upper {
        return Err(not_eigenvalue(
            lambda,
            format!(
                "λ lies outside the spectral interval [{}, {}]",
                classification.lower, classification.upper
            ),
        ));
    }
    let at_endpoint = lambda == classification.lower || lambda == classification.upper;

    let (lw1, lwq) = log_weights(symbol.q());
    let den1: Vec<f64> = symbol.f1().iter().map(|&x| x - lambda).collect();
    let denq: Vec<f64> = symbol.fq().iter().map(|&x| x - lambda).collect();

    if at_endpoint {
        let levels = probe_levels(symbol.grid().len()).ok_or_else(|| {
            not_eigenvalue(lambda, "grid too coarse to probe an endpoint eigenvalue")
        })?;
        let n = symbol.grid().len();
        for (name, lw, den) in [("outer", lw1, &den1), ("inner", lwq, &denq)] {
            let verdict = endpoint_membership(&vec![lw.abs(); n], den, levels)?;
            if verdict != IntegrabilityVerdict::Integrable {
                return Err(not_eigenvalue(
                    lambda,
                    format!(
                        "endpoint candidate: |log-weight/(φ-λ)| on the {name} boundary is {}",
                        match verdict {
                            IntegrabilityVerdict::Divergent => "divergent",
                            _ => "inconclusive under refinement",
                        }
                    ),
                ));
            }
        }
    }

    // Sign of ψ on each sample; zero denominators are legal only on the
    // endpoint path, where integrability has just been certified.
    let mut sign = 0i32;
    for (lw, den) in [(lw1, &den1), (lwq, &denq)] {
        for &d in den.iter() {
            if d == 0.0 {
                if at_endpoint {
                    continue;
                }
                return Err(not_eigenvalue(lambda, "φ - λ vanishes at a grid sample"));
            }
            let s = if lw / d > 0.0 { 1 } else { -1 };
            if sign == 0 {
                sign = s;
            } else if sign != s {
                return Err(not_eigenvalue(
                    lambda,
                    "log-weight/(φ-λ) changes sign on the boundary grid",
                ));
            }
        }
    }
    if sign == 0 {
        return Err(not_eigenvalue(lambda, "φ - λ vanishes on the whole grid"));
    }

    let modulus = |lw: f64, den: &[f64]| -> Vec<f64> {
        den.iter()
            .map(|&d| {
                let clamped = d.abs().max(LOG_FLOOR_DEFAULT);
                (0.5 * (lw.abs().ln() - clamped.ln())).exp()
            })
            .collect()
    };
    let w1 = modulus(lw1, &den1);
    let wq = modulus(lwq, &denq);
    let g = solve_dirichlet_outer(symbol.grid(), &w1, &wq, symbol.q(), None)?;
    let alpha = g.index();

    Ok(AnnulusEigenRecord {
        lambda,
        alpha,
        c_sign: sign,
        g,
        residual: None,
        tail_energy: None,
        gap: None,
        k: None,
    })
}

/// Measure the relative residual of a candidate eigenpair against the
/// truncated Toeplitz matrix of half-width `k`.
///
/// The candidate boundary data is expanded in the truncation's basis to a
/// coefficient vector `v`, and the record is returned updated with
/// `residual = ‖T_K v − λv‖₂/‖v‖₂` and with the fraction of `‖v‖²` carried
/// by coefficients beyond `±K/2`.
pub fn verify_eigenpair(
    symbol: &AnnulusSymbol,
    mut record: AnnulusEigenRecord,
    k: usize,
) -> Result<AnnulusEigenRecord> {
    let truncation = toeplitz_matrix(symbol, record.alpha, k)?;
    let projection = project_to_basis(&record.g, truncation.basis())?;
    let v = DVector::from_column_slice(projection.coeffs());
    let norm = v.norm();
    if norm == 0.0 {
        return Err(Error::Domain(
            "the candidate eigenvector projects to zero in the truncated basis".into(),
        ));
    }
    let residual =
        (truncation.matrix() * &v - &v * Complex64::new(record.lambda, 0.0)).norm() / norm;
    let half = (k / 2) as i64;
    let tail: f64 = truncation
        .basis()
        .indices()
        .zip(projection.coeffs())
        .filter(|(n, _)| n.abs() > half)
        .map(|(_, c)| c.norm_sqr())
        .sum();
    record.residual = Some(residual);
    record.tail_energy = Some(tail / (norm * norm));
    record.k = Some(k);
    Ok(record)
}

/// Distance from `λ` to the rest of the spectrum of the truncated Toeplitz
/// matrix: the second-smallest `|eigenvalue − λ|`.
///
/// A zero gap means the truncation sees `λ` with multiplicity at least two
/// (or a degenerate symbol); that is reported, not treated as an error.
pub fn spectral_gap(
    symbol: &AnnulusSymbol,
    alpha: HardyIndex,
    lambda: f64,
    k: usize,
) -> Result<f64> {
    let truncation = toeplitz_matrix(symbol, alpha, k)?;
    let (eigenvalues, _) = hermitian_eigensolve(truncation.matrix())?;
    let mut distances: Vec<f64> = eigenvalues.iter().map(|e| (e - lambda).abs()).collect();
    distances.sort_by(f64::total_cmp);
    Ok(distances[1])
}

/// Fill the uniqueness gap of a verified record at truncation `k`.
pub fn uniqueness_gap(
    symbol: &AnnulusSymbol,
    mut record: AnnulusEigenRecord,
    k: usize,
) -> Result<AnnulusEigenRecord> {
    record.gap = Some(spectral_gap(symbol, record.alpha, record.lambda, k)?);
    record.k = Some(k);
    Ok(record)
}

/// One sample of the index curve `λ ↦ α_λ`.
#[derive(Debug, Clone, Copy)]
pub struct AlphaCurvePoint {
    /// The probed eigenvalue.
    pub lambda: f64,
    /// The wrapped index `α_λ ∈ [0, 1)`.
    pub alpha: f64,
    /// The raw exponent before wrapping.
    pub beta_unwrapped: f64,
}

/// The index curve over a list of eigenvalue candidates.
#[derive(Debug, Clone)]
pub struct AlphaCurve {
    /// Curve samples in input order.
    pub points: Vec<AlphaCurvePoint>,
    /// Whole number of index wraps: the floor of the total variation of the
    /// unwrapped exponent along the input order.
    pub wrap_count: usize,
}

/// Trace the index curve `λ ↦ (β_λ, α_λ)` over the given eigenvalue
/// candidates.
///
/// `β_λ = (mean log|f1−λ| − mean log|fq−λ|)/(2 log q)` is reported unwrapped;
/// `α_λ = frac(β_λ)`.  Every `λ` must lie strictly inside the classification
/// interval of the symbol.
pub fn alpha_curve(symbol: &AnnulusSymbol, lambdas: &[f64]) -> Result<AlphaCurve> {
    let classification = classify_annulus(symbol);
    if !classification.is_interval() {
        return Err(Error::Domain(
            "the symbol's boundary values do not bracket an interval around zero".into(),
        ));
    }
    let mut points = Vec::with_capacity(lambdas.len());
    for &lambda in lambdas {
        if !(classification.lower < lambda && lambda < classification.upper) {
            return Err(not_eigenvalue(
                lambda,
                format!(
                    "index curve requires λ strictly inside ({}, {})",
                    classification.lower, classification.upper
                ),
            ));
        }
        let idx = index_from_symbol(symbol, lambda)?;
        let q = symbol.q();
        // Recompute the unwrapped exponent the same way index_from_symbol
        // does, before its wrap.
        let (mean1, _) = crate::numerics::log_mean(
            &symbol.f1().iter().map(|&x| x - lambda).collect::<Vec<_>>(),
            LOG_FLOOR_DEFAULT,
        )?;
        let (meanq, _) = crate::numerics::log_mean(
            &symbol.fq().iter().map(|&x| x - lambda).collect::<Vec<_>>(),
            LOG_FLOOR_DEFAULT,
        )?;
        let beta_unwrapped = (mean1 - meanq) / (2.0 * q.ln());
        points.push(AlphaCurvePoint {
            lambda,
            alpha: idx.index.alpha(),
            beta_unwrapped,
        });
    }
    let total_variation: f64 = points
        .windows(2)
        .map(|pair| (pair[1].beta_unwrapped - pair[0].beta_unwrapped).abs())
        .sum();
    Ok(AlphaCurve {
        points,
        wrap_count: total_variation.floor() as usize,
    })
}

/// Maximum absolute moment `(1/2π)∫_B χⁿ·(log-weight) dμ` over `|n| ≤ n_max`:
/// the numerical defect of the annihilation identity for the signed
/// log-weight density on the annulus boundary.
///
/// The outer circle contributes frequency-`n` moments of the constant
/// `log(q^{-1/2})`, the inner circle `qⁿ` times the moments of
/// `log(q^{1/2})`; all are zero in exact arithmetic.
pub fn annihilator_defect_annulus(q: f64, n_points: usize, n_max: usize) -> Result<f64> {
    if !(q.is_finite() && 0.0 < q && q < 1.0) {
        return Err(Error::Argument(format!(
            "inner radius q must lie strictly between 0 and 1, got {q}"
        )));
    }
    let grid = UniformGrid::new(n_points)?;
    let (lw1, lwq) = log_weights(q);
    boundary_moment_defect(&grid, q, n_max, lw1, lwq)
}

/// Worker for [`annihilator_defect_annulus`] with explicit boundary weights,
/// so sanity checks can swap in densities that do not annihilate.
fn boundary_moment_defect(
    grid: &UniformGrid,
    q: f64,
    n_max: usize,
    weight1: f64,
    weightq: f64,
) -> Result<f64> {
    if n_max >= grid.len() / 2 {
        return Err(Error::Argument(format!(
            "moment range |n| ≤ {n_max} is not resolved by a grid of {} points",
            grid.len()
        )));
    }
    let hat1 = forward_transform_real(grid, &vec![weight1; grid.len()])?;
    let hatq = forward_transform_real(grid, &vec![weightq; grid.len()])?;
    let mut defect: f64 = 0.0;
    for n in -(n_max as i64)..=(n_max as i64) {
        // (1/2π)∫ e^{int}·w dt reads the coefficient at -n.
        let moment = hat1.coeff(-n) + hatq.coeff(-n) * q.powi(n as i32);
        defect = defect.max(moment.norm());
    }
    Ok(defect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::AnnulusSymbol;

    fn grid(n: usize) -> UniformGrid {
        UniformGrid::new(n).unwrap()
    }

    fn step_symbol(q: f64, n: usize) -> AnnulusSymbol {
        AnnulusSymbol::from_samples(q, grid(n), vec![1.0; n], vec![-1.0; n]).unwrap()
    }

    fn bumped_symbol(n: usize) -> AnnulusSymbol {
        let g = grid(n);
        let f1: Vec<f64> = g.angles().iter().map(|t| 1.0 + 0.3 * t.cos()).collect();
        AnnulusSymbol::from_samples(0.25, g, f1, vec![-1.0; n]).unwrap()
    }

    #[test]
    fn constant_eigenvector_at_zero() {
        let record = eigenvector_for(&step_symbol(0.25, 512), 0.0).unwrap();
        assert_eq!(record.c_sign(), 1);
        assert_eq!(record.alpha().alpha(), 0.0);
        let expected = std::f64::consts::LN_2.sqrt();
        for (g1, gq) in record.g().g1().iter().zip(record.g().gq()) {
            assert!((g1 - Complex64::new(expected, 0.0)).norm() < 1e-10);
            assert!((gq - Complex64::new(expected, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn pure_power_eigenvector_at_half() {
        let record = eigenvector_for(&step_symbol(0.25, 512), 0.5).unwrap();
        let expected_alpha = 3f64.ln() / (4.0 * 2f64.ln());
        assert!((record.alpha().alpha() - expected_alpha).abs() < 1e-12);
        assert_eq!(record.c_sign(), 1);
        let amplitude = (2.0 * std::f64::consts::LN_2).sqrt();
        let inner_amplitude = amplitude * 0.25f64.powf(expected_alpha);
        for (g1, gq) in record.g().g1().iter().zip(record.g().gq()) {
            assert!((g1.norm() - amplitude).abs() < 1e-8);
            assert!((gq.norm() - inner_amplitude).abs() < 1e-8);
        }
        for n in 1..=record.g().k_h() as i64 {
            assert!(record.g().h(n).norm() < 1e-10);
            assert!(record.g().h(-n).norm() < 1e-10);
        }
    }

    #[test]
    fn rejects_lambda_outside_the_interval() {
        let symbol = step_symbol(0.25, 256);
        for lambda in [1.5, -1.5] {
            match eigenvector_for(&symbol, lambda) {
                Err(Error::NotEigenvalue { .. }) => {}
                other => panic!("expected NotEigenvalue at {lambda}, got {other:?}"),
            }
        }
    }

    #[test]
    fn rejects_degenerate_classification() {
        let n = 128;
        let symbol =
            AnnulusSymbol::from_samples(0.25, grid(n), vec![5.0; n], vec![5.0; n]).unwrap();
        assert!(matches!(
            eigenvector_for(&symbol, 0.0),
            Err(Error::NotEigenvalue { .. })
        ));
    }

    #[test]
    fn endpoint_lambda_requires_integrability() {
        // At λ = M = 1 the outer denominator vanishes identically: the
        // refinement probe must call it divergent.
        match eigenvector_for(&step_symbol(0.25, 512), 1.0) {
            Err(Error::NotEigenvalue { reason, .. }) => {
                assert!(reason.contains("divergent"), "reason: {reason}");
            }
            other => panic!("expected endpoint rejection, got {other:?}"),
        }
    }

    #[test]
    fn symbol_identity_holds_on_both_boundaries() {
        let symbol = bumped_symbol(512);
        let record = eigenvector_for(&symbol, 0.3).unwrap();
        let (lw1, lwq) = log_weights(0.25);
        let c = record.c_sign() as f64;
        let scale = lw1.abs().max(lwq.abs());
        for (g, (&f, lw)) in record
            .g()
            .g1()
            .iter()
            .zip(symbol.f1().iter().map(|f| (f, lw1)))
            .chain(
                record
                    .g()
                    .gq()
                    .iter()
                    .zip(symbol.fq().iter().map(|f| (f, lwq))),
            )
        {
            let lhs = (f - 0.3) * g.norm_sqr();
            assert!(
                (lhs - c * lw).abs() <= 1e-6 * scale,
                "identity defect {} at sample",
                (lhs - c * lw).abs()
            );
        }
    }

    #[test]
    fn branch_index_matches_symbol_index() {
        let symbol = bumped_symbol(512);
        for lambda in [-0.5, 0.0, 0.35, 0.6] {
            let record = eigenvector_for(&symbol, lambda).unwrap();
            let direct = index_from_symbol(&symbol, lambda).unwrap();
            assert!(
                record.alpha().circular_distance(direct.index) < 1e-8,
                "index mismatch at λ = {lambda}"
            );
        }
    }

    #[test]
    fn positive_scaling_preserves_alpha_and_rescales_g() {
        let n = 256;
        let base = step_symbol(0.25, n);
        let t = 3.0;
        let scaled = AnnulusSymbol::from_samples(
            0.25,
            grid(n),
            base.f1().iter().map(|x| t * x).collect(),
            base.fq().iter().map(|x| t * x).collect(),
        )
        .unwrap();
        let r1 = eigenvector_for(&base, 0.3).unwrap();
        let r2 = eigenvector_for(&scaled, t * 0.3).unwrap();
        assert!((r1.alpha().alpha() - r2.alpha().alpha()).abs() < 1e-12);
        let factor = t.sqrt();
        for (a, b) in r1.g().g1().iter().zip(r2.g().g1()) {
            assert!((b.norm() * factor / a.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn step_symbol_residual_at_zero_is_tiny() {
        let symbol = step_symbol(0.25, 512);
        let record = eigenvector_for(&symbol, 0.0).unwrap();
        let record = verify_eigenpair(&symbol, record, 32).unwrap();
        assert!(record.residual().unwrap() <= 1e-10);
        assert!(record.tail_energy().unwrap() < 1e-12);
        assert_eq!(record.k(), Some(32));
    }

    #[test]
    fn step_symbol_residual_at_half_is_tiny() {
        let symbol = step_symbol(0.25, 512);
        let record = eigenvector_for(&symbol, 0.5).unwrap();
        let record = verify_eigenpair(&symbol, record, 32).unwrap();
        assert!(record.residual().unwrap() <= 1e-10);
    }

    #[test]
    fn residuals_do_not_grow_under_refinement() {
        let symbol = bumped_symbol(512);
        let record = eigenvector_for(&symbol, 0.0).unwrap();
        let residuals: Vec<f64> = [16usize, 32, 64]
            .iter()
            .map(|&k| {
                verify_eigenpair(&symbol, record.clone(), k)
                    .unwrap()
                    .residual()
                    .unwrap()
            })
            .collect();
        assert!(residuals[1] <= residuals[0] + 1e-12);
        assert!(residuals[2] <= residuals[1] + 1e-12);
        assert!(residuals[2] <= 1e-4);
    }

    #[test]
    fn alpha_curve_is_circle_monotone_for_the_step_symbol() {
        let symbol = step_symbol(0.25, 256);
        let lambdas: Vec<f64> = (0..19).map(|i| -0.9 + 0.1 * i as f64).collect();
        let curve = alpha_curve(&symbol, &lambdas).unwrap();
        for pair in curve.points.windows(2) {
            let step = pair[1].beta_unwrapped - pair[0].beta_unwrapped;
            assert!(step > 0.0, "unwrapped exponent must increase");
            let circle_step = (pair[1].alpha - pair[0].alpha).rem_euclid(1.0);
            assert!(
                circle_step > 0.0 && circle_step < 0.5,
                "index must advance continuously around the circle, step {circle_step}"
            );
        }
        assert_eq!(curve.wrap_count, 2);
    }

    #[test]
    fn alpha_curve_single_point_has_no_wraps() {
        let curve = alpha_curve(&step_symbol(0.25, 128), &[0.0]).unwrap();
        assert_eq!(curve.points.len(), 1);
        assert_eq!(curve.wrap_count, 0);
        assert_eq!(curve.points[0].alpha, 0.0);
    }

    #[test]
    fn alpha_curve_rejects_lambda_outside() {
        let symbol = step_symbol(0.25, 128);
        assert!(alpha_curve(&symbol, &[0.0, 1.0]).is_err());
        assert!(alpha_curve(&symbol, &[-1.2]).is_err());
    }

    #[test]
    fn annihilator_defect_is_numerically_zero() {
        for &q in &[0.25, 0.5] {
            let defect = annihilator_defect_annulus(q, 512, 16).unwrap();
            assert!(defect < 1e-12, "q = {q}: defect {defect}");
        }
    }

    #[test]
    fn constant_density_does_not_annihilate() {
        let g = grid(512);
        let defect = boundary_moment_defect(&g, 0.5, 16, 1.0, 1.0).unwrap();
        assert_eq!(defect, 2.0);
    }

    #[test]
    fn annihilator_moment_range_must_fit_grid() {
        assert!(annihilator_defect_annulus(0.5, 64, 32).is_err());
    }

    #[test]
    fn uniqueness_gap_for_the_step_symbol() {
        let symbol = step_symbol(0.25, 512);
        let record = eigenvector_for(&symbol, 0.0).unwrap();
        let at_32 = uniqueness_gap(&symbol, record.clone(), 32)
            .unwrap()
            .gap()
            .unwrap();
        let at_64 = uniqueness_gap(&symbol, record, 64).unwrap().gap().unwrap();
        assert!(at_32 >= 0.05);
        assert!((at_64 / at_32 - 1.0).abs() <= 0.2, "{at_32} vs {at_64}");

        let record_half = eigenvector_for(&symbol, 0.5).unwrap();
        let gap_32 = uniqueness_gap(&symbol, record_half.clone(), 32)
            .unwrap()
            .gap()
            .unwrap();
        let gap_64 = uniqueness_gap(&symbol, record_half, 64)
            .unwrap()
            .gap()
            .unwrap();
        assert!(gap_32 > 0.05);
        assert!((gap_64 / gap_32 - 1.0).abs() <= 0.2);
    }

    #[test]
    fn zero_symbol_has_zero_gap() {
        let n = 256;
        let symbol =
            AnnulusSymbol::from_samples(0.25, grid(n), vec![0.0; n], vec![0.0; n]).unwrap();
        let gap = spectral_gap(&symbol, HardyIndex::new(0.0).unwrap(), 0.0, 16).unwrap();
        assert_eq!(gap, 0.0);
    }
}

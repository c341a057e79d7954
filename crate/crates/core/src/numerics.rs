//! Spectral-numerics kernel shared by every other module.
//!
//! Everything here lives on a *midpoint* angular grid,
//! `t_j = 2π(j + ½)/N`: the offset keeps grid points away from `t = 0` and
//! `t = π`, so integrands with endpoint singularities are never evaluated at
//! the singular angle. The kernel provides the discrete Fourier transform on
//! that grid, the boundary harmonic conjugate, a clamped logarithmic mean for
//! quadrature of `log`-singular integrands, and a dense Hermitian eigensolver
//! with an explicit residual contract.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rustfft::{num_complex::Complex, FftPlanner};

use crate::errors::{Error, Result};

/// Default clamping floor for logarithmic quadrature.
pub const LOG_FLOOR_DEFAULT: f64 = 1e-300;

/// Relative asymmetry tolerated by [`hermitian_eigensolve`].
pub const HERMITIAN_TOL: f64 = 1e-10;

// ---------------------------------------------------------------------------
// grid
// ---------------------------------------------------------------------------

/// Uniform midpoint grid of angles `t_j = 2π(j + ½)/N` on `[0, 2π)`.
///
/// `N` must be a power of two and at least 8. No `t_j` ever equals `0` or
/// `π`, so boundary integrands that blow up at those angles stay finite on
/// the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    n_points: usize,
    angles: Vec<f64>,
}

impl UniformGrid {
    /// Build a grid with `n_points` midpoint angles.
    ///
    /// Errors if `n_points` is not a power of two or is below 8.
    pub fn new(n_points: usize) -> Result<Self> {
        if n_points < 8 || !n_points.is_power_of_two() {
            return Err(Error::Argument(format!(
                "grid size must be a power of two ≥ 8, got {n_points}"
            )));
        }
        let angles = (0..n_points)
            .map(|j| 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / n_points as f64)
            .collect();
        Ok(Self { n_points, angles })
    }

    /// Number of grid points `N`.
    pub fn len(&self) -> usize {
        self.n_points
    }

    /// Always false: grids have at least 8 points.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The angles `t_j` in increasing order.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Sample a scalar function of the angle over the whole grid.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.angles.iter().map(|&t| f(t)).collect()
    }

    /// Sample a complex-valued function of the angle over the whole grid.
    pub fn sample_complex(&self, f: impl Fn(f64) -> Complex64) -> Vec<Complex64> {
        self.angles.iter().map(|&t| f(t)).collect()
    }

    fn check_len<T>(&self, samples: &[T]) -> Result<()> {
        if samples.len() != self.n_points {
            return Err(Error::LengthMismatch {
                expected: self.n_points,
                got: samples.len(),
            });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// discrete Fourier analysis on the midpoint grid
// ---------------------------------------------------------------------------

/// Fourier data `ĉ(k) = (1/N) Σ_j s_j e^{−i k t_j}` of a sample vector.
///
/// Coefficients are stored for every signed frequency `−N/2 ≤ k ≤ N/2 − 1`,
/// so the transform is exactly invertible and Parseval holds to rounding;
/// [`Self::coeff`] returns zero outside that band. Because the grid is a
/// midpoint grid, the transform is a standard FFT multiplied by the per-bin
/// phase `e^{−iπk/N}`.
#[derive(Debug, Clone)]
pub struct SpectralCoefficients {
    n_points: usize,
    /// Index `i` holds frequency `k = i − N/2`.
    coeffs: Vec<Complex64>,
}

impl SpectralCoefficients {
    /// Grid size `N` the coefficients were computed on.
    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Coefficient `ĉ(k)`; zero for `k` outside the stored band.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let shifted = k + (self.n_points as i64) / 2;
        if shifted < 0 || shifted >= self.n_points as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[shifted as usize]
        }
    }

    /// Largest frequency magnitude stored on the positive side: `N/2 − 1`.
    pub fn max_frequency(&self) -> i64 {
        (self.n_points as i64) / 2 - 1
    }

    /// Σ_k |ĉ(k)|², the spectral side of the Parseval identity.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Evaluate `s_j = Σ_k ĉ(k) e^{i k t_j}` back on the grid.
    pub fn to_samples(&self) -> Vec<Complex64> {
        let n = self.n_points;
        let half = (n / 2) as i64;
        let mut bins = vec![Complex::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = i as i64 - half;
            let phase = Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / n as f64);
            let natural = if k >= 0 {
                k as usize
            } else {
                (k + n as i64) as usize
            };
            bins[natural] = c * phase;
        }
        FftPlanner::new().plan_fft_inverse(n).process(&mut bins);
        bins
    }

    /// Map every coefficient through `f(k, ĉ(k))`, keeping the band.
    pub fn map(&self, f: impl Fn(i64, Complex64) -> Complex64) -> Self {
        let half = (self.n_points as i64) / 2;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| f(i as i64 - half, c))
            .collect();
        Self {
            n_points: self.n_points,
            coeffs,
        }
    }
}

/// Discrete Fourier transform on the midpoint grid:
/// `ĉ(k) = (1/N) Σ_j samples_j e^{−i k t_j}`.
pub fn forward_transform(
    grid: &UniformGrid,
    samples: &[Complex64],
) -> Result<SpectralCoefficients> {
    grid.check_len(samples)?;
    let n = grid.len();
    let mut bins: Vec<Complex<f64>> = samples.to_vec();
    FftPlanner::new().plan_fft_forward(n).process(&mut bins);
    let half = (n / 2) as i64;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    for (i, slot) in coeffs.iter_mut().enumerate() {
        let k = i as i64 - half;
        let natural = if k >= 0 {
            k as usize
        } else {
            (k + n as i64) as usize
        };
        let phase = Complex64::from_polar(1.0, -std::f64::consts::PI * k as f64 / n as f64);
        *slot = bins[natural] * phase / n as f64;
    }
    Ok(SpectralCoefficients {
        n_points: n,
        coeffs,
    })
}

/// Transform of real samples (convenience wrapper over [`forward_transform`]).
pub fn forward_transform_real(grid: &UniformGrid, samples: &[f64]) -> Result<SpectralCoefficients> {
    grid.check_len(samples)?;
    let complex: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    forward_transform(grid, &complex)
}

/// Boundary harmonic conjugate with zero mean.
///
/// Applies the Fourier multiplier `−i·sign(k)` to `ŝ(k)` and sends `ŝ(0)` to
/// zero; the leftover Nyquist bin is outside the multiplier's band and is
/// zeroed as well, which keeps the output real.
pub fn conjugate_function(grid: &UniformGrid, s: &[f64]) -> Result<Vec<f64>> {
    let spectrum = forward_transform_real(grid, s)?;
    let half = (grid.len() as i64) / 2;
    let conjugated = spectrum.map(|k, c| {
        if k == 0 || k == -half {
            Complex64::new(0.0, 0.0)
        } else {
            let sign = if k > 0 { 1.0 } else { -1.0 };
            Complex64::new(0.0, -sign) * c
        }
    });
    Ok(conjugated.to_samples().iter().map(|z| z.re).collect())
}

// ---------------------------------------------------------------------------
// logarithmic quadrature
// ---------------------------------------------------------------------------

/// Mean of `log(max(|s_j|, floor))` over the grid, with the number of
/// samples that hit the clamp.
///
/// Approximates `(1/2π) ∫ log|s| dt` for boundary integrands whose zeros are
/// integrable; a large `clamped_count` signals that the quadrature is not
/// trustworthy at this resolution.
pub fn log_mean(samples: &[f64], floor: f64) -> Result<(f64, usize)> {
    // Negated so a NaN floor is rejected along with zero and negatives.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(floor > 0.0) {
        return Err(Error::Argument(format!(
            "log floor must be positive, got {floor}"
        )));
    }
    let mut clamped = 0usize;
    let mut sum = 0.0;
    for &s in samples {
        let a = s.abs();
        if a < floor {
            clamped += 1;
            sum += floor.ln();
        } else {
            sum += a.ln();
        }
    }
    Ok((sum / samples.len() as f64, clamped))
}

// ---------------------------------------------------------------------------
// dense Hermitian eigensolver
// ---------------------------------------------------------------------------

/// Eigendecomposition of a dense Hermitian matrix.
///
/// Returns eigenvalues in nondecreasing order and the matching orthonormal
/// eigenvector columns. The input must be Hermitian to relative tolerance
/// [`HERMITIAN_TOL`] in the max-norm; anything worse is a contract violation,
/// not something to symmetrize silently.
pub fn hermitian_eigensolve(h: &DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>)> {
    if h.nrows() != h.ncols() {
        return Err(Error::Argument(format!(
            "eigensolver needs a square matrix, got {}×{}",
            h.nrows(),
            h.ncols()
        )));
    }
    let mut defect: f64 = 0.0;
    let mut magnitude: f64 = 0.0;
    for i in 0..h.nrows() {
        for j in 0..h.ncols() {
            defect = defect.max((h[(i, j)] - h[(j, i)].conj()).norm());
            magnitude = magnitude.max(h[(i, j)].norm());
        }
    }
    if defect > HERMITIAN_TOL * magnitude.max(f64::MIN_POSITIVE) {
        return Err(Error::NotHermitian {
            defect,
            tol: HERMITIAN_TOL * magnitude,
        });
    }

    let decomposition = h.clone().symmetric_eigen();
    let n = h.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        decomposition.eigenvalues[a]
            .partial_cmp(&decomposition.eigenvalues[b])
            .expect("eigenvalues of a Hermitian matrix are finite reals")
    });
    let eigenvalues: Vec<f64> = order
        .iter()
        .map(|&i| decomposition.eigenvalues[i])
        .collect();
    let mut eigenvectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &decomposition.eigenvectors.column(src));
    }
    Ok((eigenvalues, eigenvectors))
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn grid_rejects_bad_sizes() {
        assert!(UniformGrid::new(0).is_err());
        assert!(UniformGrid::new(4).is_err());
        assert!(UniformGrid::new(12).is_err());
        assert!(UniformGrid::new(8).is_ok());
        assert!(UniformGrid::new(4096).is_ok());
    }

    #[test]
    fn grid_avoids_zero_and_pi() {
        let grid = UniformGrid::new(64).unwrap();
        for &t in grid.angles() {
            assert!(t > 0.0 && t < 2.0 * std::f64::consts::PI);
            assert!(
                (t - std::f64::consts::PI).abs() > 1e-12,
                "midpoint grid hit t = π at t = {t}"
            );
        }
    }

    #[test]
    fn transform_constant() {
        let grid = UniformGrid::new(32).unwrap();
        let spec = forward_transform_real(&grid, &vec![1.0; 32]).unwrap();
        assert_abs_diff_eq!(spec.coeff(0).re, 1.0, epsilon = 1e-14);
        for k in 1..16 {
            assert!(spec.coeff(k).norm() < 1e-14, "spurious ĉ({k})");
            assert!(spec.coeff(-k).norm() < 1e-14, "spurious ĉ({})", -k);
        }
    }

    #[test]
    fn transform_single_harmonics() {
        let grid = UniformGrid::new(64).unwrap();
        let cos_spec = forward_transform_real(&grid, &grid.sample(|t| t.cos())).unwrap();
        assert!((cos_spec.coeff(1) - c(0.5, 0.0)).norm() < 1e-13);
        assert!((cos_spec.coeff(-1) - c(0.5, 0.0)).norm() < 1e-13);
        for k in [-3i64, -2, 0, 2, 3] {
            assert!(cos_spec.coeff(k).norm() < 1e-13, "cos t leaked into ĉ({k})");
        }

        let exp2 = grid.sample_complex(|t| Complex64::from_polar(1.0, 2.0 * t));
        let exp_spec = forward_transform(&grid, &exp2).unwrap();
        assert!((exp_spec.coeff(2) - c(1.0, 0.0)).norm() < 1e-13);
        for k in [-2i64, -1, 0, 1, 3] {
            assert!(
                exp_spec.coeff(k).norm() < 1e-13,
                "e^{{2it}} leaked into ĉ({k})"
            );
        }
    }

    #[test]
    fn transform_round_trip_is_exact() {
        let grid = UniformGrid::new(128).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        let samples: Vec<Complex64> = (0..128)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let back = forward_transform(&grid, &samples).unwrap().to_samples();
        let scale: f64 = samples.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (a, b) in samples.iter().zip(&back) {
            assert!(
                (a - b).norm() <= 1e-12 * scale,
                "round trip lost {:e}",
                (a - b).norm()
            );
        }
    }

    #[test]
    fn transform_rejects_length_mismatch() {
        let grid = UniformGrid::new(16).unwrap();
        let err = forward_transform_real(&grid, &[0.0; 15]).unwrap_err();
        assert!(matches!(
            err,
            Error::LengthMismatch {
                expected: 16,
                got: 15
            }
        ));
    }

    #[test]
    fn real_input_has_conjugate_symmetric_spectrum() {
        let grid = UniformGrid::new(64).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        let samples: Vec<f64> = (0..64).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let spec = forward_transform_real(&grid, &samples).unwrap();
        let scale = spec.energy().sqrt();
        for k in 1..=spec.max_frequency() {
            let defect = (spec.coeff(-k) - spec.coeff(k).conj()).norm();
            assert!(
                defect <= 1e-13 * scale,
                "ĉ(−{k}) vs conj ĉ({k}): {defect:e}"
            );
        }
    }

    #[test]
    fn parseval_on_random_real_inputs() {
        let grid = UniformGrid::new(256).unwrap();
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..100 {
            let samples: Vec<f64> = (0..256).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let spec = forward_transform_real(&grid, &samples).unwrap();
            let time_energy: f64 =
                samples.iter().map(|x| x * x).sum::<f64>() / samples.len() as f64;
            let rel = (spec.energy() - time_energy).abs() / time_energy;
            assert!(rel <= 1e-12, "Parseval defect {rel:e}");
        }
    }

    #[test]
    fn conjugate_of_cos_is_sin() {
        let grid = UniformGrid::new(64).unwrap();
        let conj = conjugate_function(&grid, &grid.sample(|t| t.cos())).unwrap();
        for (j, &t) in grid.angles().iter().enumerate() {
            assert_abs_diff_eq!(conj[j], t.sin(), epsilon = 1e-12);
        }
    }

    #[test]
    fn conjugate_of_sin_is_minus_cos() {
        let grid = UniformGrid::new(64).unwrap();
        let conj = conjugate_function(&grid, &grid.sample(|t| t.sin())).unwrap();
        for (j, &t) in grid.angles().iter().enumerate() {
            assert_abs_diff_eq!(conj[j], -t.cos(), epsilon = 1e-12);
        }
    }

    #[test]
    fn conjugate_annihilates_constants() {
        let grid = UniformGrid::new(32).unwrap();
        let conj = conjugate_function(&grid, &vec![1.0; 32]).unwrap();
        for &v in &conj {
            assert!(v.abs() < 1e-13);
        }
    }

    /// Random real trigonometric polynomial supported on the stored band
    /// |k| ≤ N/2 − 1 (the space the conjugate-function multiplier acts on).
    fn random_band_limited(grid: &UniformGrid, rng: &mut StdRng) -> Vec<f64> {
        let n = grid.len();
        let mut samples = vec![0.0; n];
        for k in 0..(n / 2) {
            let (a, b) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let decay = 1.0 / (1.0 + k as f64);
            for (j, &t) in grid.angles().iter().enumerate() {
                samples[j] += decay * (a * (k as f64 * t).cos() + b * (k as f64 * t).sin());
            }
        }
        samples
    }

    #[test]
    fn conjugate_is_an_involution_up_to_sign_and_mean() {
        let grid = UniformGrid::new(64).unwrap();
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..25 {
            let s = random_band_limited(&grid, &mut rng);
            let mean = s.iter().sum::<f64>() / s.len() as f64;
            let twice = conjugate_function(&grid, &conjugate_function(&grid, &s).unwrap()).unwrap();
            for (j, &v) in twice.iter().enumerate() {
                assert!(
                    (v + (s[j] - mean)).abs() <= 1e-10,
                    "double conjugate defect {:e} at sample {j}",
                    (v + (s[j] - mean)).abs()
                );
            }
        }
    }

    #[test]
    fn log_mean_of_constant_e() {
        let samples = vec![std::f64::consts::E; 512];
        let (mean, clamped) = log_mean(&samples, LOG_FLOOR_DEFAULT).unwrap();
        assert_abs_diff_eq!(mean, 1.0, epsilon = 1e-14);
        assert_eq!(clamped, 0);
    }

    #[test]
    fn log_mean_of_abs_cos_converges_to_minus_log_two() {
        // Closed form on the midpoint grid: Π_j |2 cos t_j| = 4 exactly, so
        // the discrete mean is −log 2 + log(4)/N; the error halves with N.
        for n in [4096usize, 8192, 16384] {
            let grid = UniformGrid::new(n).unwrap();
            let samples = grid.sample(|t| t.cos().abs());
            let (mean, clamped) = log_mean(&samples, LOG_FLOOR_DEFAULT).unwrap();
            assert_eq!(clamped, 0);
            let predicted = -std::f64::consts::LN_2 + (4.0f64).ln() / n as f64;
            assert_abs_diff_eq!(mean, predicted, epsilon = 1e-12);
            assert!(
                (mean + std::f64::consts::LN_2).abs() <= 5e-4,
                "N={n}: quadrature error {:e}",
                (mean + std::f64::consts::LN_2).abs()
            );
        }
    }

    #[test]
    fn log_mean_counts_clamped_samples() {
        let samples = [1.0, 0.0, 1e-310, 2.0];
        let (_, clamped) = log_mean(&samples, 1e-300).unwrap();
        assert_eq!(clamped, 2);
    }

    #[test]
    fn log_mean_rejects_nonpositive_floor() {
        assert!(log_mean(&[1.0], 0.0).is_err());
        assert!(log_mean(&[1.0], -1.0).is_err());
    }

    #[test]
    fn log_mean_is_monotone_in_floor() {
        let mut rng = StdRng::seed_from_u64(23);
        let samples: Vec<f64> = (0..128).map(|_| rng.gen_range(-1.0..1.0f64)).collect();
        let floors = [1e-300, 1e-10, 1e-3, 1e-1, 1.0, 10.0];
        let mut previous = f64::NEG_INFINITY;
        for &floor in &floors {
            let (mean, _) = log_mean(&samples, floor).unwrap();
            assert!(
                mean >= previous - 1e-15,
                "raising the floor to {floor} decreased the mean"
            );
            previous = mean;
        }
    }

    #[test]
    fn eigensolve_identity_and_diagonal() {
        let id = DMatrix::<Complex64>::identity(3, 3);
        let (vals, _) = hermitian_eigensolve(&id).unwrap();
        for v in vals {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }

        let diag =
            DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.0, 0.0), c(1.0, 0.0)]));
        let (vals, _) = hermitian_eigensolve(&diag).unwrap();
        assert_abs_diff_eq!(vals[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn eigensolve_pauli_x() {
        let x =
            DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let (vals, vecs) = hermitian_eigensolve(&x).unwrap();
        assert_abs_diff_eq!(vals[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-12);
        for (k, &val) in vals.iter().enumerate() {
            let v = vecs.column(k);
            let residual = (&x * v - v * c(val, 0.0)).norm();
            assert!(residual < 1e-12);
        }
    }

    #[test]
    fn eigensolve_rejects_non_hermitian() {
        let bad =
            DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            hermitian_eigensolve(&bad),
            Err(Error::NotHermitian { .. })
        ));
    }

    fn random_hermitian(n: usize, rng: &mut StdRng) -> DMatrix<Complex64> {
        let mut h = DMatrix::from_fn(n, n, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let adjoint = h.adjoint();
        h = (h + adjoint) * c(0.5, 0.0);
        h
    }

    #[test]
    fn eigensolve_contract_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(29);
        for &n in &[4usize, 16, 64, 256] {
            let h = random_hermitian(n, &mut rng);
            let (vals, vecs) = hermitian_eigensolve(&h).unwrap();

            // ascending order
            for w in vals.windows(2) {
                assert!(w[0] <= w[1] + 1e-14);
            }

            // trace identity
            let trace: f64 = (0..n).map(|i| h[(i, i)].re).sum();
            let sum: f64 = vals.iter().sum();
            assert!(
                (trace - sum).abs() <= 1e-10 * trace.abs().max(1.0),
                "n={n}: eigenvalue sum {sum} vs trace {trace}"
            );

            // residual + orthonormality contract
            let norm2: f64 = vals.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
            for (k, &val) in vals.iter().enumerate() {
                let v = vecs.column(k);
                let residual = (&h * v - v * c(val, 0.0)).norm();
                assert!(
                    residual <= 1e-10 * norm2.max(1e-300),
                    "n={n}, k={k}: residual {residual:e} vs ‖h‖₂ ≈ {norm2:e}"
                );
            }
            let gram = vecs.adjoint() * &vecs;
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (gram[(i, j)] - c(want, 0.0)).norm() < 1e-10,
                        "eigenvector Gram defect at ({i},{j})"
                    );
                }
            }
        }
    }
}

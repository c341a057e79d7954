//! Outer functions on the unit disc built from boundary modulus data, and
//! the eigenvector candidates they induce for compressed Toeplitz operators.
//!
//! Given a strictly positive modulus `w` on the boundary circle, the outer
//! function with that modulus is `exp(s + i·s̃)` where `s = log w` and `s̃`
//! is its conjugate function. The normalization makes the value at the
//! origin `exp(ŝ(0))` real and positive, which pins down the otherwise free
//! unimodular constant and keeps every construction deterministic.
//!
//! For a real boundary symbol `φ`, a weight coefficient `c`, and a spectral
//! parameter `λ` strictly between the classified interval endpoints, the
//! candidate eigenfunction has squared modulus `2Re(c·e^{it}) / (φ − λ)`
//! samplewise. A negative value at any sample with non-negligible weight is
//! proof that `λ` lies outside the admissible interval and is reported as
//! [`Error::NotEigenvalue`].

use num_complex::Complex64;

use crate::errors::{Error, Result};
use crate::numerics::{conjugate_function, forward_transform_real, UniformGrid, LOG_FLOOR_DEFAULT};
use crate::symbols::{CircleSymbol, WEIGHT_EXCLUSION_TOL};

use super::projective::ProjectivePoint;

/// Modulus floor corresponding to the squared-modulus clamp
/// [`LOG_FLOOR_DEFAULT`]: samples at or below it are excluded from relative
/// modulus-error reporting.
const MODULUS_FLOOR: f64 = 1e-150;

/// Boundary trace of an outer function on the unit disc, together with its
/// value and derivative at the origin.
#[derive(Debug, Clone)]
pub struct DiscOuterBoundary {
    grid: UniformGrid,
    samples: Vec<Complex64>,
    value0: f64,
    deriv0: Complex64,
    clamped_samples: usize,
}

impl DiscOuterBoundary {
    /// The angular grid the boundary trace lives on.
    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    /// Boundary samples of the outer function.
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Value at the origin; real and strictly positive by normalization.
    pub fn value0(&self) -> f64 {
        self.value0
    }

    /// Derivative at the origin, `value0 · 2·ŝ(1)`.
    pub fn deriv0(&self) -> Complex64 {
        self.deriv0
    }

    /// Number of samples whose squared modulus was clamped to the floor
    /// because the annihilator weight vanished there.
    pub fn clamped_samples(&self) -> usize {
        self.clamped_samples
    }

    /// The origin data `(value0, deriv0)` as a point on the projective line.
    pub fn point(&self) -> ProjectivePoint {
        ProjectivePoint::new(Complex64::new(self.value0, 0.0), self.deriv0)
            .expect("value0 is strictly positive by construction")
    }

    /// Largest relative deviation of `|samples|` from the target modulus,
    /// measured only where the target exceeds the clamp floor.
    pub fn max_relative_modulus_error(&self, target: &[f64]) -> Result<f64> {
        if target.len() != self.samples.len() {
            return Err(Error::LengthMismatch {
                expected: self.samples.len(),
                got: target.len(),
            });
        }
        let mut worst = 0.0_f64;
        for (sample, &t) in self.samples.iter().zip(target) {
            if t > MODULUS_FLOOR {
                worst = worst.max((sample.norm() - t).abs() / t);
            }
        }
        Ok(worst)
    }

    #[cfg(test)]
    pub(crate) fn from_parts(
        grid: UniformGrid,
        samples: Vec<Complex64>,
        value0: f64,
        deriv0: Complex64,
        clamped_samples: usize,
    ) -> Self {
        Self {
            grid,
            samples,
            value0,
            deriv0,
            clamped_samples,
        }
    }
}

/// Builds the boundary trace of the outer function whose modulus on the
/// grid is `w`, normalized to be positive at the origin.
///
/// The modulus must be strictly positive samplewise; zeros or negative
/// values are a domain error. Use [`f_lambda`] for data whose zeros come
/// from a vanishing annihilator weight — it applies the clamp policy before
/// delegating here.
pub fn disc_outer(grid: &UniformGrid, w: &[f64]) -> Result<DiscOuterBoundary> {
    disc_outer_with_clamps(grid, w, 0)
}

fn disc_outer_with_clamps(
    grid: &UniformGrid,
    w: &[f64],
    clamped_samples: usize,
) -> Result<DiscOuterBoundary> {
    if w.len() != grid.len() {
        return Err(Error::LengthMismatch {
            expected: grid.len(),
            got: w.len(),
        });
    }
    for (j, &value) in w.iter().enumerate() {
        // Negated acceptance test so NaN samples fail positivity directly.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::Domain(format!(
                "outer modulus must be strictly positive and finite; sample {j} is {value}"
            )));
        }
    }

    let s: Vec<f64> = w.iter().map(|&value| value.ln()).collect();
    let s_tilde = conjugate_function(grid, &s)?;
    let samples: Vec<Complex64> = w
        .iter()
        .zip(&s_tilde)
        .map(|(&modulus, &phase)| Complex64::from_polar(modulus, phase))
        .collect();

    let s_hat = forward_transform_real(grid, &s)?;
    let value0 = s_hat.coeff(0).re.exp();
    let deriv0 = 2.0 * value0 * s_hat.coeff(1);

    Ok(DiscOuterBoundary {
        grid: grid.clone(),
        samples,
        value0,
        deriv0,
        clamped_samples,
    })
}

/// Builds the outer eigenfunction candidate for the symbol `φ`, weight
/// coefficient `c`, and spectral parameter `λ`.
///
/// The squared modulus at each sample is `2Re(c·e^{it_j}) / (φ_j − λ)`.
/// Samples where the weight `2Re(c·e^{it})` is negligibly small (at most
/// `1e-14` in absolute value) are clamped to the squared-modulus floor and
/// counted; a negative squared modulus anywhere else proves `λ` is not an
/// eigenvalue and is reported as such.
pub fn f_lambda(symbol: &CircleSymbol, c: Complex64, lambda: f64) -> Result<DiscOuterBoundary> {
    if !lambda.is_finite() {
        return Err(Error::Argument("spectral parameter must be finite".into()));
    }
    let grid = symbol.grid();
    let phi = symbol.f();
    let mut modulus = Vec::with_capacity(grid.len());
    let mut clamped = 0_usize;
    for (j, &t) in grid.angles().iter().enumerate() {
        let weight = 2.0 * (c * Complex64::from_polar(1.0, t)).re;
        if weight.abs() <= WEIGHT_EXCLUSION_TOL {
            modulus.push(LOG_FLOOR_DEFAULT.sqrt());
            clamped += 1;
            continue;
        }
        let denom = phi[j] - lambda;
        if denom == 0.0 {
            return Err(Error::NotEigenvalue {
                lambda,
                reason: format!(
                    "symbol equals λ at angle {t:.6} where the annihilator weight does not vanish"
                ),
            });
        }
        let squared = weight / denom;
        if squared <= 0.0 {
            return Err(Error::NotEigenvalue {
                lambda,
                reason: format!(
                    "squared modulus is negative at angle {t:.6}; λ lies outside the \
                     admissible interval"
                ),
            });
        }
        modulus.push(squared.sqrt().max(MODULUS_FLOOR));
    }
    disc_outer_with_clamps(grid, &modulus, clamped)
}

/// The projective point `(f(0), f'(0))` of the eigenfunction candidate
/// produced by [`f_lambda`].
pub fn lambda_map(symbol: &CircleSymbol, c: Complex64, lambda: f64) -> Result<ProjectivePoint> {
    Ok(f_lambda(symbol, c, lambda)?.point())
}

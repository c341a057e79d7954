//! Grid-refinement probe for integrability of a sampled ratio.
//!
//! Given samples of `|numerator/denominator|` on the finest grid, the probe
//! compares the mean of the ratio across nested coarser subgrids.  A mean
//! that has stopped moving indicates an integrable ratio; a mean that keeps
//! growing by a fixed factor at every refinement indicates divergence.  All
//! accumulation happens in log space so ratios like `e^{+1/|sin(t/2)|}`,
//! which overflow `f64` near their singularity, are handled exactly.

use serde::{Deserialize, Serialize};

use crate::errors::{Error, Result};

/// Relative-change threshold under which the refinement means are considered
/// converged.
pub const CONVERGENCE_TOL: f64 = 1e-3;

/// Growth factor that must be met at every refinement for a divergence call.
pub const DIVERGENCE_FACTOR: f64 = 1.5;

/// Outcome of the refinement probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegrabilityVerdict {
    /// The mean stabilized: relative change below [`CONVERGENCE_TOL`] at the
    /// last refinement.
    Integrable,
    /// The mean grew by at least [`DIVERGENCE_FACTOR`] at every refinement.
    Divergent,
    /// Neither pattern held; the probe cannot decide at this resolution.
    Inconclusive,
}

/// Decide whether `|numerator/denominator|` looks integrable by comparing its
/// mean over `levels` nested grids.
///
/// Level `ℓ` (for `ℓ = 0, …, levels-1`) subsamples the finest grid with
/// stride `2^(levels-ℓ)` at offset `stride/2`, so the coarsest level comes
/// first and each doubling halves the stride.  The full grid itself is never
/// used: on a grid symmetric about a singular angle (such as `t = π` on a
/// midpoint grid) the odd-index and even-index halves carry identical means,
/// so the half-to-full step would report spurious convergence.  The half-step
/// offsets keep the closest sample to any boundary singularity moving inward
/// at every refinement.  Each level's mean of `|num_j| / |den_j|` is formed
/// via log-sum-exp; a zero denominator with a nonzero numerator contributes
/// `+∞`, and `0/0` contributes `0`.
///
/// Requires `levels ≥ 2`, equal sample lengths divisible by `2^levels`, and
/// at least 8 samples on the coarsest level.
pub fn endpoint_membership(
    numerator: &[f64],
    denominator: &[f64],
    levels: usize,
) -> Result<IntegrabilityVerdict> {
    if numerator.len() != denominator.len() {
        return Err(Error::LengthMismatch {
            expected: numerator.len(),
            got: denominator.len(),
        });
    }
    if levels < 2 {
        return Err(Error::Argument(format!(
            "refinement probe needs at least 2 levels, got {levels}"
        )));
    }
    let n = numerator.len();
    let coarsest_stride = 1usize
        .checked_shl(levels as u32)
        .ok_or_else(|| Error::Argument(format!("too many levels: {levels}")))?;
    if !n.is_multiple_of(coarsest_stride) || n / coarsest_stride < 8 {
        return Err(Error::Argument(format!(
            "{n} samples cannot support {levels} refinement levels \
             (need a multiple of {coarsest_stride} with at least 8 samples per level)"
        )));
    }

    let log_means: Vec<f64> = (0..levels)
        .map(|level| {
            let stride = 1usize << (levels - level);
            let offset = stride / 2;
            let terms: Vec<f64> = (offset..n)
                .step_by(stride)
                .map(|j| log_abs_ratio(numerator[j], denominator[j]))
                .collect();
            log_sum_exp(&terms) - (terms.len() as f64).ln()
        })
        .collect();

    let last = log_means[levels - 1];
    let prev = log_means[levels - 2];
    if converged(prev, last) {
        return Ok(IntegrabilityVerdict::Integrable);
    }
    let log_factor = DIVERGENCE_FACTOR.ln();
    let divergent = log_means
        .windows(2)
        .all(|pair| grows_by_factor(pair[0], pair[1], log_factor));
    if divergent {
        return Ok(IntegrabilityVerdict::Divergent);
    }
    Ok(IntegrabilityVerdict::Inconclusive)
}

/// `ln |num/den|` with the conventions `0/anything = 0` and `x/0 = ∞` for
/// `x ≠ 0`.
fn log_abs_ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        f64::NEG_INFINITY
    } else if den == 0.0 {
        f64::INFINITY
    } else {
        num.abs().ln() - den.abs().ln()
    }
}

/// `ln Σ exp(x_i)`, exact for `±∞` entries.
fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        // All -∞ (empty sum → 0), or some +∞ (sum → ∞).
        return max;
    }
    let sum: f64 = terms.iter().map(|&x| (x - max).exp()).sum();
    max + sum.ln()
}

/// Relative change `|e^last / e^prev - 1| <` [`CONVERGENCE_TOL`], in log space.
fn converged(log_prev: f64, log_last: f64) -> bool {
    if log_prev == f64::NEG_INFINITY && log_last == f64::NEG_INFINITY {
        // Both means are exactly zero: converged to the zero function.
        return true;
    }
    if !log_prev.is_finite() || !log_last.is_finite() {
        return false;
    }
    ((log_last - log_prev).exp() - 1.0).abs() < CONVERGENCE_TOL
}

/// Did the mean grow by at least `e^log_factor` at this refinement?
fn grows_by_factor(log_prev: f64, log_next: f64, log_factor: f64) -> bool {
    if log_next == f64::INFINITY {
        // Overflowing growth counts as growth, even from an already-infinite
        // previous level.
        return true;
    }
    if log_prev == f64::INFINITY {
        return false;
    }
    log_next - log_prev >= log_factor
}

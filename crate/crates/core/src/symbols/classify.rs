//! Interval classification of truncated-operator spectra from boundary data.
//!
//! For a self-adjoint symbol the candidate continuous spectrum is an interval
//! whose endpoints are read off from boundary extremes.  On the annulus the
//! two boundary components must take opposite signs; on the disc the sign
//! pattern is taken against the alignment weight `w(t) = 2 Re(c e^{it})`
//! induced by the derivative-pinning direction `c`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::errors::{Error, Result};
use crate::symbols::{AnnulusSymbol, CircleSymbol};

/// Weights closer to zero than this are excluded from disc classification;
/// the corresponding samples carry no sign information.
pub const WEIGHT_EXCLUSION_TOL: f64 = 1e-14;

/// Whether the candidate spectrum is a genuine interval or degenerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalCase {
    /// The endpoint candidates bracket zero: the spectrum fills `[lower, upper]`.
    Interval,
    /// The sign condition fails; the spectrum contains at most one point.
    AtMostPoint,
}

/// Classification outcome: the case, the candidate endpoints, and which sign
/// arrangement produced them.
///
/// For [`IntervalCase::Interval`], `lower < 0 < upper` and the spectrum is the
/// closed interval `[lower, upper]`.  For [`IntervalCase::AtMostPoint`] the
/// endpoints record the failed candidates (the positively-oriented pair on the
/// annulus) and `orientation` is `0`; an endpoint is NaN when no sample
/// carried the required sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalClassification {
    /// Interval or degenerate.
    pub case: IntervalCase,
    /// Lower endpoint candidate: the largest symbol value over the
    /// negative-sign class.
    pub lower: f64,
    /// Upper endpoint candidate: the smallest symbol value over the
    /// positive-sign class.
    pub upper: f64,
    /// `+1` if the upper endpoint comes from the outer/positive-weight
    /// boundary, `-1` if the roles are swapped, `0` when degenerate.
    pub orientation: i32,
}

impl IntervalClassification {
    /// True when the classification is a genuine interval.
    pub fn is_interval(&self) -> bool {
        self.case == IntervalCase::Interval
    }

    /// Length of the candidate interval, `upper - lower`.
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

fn max_of(samples: impl IntoIterator<Item = f64>) -> f64 {
    samples.into_iter().fold(
        f64::NAN,
        |acc, x| if acc.is_nan() || x > acc { x } else { acc },
    )
}

fn min_of(samples: impl IntoIterator<Item = f64>) -> f64 {
    samples.into_iter().fold(
        f64::NAN,
        |acc, x| if acc.is_nan() || x < acc { x } else { acc },
    )
}

/// Classify the candidate spectrum of an annulus symbol.
///
/// The spectrum is an interval exactly when the boundary samples take
/// opposite strict signs: `max fq < 0 < min f1` (orientation `+1`, interval
/// `[max fq, min f1]`) or `max f1 < 0 < min fq` (orientation `-1`, interval
/// `[max f1, min fq]`).  Otherwise the result is `AtMostPoint` carrying the
/// positively-oriented candidates.
pub fn classify_annulus(symbol: &AnnulusSymbol) -> IntervalClassification {
    let max_f1 = max_of(symbol.f1().iter().copied());
    let min_f1 = min_of(symbol.f1().iter().copied());
    let max_fq = max_of(symbol.fq().iter().copied());
    let min_fq = min_of(symbol.fq().iter().copied());

    if max_fq < 0.0 && 0.0 < min_f1 {
        IntervalClassification {
            case: IntervalCase::Interval,
            lower: max_fq,
            upper: min_f1,
            orientation: 1,
        }
    } else if max_f1 < 0.0 && 0.0 < min_fq {
        IntervalClassification {
            case: IntervalCase::Interval,
            lower: max_f1,
            upper: min_fq,
            orientation: -1,
        }
    } else {
        IntervalClassification {
            case: IntervalCase::AtMostPoint,
            lower: max_fq,
            upper: min_f1,
            orientation: 0,
        }
    }
}

/// Classify the candidate spectrum of a disc symbol relative to the
/// derivative-pinning direction `c`.
///
/// Each sample receives the alignment weight `w_j = 2 Re(c e^{i t_j})`;
/// samples with `|w_j| <` [`WEIGHT_EXCLUSION_TOL`] are excluded.  With
/// `lower = max φ` over the negative-weight samples and `upper = min φ` over
/// the positive-weight samples, the spectrum is the interval
/// `[lower, upper]` exactly when `lower < 0 < upper`.  An empty sign class
/// leaves the corresponding endpoint NaN (and the case degenerate).
pub fn classify_neil(symbol: &CircleSymbol, c: Complex64) -> IntervalClassification {
    let mut lower = f64::NAN;
    let mut upper = f64::NAN;
    for (&t, &phi) in symbol.grid().angles().iter().zip(symbol.f()) {
        let w = 2.0 * (c * Complex64::new(0.0, t).exp()).re;
        if w.abs() < WEIGHT_EXCLUSION_TOL {
            continue;
        }
        if w < 0.0 {
            if lower.is_nan() || phi > lower {
                lower = phi;
            }
        } else if upper.is_nan() || phi < upper {
            upper = phi;
        }
    }

    let is_interval = lower < 0.0 && 0.0 < upper;
    IntervalClassification {
        case: if is_interval {
            IntervalCase::Interval
        } else {
            IntervalCase::AtMostPoint
        },
        lower,
        upper,
        orientation: if is_interval { 1 } else { 0 },
    }
}

/// Scan derivative-pinning directions `c = e^{iθ_k}/2`, `θ_k = 2πk/n_phases`,
/// and return the direction whose classification gives the widest interval.
///
/// Ties keep the earliest phase.  When no phase yields an interval, the
/// returned pair is the phase-zero direction together with its degenerate
/// classification.  Requires `n_phases ≥ 4`.
pub fn scan_neil_c(
    symbol: &CircleSymbol,
    n_phases: usize,
) -> Result<(Complex64, IntervalClassification)> {
    if n_phases < 4 {
        return Err(Error::Argument(format!(
            "phase scan needs at least 4 phases, got {n_phases}"
        )));
    }
    let mut fallback: Option<(Complex64, IntervalClassification)> = None;
    let mut best: Option<(Complex64, IntervalClassification)> = None;
    for k in 0..n_phases {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n_phases as f64;
        let c = Complex64::new(0.0, theta).exp() * 0.5;
        let classification = classify_neil(symbol, c);
        if fallback.is_none() {
            fallback = Some((c, classification));
        }
        if classification.is_interval() {
            let wins = match &best {
                None => true,
                Some((_, incumbent)) => classification.width() > incumbent.width(),
            };
            if wins {
                best = Some((c, classification));
            }
        }
    }
    Ok(best
        .or(fallback)
        .expect("n_phases >= 4 guarantees a candidate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::UniformGrid;

    fn grid(n: usize) -> UniformGrid {
        UniformGrid::new(n).unwrap()
    }

    fn annulus_const(q: f64, n: usize, v1: f64, vq: f64) -> AnnulusSymbol {
        AnnulusSymbol::from_samples(q, grid(n), vec![v1; n], vec![vq; n]).unwrap()
    }

    fn sign_cos_symbol(n: usize) -> CircleSymbol {
        let g = grid(n);
        let f = g.angles().iter().map(|t| t.cos().signum()).collect();
        CircleSymbol::from_samples(g, f).unwrap()
    }

    #[test]
    fn opposite_step_symbol_is_an_interval() {
        let c = classify_annulus(&annulus_const(0.25, 64, 1.0, -1.0));
        assert_eq!(c.case, IntervalCase::Interval);
        assert_eq!(c.lower, -1.0);
        assert_eq!(c.upper, 1.0);
        assert_eq!(c.orientation, 1);
    }

    #[test]
    fn swapped_step_symbol_flips_orientation() {
        let c = classify_annulus(&annulus_const(0.25, 64, -1.0, 1.0));
        assert_eq!(c.case, IntervalCase::Interval);
        assert_eq!(c.lower, -1.0);
        assert_eq!(c.upper, 1.0);
        assert_eq!(c.orientation, -1);
    }

    #[test]
    fn same_sign_boundaries_degenerate() {
        let c = classify_annulus(&annulus_const(0.5, 64, 5.0, 5.0));
        assert_eq!(c.case, IntervalCase::AtMostPoint);
        assert_eq!(c.orientation, 0);
    }

    #[test]
    fn annulus_classification_is_stable_under_grid_refinement() {
        let coarse_grid = grid(64);
        let fine_grid = grid(4096);
        let mk = |g: &UniformGrid| {
            let f1: Vec<f64> = g.angles().iter().map(|t| 1.0 + 0.3 * t.cos()).collect();
            let fq: Vec<f64> = g
                .angles()
                .iter()
                .map(|t| -1.0 + 0.1 * (2.0 * t).sin())
                .collect();
            AnnulusSymbol::from_samples(0.25, g.clone(), f1, fq).unwrap()
        };
        let coarse = classify_annulus(&mk(&coarse_grid));
        let fine = classify_annulus(&mk(&fine_grid));
        assert_eq!(coarse.case, fine.case);
        assert_eq!(coarse.orientation, fine.orientation);
        assert!((coarse.lower - fine.lower).abs() < 1e-2);
        assert!((coarse.upper - fine.upper).abs() < 1e-2);
    }

    #[test]
    fn arc_classification_is_exact_under_grid_refinement() {
        use crate::symbols::{realize, Arc, SymbolData, SymbolSpec};
        let spec = SymbolSpec {
            q: Some(0.25),
            data: SymbolData::Arcs(vec![
                vec![
                    Arc {
                        start: 0.0,
                        end: 2.0,
                        value: 0.75,
                    },
                    Arc {
                        start: 2.0,
                        end: 2.0 * std::f64::consts::PI,
                        value: 1.5,
                    },
                ],
                vec![Arc {
                    start: 0.0,
                    end: 2.0 * std::f64::consts::PI,
                    value: -2.0,
                }],
            ]),
        };
        let coarse = classify_annulus(&realize(&spec, &grid(64)).unwrap().into_annulus().unwrap());
        let fine = classify_annulus(&realize(&spec, &grid(4096)).unwrap().into_annulus().unwrap());
        assert_eq!(coarse, fine);
        assert_eq!(coarse.lower, -2.0);
        assert_eq!(coarse.upper, 0.75);
    }

    #[test]
    fn sign_cos_with_real_pinning_is_an_interval() {
        let c = classify_neil(&sign_cos_symbol(512), Complex64::new(0.5, 0.0));
        assert_eq!(c.case, IntervalCase::Interval);
        assert_eq!(c.lower, -1.0);
        assert_eq!(c.upper, 1.0);
        assert_eq!(c.orientation, 1);
    }

    #[test]
    fn sign_cos_with_imaginary_pinning_degenerates() {
        let c = classify_neil(&sign_cos_symbol(512), Complex64::new(0.0, 0.5));
        assert_eq!(c.case, IntervalCase::AtMostPoint);
    }

    #[test]
    fn zero_symbol_degenerates() {
        let g = grid(256);
        let symbol = CircleSymbol::from_samples(g, vec![0.0; 256]).unwrap();
        let c = classify_neil(&symbol, Complex64::new(0.5, 0.0));
        assert_eq!(c.case, IntervalCase::AtMostPoint);
        assert_eq!(c.lower, 0.0);
        assert_eq!(c.upper, 0.0);
    }

    #[test]
    fn disc_classification_ignores_positive_scaling_of_c() {
        let symbol = sign_cos_symbol(1024);
        let c = Complex64::new(0.3, 0.4);
        let base = classify_neil(&symbol, c);
        for scale in [1e-3, 0.5, 2.0, 1e3] {
            assert_eq!(classify_neil(&symbol, c * scale), base, "scale {scale}");
        }
    }

    #[test]
    fn phase_scan_finds_the_aligned_direction_for_sign_cos() {
        let (c, classification) = scan_neil_c(&sign_cos_symbol(512), 16).unwrap();
        assert!((c - Complex64::new(0.5, 0.0)).norm() < 1e-12);
        assert_eq!(classification.case, IntervalCase::Interval);
        assert_eq!(classification.lower, -1.0);
        assert_eq!(classification.upper, 1.0);
    }

    #[test]
    fn phase_scan_finds_the_aligned_direction_for_sign_sin() {
        let g = grid(512);
        let f = g.angles().iter().map(|t| t.sin().signum()).collect();
        let symbol = CircleSymbol::from_samples(g, f).unwrap();
        let (c, classification) = scan_neil_c(&symbol, 16).unwrap();
        assert!((c - Complex64::new(0.0, -0.5)).norm() < 1e-12);
        assert_eq!(classification.case, IntervalCase::Interval);
        assert_eq!(classification.width(), 2.0);
    }

    #[test]
    fn phase_scan_reports_degenerate_when_no_phase_works() {
        let g = grid(256);
        let symbol = CircleSymbol::from_samples(g, vec![5.0; 256]).unwrap();
        let (_, classification) = scan_neil_c(&symbol, 16).unwrap();
        assert_eq!(classification.case, IntervalCase::AtMostPoint);
    }

    #[test]
    fn phase_scan_requires_enough_phases() {
        assert!(scan_neil_c(&sign_cos_symbol(64), 3).is_err());
    }
}

//! Boundary symbol descriptions and their realizations on sample grids.
//!
//! A *symbol* is a bounded real function on the boundary of the domain: two
//! circle components for the annulus (outer radius 1, inner radius `q`), one
//! circle for the disc.  Symbols enter either as closed-form descriptions
//! (step functions over arcs, trigonometric polynomials) or as raw sample
//! vectors, and are realized as finite sample vectors on a [`UniformGrid`]
//! before any numerical work happens.

mod classify;
mod integrability;

pub use classify::{
    classify_annulus, classify_neil, scan_neil_c, IntervalCase, IntervalClassification,
    WEIGHT_EXCLUSION_TOL,
};
pub use integrability::{endpoint_membership, IntegrabilityVerdict};

use serde::{Deserialize, Serialize};

use crate::errors::{Error, Result};
use crate::numerics::UniformGrid;

/// Absolute tolerance for arc endpoints when checking that a list of arcs
/// partitions `[0, 2π)`.
pub const ARC_PARTITION_TOL: f64 = 1e-9;

/// One constant piece of a step symbol: the value taken on `[start, end)`.
///
/// Angles are in radians.  A boundary description is a list of arcs that
/// together cover `[0, 2π)` exactly once (up to [`ARC_PARTITION_TOL`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    /// Left endpoint of the arc, inclusive.
    pub start: f64,
    /// Right endpoint of the arc, exclusive.
    pub end: f64,
    /// Constant value of the symbol on the arc.
    pub value: f64,
}

/// Real trigonometric polynomial `a0 + Σ_k cos_coeffs[k-1]·cos(kt) + sin_coeffs[k-1]·sin(kt)`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TrigPolynomial {
    /// Constant term.
    pub a0: f64,
    /// Coefficients of `cos(kt)` for `k = 1, 2, …`.
    #[serde(default)]
    pub cos_coeffs: Vec<f64>,
    /// Coefficients of `sin(kt)` for `k = 1, 2, …`.
    #[serde(default)]
    pub sin_coeffs: Vec<f64>,
}

impl TrigPolynomial {
    /// Largest harmonic with a (possibly zero) stored coefficient.
    pub fn degree(&self) -> usize {
        self.cos_coeffs.len().max(self.sin_coeffs.len())
    }

    /// Evaluate the polynomial at angle `t`.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = self.a0;
        for (k, &a) in self.cos_coeffs.iter().enumerate() {
            acc += a * ((k + 1) as f64 * t).cos();
        }
        for (k, &b) in self.sin_coeffs.iter().enumerate() {
            acc += b * ((k + 1) as f64 * t).sin();
        }
        acc
    }
}

/// Per-boundary payloads of a [`SymbolSpec`], one entry per boundary circle.
///
/// The serialized form is `{"kind": "...", "boundaries": [...]}`; an annulus
/// spec carries two boundary entries (outer first, inner second), a disc spec
/// carries one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "boundaries", rename_all = "snake_case")]
pub enum SymbolData {
    /// Piecewise-constant description: each boundary is a list of arcs.
    Arcs(Vec<Vec<Arc>>),
    /// Band-limited description: each boundary is a trigonometric polynomial.
    Trig(Vec<TrigPolynomial>),
    /// Raw samples on the midpoint grid; lengths must match the grid exactly.
    Samples(Vec<Vec<f64>>),
}

impl SymbolData {
    /// Number of boundary components the payload describes.
    pub fn boundary_count(&self) -> usize {
        match self {
            SymbolData::Arcs(b) => b.len(),
            SymbolData::Trig(b) => b.len(),
            SymbolData::Samples(b) => b.len(),
        }
    }
}

/// Declarative description of a boundary symbol, as read from configuration.
///
/// `q` is the inner radius and is required (in `(0, 1)`) when the payload has
/// two boundaries; it is ignored for single-boundary (disc) payloads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolSpec {
    /// Inner radius of the annulus; `None` for disc symbols.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    /// The per-boundary payloads.
    #[serde(flatten)]
    pub data: SymbolData,
}

/// A symbol realized on the two boundary circles of an annulus.
///
/// `f1` holds the samples on the outer circle `|z| = 1`, `fq` the samples on
/// the inner circle `|z| = q`, both on the same midpoint grid.
#[derive(Debug, Clone)]
pub struct AnnulusSymbol {
    q: f64,
    grid: UniformGrid,
    f1: Vec<f64>,
    fq: Vec<f64>,
}

impl AnnulusSymbol {
    /// Bundle existing sample vectors into a symbol, checking lengths,
    /// finiteness, and `q ∈ (0, 1)`.
    pub fn from_samples(q: f64, grid: UniformGrid, f1: Vec<f64>, fq: Vec<f64>) -> Result<Self> {
        check_inner_radius(q)?;
        check_boundary_samples(&grid, &f1)?;
        check_boundary_samples(&grid, &fq)?;
        Ok(Self { q, grid, f1, fq })
    }

    /// Inner radius of the annulus.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// The shared sample grid.
    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    /// Samples on the outer boundary circle.
    pub fn f1(&self) -> &[f64] {
        &self.f1
    }

    /// Samples on the inner boundary circle.
    pub fn fq(&self) -> &[f64] {
        &self.fq
    }
}

/// A symbol realized on the unit circle (disc case).
#[derive(Debug, Clone)]
pub struct CircleSymbol {
    grid: UniformGrid,
    f: Vec<f64>,
}

impl CircleSymbol {
    /// Bundle an existing sample vector into a symbol, checking length and
    /// finiteness.
    pub fn from_samples(grid: UniformGrid, f: Vec<f64>) -> Result<Self> {
        check_boundary_samples(&grid, &f)?;
        Ok(Self { grid, f })
    }

    /// The sample grid.
    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    /// Samples on the circle.
    pub fn f(&self) -> &[f64] {
        &self.f
    }
}

/// Result of realizing a [`SymbolSpec`]: annulus (two boundaries) or circle
/// (one boundary).
#[derive(Debug, Clone)]
pub enum RealizedSymbol {
    /// Two-boundary payload realized on the annulus.
    Annulus(AnnulusSymbol),
    /// One-boundary payload realized on the unit circle.
    Circle(CircleSymbol),
}

impl RealizedSymbol {
    /// The annulus variant, or a domain error.
    pub fn into_annulus(self) -> Result<AnnulusSymbol> {
        match self {
            RealizedSymbol::Annulus(s) => Ok(s),
            RealizedSymbol::Circle(_) => Err(Error::Spec(
                "expected a two-boundary (annulus) symbol, got a one-boundary symbol".into(),
            )),
        }
    }

    /// The circle variant, or a domain error.
    pub fn into_circle(self) -> Result<CircleSymbol> {
        match self {
            RealizedSymbol::Circle(s) => Ok(s),
            RealizedSymbol::Annulus(_) => Err(Error::Spec(
                "expected a one-boundary (disc) symbol, got a two-boundary symbol".into(),
            )),
        }
    }
}

/// Realize a declarative symbol description as sample vectors on `grid`.
///
/// Arcs are validated to partition `[0, 2π)` (sorted by start, contiguous,
/// non-overlapping, within [`ARC_PARTITION_TOL`]) and evaluated exactly at the
/// midpoint angles.  Trigonometric polynomials are evaluated pointwise and
/// must have degree below `grid.len()/2` so the grid resolves them.  Sample
/// payloads must match the grid length exactly; no resampling is done.
pub fn realize(spec: &SymbolSpec, grid: &UniformGrid) -> Result<RealizedSymbol> {
    let boundary_count = spec.data.boundary_count();
    let boundaries: Vec<Vec<f64>> = match &spec.data {
        SymbolData::Arcs(per_boundary) => per_boundary
            .iter()
            .map(|arcs| realize_arcs(arcs, grid))
            .collect::<Result<_>>()?,
        SymbolData::Trig(per_boundary) => per_boundary
            .iter()
            .map(|poly| realize_trig(poly, grid))
            .collect::<Result<_>>()?,
        SymbolData::Samples(per_boundary) => per_boundary
            .iter()
            .map(|samples| {
                if samples.len() != grid.len() {
                    return Err(Error::Spec(format!(
                        "sample payload has {} entries but the grid has {} points",
                        samples.len(),
                        grid.len()
                    )));
                }
                Ok(samples.clone())
            })
            .collect::<Result<_>>()?,
    };

    match boundary_count {
        1 => {
            let mut it = boundaries.into_iter();
            let f = it.next().expect("one boundary");
            Ok(RealizedSymbol::Circle(CircleSymbol::from_samples(
                grid.clone(),
                f,
            )?))
        }
        2 => {
            let q = spec.q.ok_or_else(|| {
                Error::Spec("a two-boundary symbol requires the inner radius q".into())
            })?;
            let mut it = boundaries.into_iter();
            let f1 = it.next().expect("two boundaries");
            let fq = it.next().expect("two boundaries");
            Ok(RealizedSymbol::Annulus(AnnulusSymbol::from_samples(
                q,
                grid.clone(),
                f1,
                fq,
            )?))
        }
        n => Err(Error::Spec(format!(
            "a symbol must describe 1 (disc) or 2 (annulus) boundaries, got {n}"
        ))),
    }
}

fn check_inner_radius(q: f64) -> Result<()> {
    if !(q.is_finite() && 0.0 < q && q < 1.0) {
        return Err(Error::Spec(format!(
            "inner radius q must lie strictly between 0 and 1, got {q}"
        )));
    }
    Ok(())
}

fn check_boundary_samples(grid: &UniformGrid, samples: &[f64]) -> Result<()> {
    if samples.len() != grid.len() {
        return Err(Error::LengthMismatch {
            expected: grid.len(),
            got: samples.len(),
        });
    }
    if let Some(bad) = samples.iter().find(|s| !s.is_finite()) {
        return Err(Error::Spec(format!(
            "boundary samples must be finite, found {bad}"
        )));
    }
    Ok(())
}

fn realize_arcs(arcs: &[Arc], grid: &UniformGrid) -> Result<Vec<f64>> {
    validate_arc_partition(arcs)?;
    let mut sorted: Vec<Arc> = arcs.to_vec();
    sorted.sort_by(|a, b| a.start.total_cmp(&b.start));
    let starts: Vec<f64> = sorted.iter().map(|a| a.start).collect();
    let samples = grid
        .angles()
        .iter()
        .map(|&t| {
            // Last arc whose start is ≤ t; the partition check guarantees the
            // arc then also covers t.
            let idx = starts.partition_point(|&s| s <= t).saturating_sub(1);
            sorted[idx].value
        })
        .collect();
    Ok(samples)
}

fn validate_arc_partition(arcs: &[Arc]) -> Result<()> {
    if arcs.is_empty() {
        return Err(Error::Spec("an arc description must contain arcs".into()));
    }
    for arc in arcs {
        if !(arc.start.is_finite() && arc.end.is_finite() && arc.value.is_finite()) {
            return Err(Error::Spec(
                "arc endpoints and values must be finite".into(),
            ));
        }
        if arc.end <= arc.start {
            return Err(Error::Spec(format!(
                "arc [{}, {}) is empty or reversed",
                arc.start, arc.end
            )));
        }
    }
    let mut sorted: Vec<Arc> = arcs.to_vec();
    sorted.sort_by(|a, b| a.start.total_cmp(&b.start));
    let tau = 2.0 * std::f64::consts::PI;
    if sorted[0].start.abs() > ARC_PARTITION_TOL {
        return Err(Error::Spec(format!(
            "arcs must start at 0, first start is {}",
            sorted[0].start
        )));
    }
    for pair in sorted.windows(2) {
        if (pair[1].start - pair[0].end).abs() > ARC_PARTITION_TOL {
            return Err(Error::Spec(format!(
                "arcs must tile [0, 2π) without gaps or overlap: arc ending at {} \
                 is followed by arc starting at {}",
                pair[0].end, pair[1].start
            )));
        }
    }
    let last_end = sorted.last().expect("non-empty").end;
    if (last_end - tau).abs() > ARC_PARTITION_TOL {
        return Err(Error::Spec(format!(
            "arcs must end at 2π, last end is {last_end}"
        )));
    }
    Ok(())
}

fn realize_trig(poly: &TrigPolynomial, grid: &UniformGrid) -> Result<Vec<f64>> {
    for c in poly.cos_coeffs.iter().chain(&poly.sin_coeffs) {
        if !c.is_finite() {
            return Err(Error::Spec("trig coefficients must be finite".into()));
        }
    }
    if !poly.a0.is_finite() {
        return Err(Error::Spec("trig constant term must be finite".into()));
    }
    if poly.degree() >= grid.len() / 2 {
        return Err(Error::Spec(format!(
            "trig degree {} is not resolved by a grid of {} points",
            poly.degree(),
            grid.len()
        )));
    }
    Ok(grid.angles().iter().map(|&t| poly.eval(t)).collect())
}

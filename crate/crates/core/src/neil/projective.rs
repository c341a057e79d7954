//! Points on the complex projective line and the one-dimensional subspaces
//! of `span{1, z}` they parameterize.
//!
//! Each eigenvector candidate on the disc is pinned down by the pair
//! `(f(0), f'(0))`, read as homogeneous coordinates of a point on ℙ¹(ℂ).
//! The point in turn selects the codimension-one subspace of the Hardy space
//! on which the compressed Toeplitz operator acts: the orthogonal complement,
//! inside `span{1, z}`, of the line the point spans.

use num_complex::Complex64;

use crate::errors::{Error, Result};

/// A point on the complex projective line in homogeneous coordinates.
///
/// The representative `(v0, v1)` is kept exactly as supplied; all comparisons
/// go through [`ProjectivePoint::chordal_distance`], which is scale-free.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    v0: Complex64,
    v1: Complex64,
}

/// Affine coordinate of a projective point in whichever of the two standard
/// charts keeps the coordinate inside the closed unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChartCoordinate {
    /// `v0 / v1`, used when `|v1| >= |v0|`.
    Zeta(Complex64),
    /// `v1 / v0`, used when `|v0| > |v1|`.
    Xi(Complex64),
}

impl ProjectivePoint {
    /// Builds a point from homogeneous coordinates.
    ///
    /// Rejects the pair `(0, 0)`, which names no point, and non-finite
    /// coordinates.
    pub fn new(v0: Complex64, v1: Complex64) -> Result<Self> {
        if !(v0.re.is_finite() && v0.im.is_finite() && v1.re.is_finite() && v1.im.is_finite()) {
            return Err(Error::Argument(
                "projective coordinates must be finite".into(),
            ));
        }
        if v0.norm() == 0.0 && v1.norm() == 0.0 {
            return Err(Error::Argument(
                "projective coordinates must not both vanish".into(),
            ));
        }
        Ok(Self { v0, v1 })
    }

    /// First homogeneous coordinate.
    pub fn v0(&self) -> Complex64 {
        self.v0
    }

    /// Second homogeneous coordinate.
    pub fn v1(&self) -> Complex64 {
        self.v1
    }

    /// Chordal distance `|v0·w1 − v1·w0| / (‖v‖₂ ‖w‖₂)`.
    ///
    /// Zero exactly when the two points are projectively equal, symmetric,
    /// and never larger than 1.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        let cross = self.v0 * other.v1 - self.v1 * other.v0;
        let n_self = self.v0.norm().hypot(self.v1.norm());
        let n_other = other.v0.norm().hypot(other.v1.norm());
        cross.norm() / (n_self * n_other)
    }

    /// Affine coordinate in the chart that keeps it bounded by 1.
    pub fn chart(&self) -> ChartCoordinate {
        if self.v1.norm() >= self.v0.norm() {
            ChartCoordinate::Zeta(self.v0 / self.v1)
        } else {
            ChartCoordinate::Xi(self.v1 / self.v0)
        }
    }
}

/// A one-dimensional subspace `span{a + b·z}` of the two lowest Taylor modes,
/// together with the unit vector spanning its orthogonal complement inside
/// `span{1, z}`.
#[derive(Debug, Clone, PartialEq)]
pub struct NeilSubspace {
    span: (Complex64, Complex64),
}

impl NeilSubspace {
    /// Builds the subspace spanned by `a + b·z`.
    ///
    /// Rejects the zero vector, which spans nothing.
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::Argument("span coefficients must be finite".into()));
        }
        if a.norm() == 0.0 && b.norm() == 0.0 {
            return Err(Error::Argument(
                "span vector of a subspace must not vanish".into(),
            ));
        }
        Ok(Self { span: (a, b) })
    }

    /// Coefficient pair `(a, b)` of the spanning vector `a + b·z`.
    pub fn span_vector(&self) -> (Complex64, Complex64) {
        self.span
    }

    /// Coefficients `(w0, w1)` of the unit vector `w0 + w1·z` orthogonal to
    /// the span: `w = (conj(b) − conj(a)·z) / √(|a|² + |b|²)`.
    ///
    /// `⟨w, a + b·z⟩` cancels to a final rounding of the shared
    /// normalization and `‖w‖ = 1` up to rounding.
    pub fn complement_unit(&self) -> (Complex64, Complex64) {
        let (a, b) = self.span;
        let norm = a.norm().hypot(b.norm());
        (b.conj() / norm, -a.conj() / norm)
    }

    /// Chordal distance between the spanning lines of two subspaces.
    ///
    /// Zero exactly when both describe the same subspace, regardless of the
    /// representatives chosen.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        let (a, b) = self.span;
        let (c, d) = other.span;
        let cross = a * d - b * c;
        (cross.norm()) / (a.norm().hypot(b.norm()) * c.norm().hypot(d.norm()))
    }
}

/// The subspace a projective point parameterizes: `span{conj(v1) − conj(v0)·z}`,
/// chosen so that `v0 + v1·z` is orthogonal to it.
pub fn subspace_from_point(point: &ProjectivePoint) -> NeilSubspace {
    NeilSubspace {
        span: (point.v1().conj(), -point.v0().conj()),
    }
}

//! Compressed Toeplitz truncations on the constrained Hardy subspace, the
//! eigenpair records they verify, the spectral-parameter-to-projective-line
//! curve probe, and the annihilating-measure defect.
//!
//! The constrained subalgebra fixes the two lowest Taylor modes up to a
//! one-dimensional subspace `𝒱 ⊂ span{1, z}`; the operator acts on the
//! orthogonal complement `H²_𝒱`, whose natural truncation basis is
//! `{w, z², …, z^K}` with `w` the unit vector of `span{1, z} ⊖ 𝒱`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::errors::{Error, Result};
use crate::numerics::{
    forward_transform, forward_transform_real, hermitian_eigensolve, UniformGrid,
};
use crate::symbols::CircleSymbol;

use super::outer::{f_lambda, DiscOuterBoundary};
use super::projective::{subspace_from_point, NeilSubspace, ProjectivePoint};

/// Chordal tolerance for the consistency preconditions of
/// [`verify_eigenpair_neil`]: the record's point must match its outer data
/// and its subspace must be the one the point selects.
const PRECONDITION_TOL: f64 = 1e-8;

/// Coefficient vectors with norm below this are rejected as degenerate.
const DEGENERATE_NORM_TOL: f64 = 1e-12;

/// An eigenvalue-candidate dossier for the compressed Toeplitz operator:
/// the spectral parameter, the weight coefficient, the outer eigenfunction
/// candidate, its origin data as a projective point, the subspace that point
/// selects, and — after verification — the residual and spectral gap at a
/// given truncation order.
#[derive(Debug, Clone)]
pub struct NeilEigenRecord {
    lambda: f64,
    c: Complex64,
    f: DiscOuterBoundary,
    point: ProjectivePoint,
    subspace: NeilSubspace,
    residual: Option<f64>,
    gap: Option<f64>,
    k: Option<usize>,
}

impl NeilEigenRecord {
    /// The spectral parameter the record certifies.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The annihilator weight coefficient.
    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// Boundary trace of the eigenfunction candidate.
    pub fn f(&self) -> &DiscOuterBoundary {
        &self.f
    }

    /// Origin data `(f(0), f'(0))` as a projective point.
    pub fn point(&self) -> &ProjectivePoint {
        &self.point
    }

    /// The subspace selected by the origin data.
    pub fn subspace(&self) -> &NeilSubspace {
        &self.subspace
    }

    /// Relative residual `‖T v − λ v‖ / ‖v‖` at the verified truncation.
    pub fn residual(&self) -> Option<f64> {
        self.residual
    }

    /// Distance from `λ` to the rest of the truncated spectrum.
    pub fn gap(&self) -> Option<f64> {
        self.gap
    }

    /// Truncation order of the last verification.
    pub fn k(&self) -> Option<usize> {
        self.k
    }

    /// Number of boundary samples whose squared modulus was clamped.
    pub fn clamped_samples(&self) -> usize {
        self.f.clamped_samples()
    }
}

/// Builds the eigenvector-candidate record for `λ`: the outer candidate, its
/// origin point, and the subspace that point selects.
pub fn eigenvector_for(
    symbol: &CircleSymbol,
    c: Complex64,
    lambda: f64,
) -> Result<NeilEigenRecord> {
    let f = f_lambda(symbol, c, lambda)?;
    let point = f.point();
    let subspace = subspace_from_point(&point);
    Ok(NeilEigenRecord {
        lambda,
        c,
        f,
        point,
        subspace,
        residual: None,
        gap: None,
        k: None,
    })
}

/// A Hermitian truncation of the compressed Toeplitz operator in the basis
/// `{w, z², …, z^K}`, where `w` spans `span{1, z} ⊖ 𝒱`.
#[derive(Debug, Clone)]
pub struct NeilToeplitz {
    matrix: DMatrix<Complex64>,
    subspace: NeilSubspace,
    k: usize,
}

impl NeilToeplitz {
    /// The `K × K` matrix (basis index 0 is `w`; index `i ≥ 1` is `z^{i+1}`).
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// The subspace the operator was compressed against.
    pub fn subspace(&self) -> &NeilSubspace {
        &self.subspace
    }

    /// Truncation order `K` (also the matrix dimension).
    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest deviation from Hermitian symmetry, `max |T − T†|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.k {
            for j in 0..self.k {
                worst = worst.max((self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm());
            }
        }
        worst
    }
}

/// Compresses multiplication by `φ` to the truncation basis `{w, z², …, z^K}`
/// of the subspace orthogonal to `𝒱`.
///
/// Entry `(m, n)` of the monomial block is `φ̂(m − n)`; the `w` row and
/// column expand `w = w0 + w1·z` and pair each term against the monomials.
pub fn neil_toeplitz(
    symbol: &CircleSymbol,
    subspace: &NeilSubspace,
    k: usize,
) -> Result<NeilToeplitz> {
    if k < 2 {
        return Err(Error::Argument(format!(
            "truncation order must be at least 2, got {k}"
        )));
    }
    let n_points = symbol.grid().len();
    if k >= n_points / 2 {
        return Err(Error::Truncation(format!(
            "truncation order {k} needs symbol frequencies beyond the grid of {n_points} \
             samples; keep it below {}",
            n_points / 2
        )));
    }
    let hat = forward_transform_real(symbol.grid(), symbol.f())?;
    let (w0, w1) = subspace.complement_unit();

    let mut matrix = DMatrix::<Complex64>::zeros(k, k);
    // ⟨φ w, w⟩ couples the two components of w through φ̂(±1).
    matrix[(0, 0)] = (w0.norm_sqr() + w1.norm_sqr()) * hat.coeff(0)
        + w0.conj() * w1 * hat.coeff(-1)
        + w1.conj() * w0 * hat.coeff(1);
    for i in 1..k {
        let m = (i + 1) as i64;
        // ⟨φ w, z^m⟩ and ⟨φ z^m, w⟩.
        matrix[(i, 0)] = w0 * hat.coeff(m) + w1 * hat.coeff(m - 1);
        matrix[(0, i)] = w0.conj() * hat.coeff(-m) + w1.conj() * hat.coeff(1 - m);
        for j in 1..k {
            let n = (j + 1) as i64;
            matrix[(i, j)] = hat.coeff(m - n);
        }
    }

    Ok(NeilToeplitz {
        matrix,
        subspace: subspace.clone(),
        k,
    })
}

/// Verifies an eigenpair record against the order-`K` truncation: computes
/// the relative residual of the candidate's coefficient vector and the
/// distance from `λ` to the rest of the truncated spectrum.
///
/// The record must be internally consistent — its point must match the outer
/// data's origin values and its subspace must be the one the point selects —
/// otherwise the candidate would be expanded against the wrong basis.
pub fn verify_eigenpair_neil(
    symbol: &CircleSymbol,
    record: &NeilEigenRecord,
    k: usize,
) -> Result<NeilEigenRecord> {
    if symbol.grid() != record.f().grid() {
        return Err(Error::Argument(
            "symbol and record live on different grids".into(),
        ));
    }
    if record.point.chordal_distance(&record.f.point()) > PRECONDITION_TOL {
        return Err(Error::Domain(
            "record point does not match the origin data of its outer candidate".into(),
        ));
    }
    if record
        .subspace
        .chordal_distance(&subspace_from_point(&record.point))
        > PRECONDITION_TOL
    {
        return Err(Error::Domain(
            "record subspace is not the one its origin point selects".into(),
        ));
    }

    let truncation = neil_toeplitz(symbol, &record.subspace, k)?;
    let (w0, w1) = record.subspace.complement_unit();
    let hat = forward_transform(symbol.grid(), record.f.samples())?;

    let mut v = DVector::<Complex64>::zeros(k);
    v[0] = hat.coeff(0) * w0.conj() + hat.coeff(1) * w1.conj();
    for i in 1..k {
        v[i] = hat.coeff((i + 1) as i64);
    }
    let norm = v.norm();
    if norm < DEGENERATE_NORM_TOL {
        return Err(Error::Domain(format!(
            "coefficient vector is degenerate: norm {norm:.3e} is below {DEGENERATE_NORM_TOL:.0e}"
        )));
    }

    let lambda = Complex64::new(record.lambda, 0.0);
    let residual = (truncation.matrix() * &v - &v * lambda).norm() / norm;

    let (eigenvalues, _) = hermitian_eigensolve(truncation.matrix())?;
    let mut distances: Vec<f64> = eigenvalues
        .iter()
        .map(|e| (e - record.lambda).abs())
        .collect();
    distances.sort_by(f64::total_cmp);
    let gap = distances[1];

    let mut updated = record.clone();
    updated.residual = Some(residual);
    updated.gap = Some(gap);
    updated.k = Some(k);
    Ok(updated)
}

/// Largest chordal difference quotient of the projective curve `λ ↦ Λ(λ)`
/// over consecutive pairs of the supplied spectral parameters.
///
/// A list with fewer than two entries has no consecutive pairs and probes
/// to zero.
pub fn lipschitz_probe(symbol: &CircleSymbol, c: Complex64, lambdas: &[f64]) -> Result<f64> {
    for pair in lambdas.windows(2) {
        // Negated so NaN entries fail the monotonicity requirement.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(pair[0] < pair[1]) {
            return Err(Error::Argument(
                "spectral parameters must be strictly increasing".into(),
            ));
        }
    }
    let mut points = Vec::with_capacity(lambdas.len());
    for &lambda in lambdas {
        points.push(super::outer::lambda_map(symbol, c, lambda)?);
    }
    let mut quotient = 0.0_f64;
    for (pair, ps) in lambdas.windows(2).zip(points.windows(2)) {
        quotient = quotient.max(ps[0].chordal_distance(&ps[1]) / (pair[1] - pair[0]));
    }
    Ok(quotient)
}

/// Largest boundary moment `|(1/2π)∫ e^{int} · 2Re(c·e^{it}) dt|` over
/// `|n| ≤ n_max` with `n ∉ {1, −1}`, by grid quadrature on `n_points`
/// samples.
///
/// The weight measure annihilates the constrained subalgebra and its
/// conjugates exactly when every such moment vanishes; the two excluded
/// moments carry the weight itself (`n = 1` integrates to `conj(c)`).
pub fn annihilator_defect_neil(n_points: usize, n_max: usize, c: Complex64) -> Result<f64> {
    let grid = UniformGrid::new(n_points)?;
    if n_max >= n_points / 2 {
        return Err(Error::Argument(format!(
            "moment range {n_max} must stay below half the grid of {n_points} samples"
        )));
    }
    let weights = grid.sample(|t| 2.0 * (c * Complex64::from_polar(1.0, t)).re);
    let hat = forward_transform_real(&grid, &weights)?;
    let mut defect = 0.0_f64;
    for n in -(n_max as i64)..=(n_max as i64) {
        if n == 1 || n == -1 {
            continue;
        }
        defect = defect.max(hat.coeff(-n).norm());
    }
    Ok(defect)
}

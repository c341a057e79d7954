//! Hardy spaces of index `α` on the annulus: orthonormal bases, truncated
//! Toeplitz matrices, outer functions recovered from boundary moduli, and the
//! winding index of boundary data.
//!
//! Functions on the annulus `q < |z| < 1` are represented by their samples on
//! the two boundary circles `B₁ = {|z| = 1}` and `B_q = {|z| = q}`, both
//! parametrized by angle `t ∈ [0, 2π)` on a shared midpoint grid.  The inner
//! product is taken in `L²(B, μ)` with both boundary circles carrying total
//! mass `2π`, so `⟨f, g⟩ = 2π·(mean on B₁ + mean on B_q)` of `f·conj(g)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::errors::{Error, Result};
use crate::numerics::{self, forward_transform, forward_transform_real, UniformGrid};

/// Coefficient magnitudes below this are zeroed before the per-frequency
/// boundary-matching solve; the solve amplifies noise by `q^{-n}`.
pub const DIRICHLET_COEFF_FLOOR: f64 = 1e-13;

/// Largest admissible amplification `q^{-K}` in the boundary-matching solve.
pub const DIRICHLET_AMPLIFICATION_CAP: f64 = 1e12;

/// Fractional-part index of a function with automorphic modulus: the power
/// `α ∈ [0, 1)` of the branch `z^α` it carries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyIndex {
    alpha: f64,
}

impl HardyIndex {
    /// Wrap a value already in `[0, 1)`.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && (0.0..1.0).contains(&alpha)) {
            return Err(Error::Argument(format!(
                "a Hardy index must lie in [0, 1), got {alpha}"
            )));
        }
        Ok(Self { alpha })
    }

    /// Reduce an arbitrary real exponent modulo one into `[0, 1)`.
    pub fn from_unrestricted(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Argument(format!(
                "a Hardy index must come from a finite exponent, got {x}"
            )));
        }
        let mut alpha = x.rem_euclid(1.0);
        // rem_euclid can round up to exactly 1.0 for tiny negative inputs.
        if alpha >= 1.0 {
            alpha = 0.0;
        }
        Ok(Self { alpha })
    }

    /// The index value in `[0, 1)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Distance on the circle `ℝ/ℤ`, in `[0, 1/2]`.
    pub fn circular_distance(&self, other: HardyIndex) -> f64 {
        let d = (self.alpha - other.alpha).abs();
        d.min(1.0 - d)
    }
}

/// Orthonormal basis `e_n = z^{n+α} / √(2π(1+q^{2(n+α)}))`, `n = -K..K`, of
/// the index-`α` Hardy space on the annulus, truncated at half-width `K`.
#[derive(Debug, Clone)]
pub struct AnnulusHardyBasis {
    q: f64,
    alpha: HardyIndex,
    k: usize,
}

impl AnnulusHardyBasis {
    /// Build a basis description; requires `q ∈ (0, 1)` and `K ≥ 1`.
    pub fn new(q: f64, alpha: HardyIndex, k: usize) -> Result<Self> {
        if !(q.is_finite() && 0.0 < q && q < 1.0) {
            return Err(Error::Argument(format!(
                "inner radius q must lie strictly between 0 and 1, got {q}"
            )));
        }
        if k == 0 {
            return Err(Error::Argument(
                "basis truncation half-width K must be at least 1".into(),
            ));
        }
        Ok(Self { q, alpha, k })
    }

    /// Inner radius of the annulus.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// Index of the Hardy space.
    pub fn alpha(&self) -> HardyIndex {
        self.alpha
    }

    /// Truncation half-width: basis indices run over `-K..=K`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of basis functions, `2K+1`.
    pub fn dim(&self) -> usize {
        2 * self.k + 1
    }

    /// Basis indices `-K..=K` in matrix order.
    pub fn indices(&self) -> impl Iterator<Item = i64> {
        let k = self.k as i64;
        -k..=k
    }

    /// `1/√(1+q^{2(n+α)})`: modulus of `e_n` on the outer circle, times `√2π`.
    fn outer_weight(&self, n: i64) -> f64 {
        1.0 / (1.0 + self.q.powf(2.0 * (n as f64 + self.alpha.alpha()))).sqrt()
    }

    /// `q^{n+α}/√(1+q^{2(n+α)})`, evaluated in the overflow-free form
    /// `1/√(1+q^{-2(n+α)})`: modulus of `e_n` on the inner circle, times `√2π`.
    fn inner_weight(&self, n: i64) -> f64 {
        1.0 / (1.0 + self.q.powf(-2.0 * (n as f64 + self.alpha.alpha()))).sqrt()
    }

    /// Samples of `e_n` on the outer boundary circle.
    pub fn outer_boundary_samples(&self, n: i64, grid: &UniformGrid) -> Vec<Complex64> {
        let scale = self.outer_weight(n) / (2.0 * std::f64::consts::PI).sqrt();
        let nu = n as f64 + self.alpha.alpha();
        grid.angles()
            .iter()
            .map(|&t| Complex64::new(0.0, nu * t).exp() * scale)
            .collect()
    }

    /// Samples of `e_n` on the inner boundary circle.
    pub fn inner_boundary_samples(&self, n: i64, grid: &UniformGrid) -> Vec<Complex64> {
        let scale = self.inner_weight(n) / (2.0 * std::f64::consts::PI).sqrt();
        let nu = n as f64 + self.alpha.alpha();
        grid.angles()
            .iter()
            .map(|&t| Complex64::new(0.0, nu * t).exp() * scale)
            .collect()
    }

    /// Largest absolute deviation of the numerically integrated Gram matrix
    /// of `{e_n}` from the identity.
    pub fn gram_defect(&self, grid: &UniformGrid) -> Result<f64> {
        check_truncation_fits(self.k, grid)?;
        let n = grid.len() as f64;
        let outer: Vec<Vec<Complex64>> = self
            .indices()
            .map(|i| self.outer_boundary_samples(i, grid))
            .collect();
        let inner: Vec<Vec<Complex64>> = self
            .indices()
            .map(|i| self.inner_boundary_samples(i, grid))
            .collect();
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut defect: f64 = 0.0;
        for (row, (em1, emq)) in outer.iter().zip(&inner).enumerate() {
            for (col, (en1, enq)) in outer.iter().zip(&inner).enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..grid.len() {
                    acc += en1[j] * em1[j].conj() + enq[j] * emq[j].conj();
                }
                let entry = acc * two_pi / n;
                let target = if row == col { 1.0 } else { 0.0 };
                defect = defect.max((entry - target).norm());
            }
        }
        Ok(defect)
    }
}

/// A truncated Toeplitz matrix over an [`AnnulusHardyBasis`].
#[derive(Debug, Clone)]
pub struct ToeplitzTruncation {
    matrix: DMatrix<Complex64>,
    basis: AnnulusHardyBasis,
}

impl ToeplitzTruncation {
    /// The `(2K+1)×(2K+1)` matrix, rows and columns ordered by `n = -K..=K`.
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// The basis the truncation is expressed in.
    pub fn basis(&self) -> &AnnulusHardyBasis {
        &self.basis
    }

    /// Entry at basis indices `(m, n)`, each in `-K..=K`.
    pub fn entry(&self, m: i64, n: i64) -> Complex64 {
        let k = self.basis.k as i64;
        self.matrix[((m + k) as usize, (n + k) as usize)]
    }

    /// Largest absolute deviation from Hermitian symmetry.
    pub fn hermitian_defect(&self) -> f64 {
        let mut defect: f64 = 0.0;
        for i in 0..self.matrix.nrows() {
            for j in 0..self.matrix.ncols() {
                defect = defect.max((self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm());
            }
        }
        defect
    }
}

fn check_truncation_fits(k: usize, grid: &UniformGrid) -> Result<()> {
    if 2 * k + 1 > grid.len() / 2 {
        return Err(Error::Truncation(format!(
            "truncation half-width {k} needs 2K+1 ≤ N/2, but the grid has only {} points; \
             use a finer grid or a smaller K",
            grid.len()
        )));
    }
    Ok(())
}

/// Compress a symbol to the truncated Toeplitz matrix on the index-`alpha`
/// Hardy space with basis indices `-K..=K`.
///
/// The entry at `(m, n)` is
/// `[φ̂₁(m−n) + q^{m+n+2α}·φ̂_q(m−n)] / √((1+q^{2(m+α)})(1+q^{2(n+α)}))`
/// with `φ̂_j` the Fourier coefficients of the boundary samples; it is
/// evaluated in a rescaled form that stays finite for large `K`.  Requires
/// `K ≥ 1` and `2K+1 ≤ N/2` so the grid resolves every coefficient.
pub fn toeplitz_matrix(
    symbol: &crate::symbols::AnnulusSymbol,
    alpha: HardyIndex,
    k: usize,
) -> Result<ToeplitzTruncation> {
    let basis = AnnulusHardyBasis::new(symbol.q(), alpha, k)?;
    let grid = symbol.grid();
    check_truncation_fits(k, grid)?;
    let hat1 = forward_transform_real(grid, symbol.f1())?;
    let hatq = forward_transform_real(grid, symbol.fq())?;

    let dim = basis.dim();
    let outer: Vec<f64> = basis.indices().map(|n| basis.outer_weight(n)).collect();
    let inner: Vec<f64> = basis.indices().map(|n| basis.inner_weight(n)).collect();
    let mut matrix = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let ik = k as i64;
    for (row, m) in (-ik..=ik).enumerate() {
        for (col, n) in (-ik..=ik).enumerate() {
            let diff = m - n;
            matrix[(row, col)] = hat1.coeff(diff) * (outer[row] * outer[col])
                + hatq.coeff(diff) * (inner[row] * inner[col]);
        }
    }
    Ok(ToeplitzTruncation { matrix, basis })
}

/// Boundary data of an outer function on the annulus recovered from its
/// moduli: `g = exp(iβt + c₀ + Σ_{0<|n|≤K_h} h_n z^n)` with the branch
/// `z^β = e^{β(log r + it)}`, `t ∈ [0, 2π)`.
#[derive(Debug, Clone)]
pub struct AnnulusOuterBoundary {
    q: f64,
    grid: UniformGrid,
    beta: f64,
    c0: Complex64,
    /// `h[n-1]` is the coefficient of `z^n`, `n = 1..=K_h`.
    h_pos: Vec<Complex64>,
    /// `h_neg[n-1]` is the coefficient of `z^{-n}`, `n = 1..=K_h`.
    h_neg: Vec<Complex64>,
    g1: Vec<Complex64>,
    gq: Vec<Complex64>,
}

impl AnnulusOuterBoundary {
    /// Inner radius of the annulus.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// The sample grid shared by both boundary circles.
    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    /// Branch exponent: `g` carries the multivalued factor `z^β`.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Constant term of the exponent; imaginary part fixed to zero.
    pub fn c0(&self) -> Complex64 {
        self.c0
    }

    /// Half-width of the stored exponent coefficients.
    pub fn k_h(&self) -> usize {
        self.h_pos.len()
    }

    /// Exponent coefficient `h_n` for `0 < |n| ≤ K_h`; zero outside.
    pub fn h(&self, n: i64) -> Complex64 {
        let idx = n.unsigned_abs() as usize;
        if n == 0 || idx > self.h_pos.len() {
            return Complex64::new(0.0, 0.0);
        }
        if n > 0 {
            self.h_pos[idx - 1]
        } else {
            self.h_neg[idx - 1]
        }
    }

    /// Samples of `g` on the outer boundary circle.
    pub fn g1(&self) -> &[Complex64] {
        &self.g1
    }

    /// Samples of `g` on the inner boundary circle.
    pub fn gq(&self) -> &[Complex64] {
        &self.gq
    }

    /// The index `β mod 1` carried by the branch.
    pub fn index(&self) -> HardyIndex {
        HardyIndex::from_unrestricted(self.beta).expect("beta is finite")
    }

    /// Largest relative error of `|g|` against target moduli, over samples
    /// where the target exceeds `1e-10`.
    pub fn max_relative_modulus_error(&self, w1: &[f64], wq: &[f64]) -> Result<f64> {
        if w1.len() != self.g1.len() || wq.len() != self.gq.len() {
            return Err(Error::LengthMismatch {
                expected: self.g1.len(),
                got: if w1.len() != self.g1.len() {
                    w1.len()
                } else {
                    wq.len()
                },
            });
        }
        let mut worst: f64 = 0.0;
        for (g, &w) in self.g1.iter().zip(w1).chain(self.gq.iter().zip(wq)) {
            if w > 1e-10 {
                worst = worst.max((g.norm() - w).abs() / w);
            }
        }
        Ok(worst)
    }
}

/// Largest `K ≥ 0` whose amplification `q^{-K}` stays below
/// [`DIRICHLET_AMPLIFICATION_CAP`].
pub fn default_h_truncation(q: f64) -> usize {
    let cap = DIRICHLET_AMPLIFICATION_CAP.ln() / -q.ln();
    let mut k = cap.floor() as usize;
    // Guard the floating-point boundary: enforce q^{-K} < cap strictly.
    while k > 0 && q.powi(-(k as i32)) >= DIRICHLET_AMPLIFICATION_CAP {
        k -= 1;
    }
    k
}

/// Recover the boundary values of the outer function with prescribed moduli
/// `|g| = w1` on the outer circle and `|g| = wq` on the inner circle.
///
/// Writing `u = log w`, the exponent of `g` is matched frequency by
/// frequency: `β = (ûq(0) − û1(0))/log q`, `c₀ = û1(0)` (imaginary part fixed
/// to zero), and for each `n ≥ 1` the pair `(h_n, conj(h_{-n}))` solves
/// `h_n + conj(h_{-n}) = 2û1(n)`, `qⁿh_n + q^{-n}conj(h_{-n}) = 2ûq(n)`.
/// Frequencies where both boundary coefficients fall below
/// [`DIRICHLET_COEFF_FLOOR`] are zeroed rather than amplified by `q^{-n}`.
///
/// `k_h` truncates the exponent series; `None` selects
/// [`default_h_truncation`], and explicit values whose amplification
/// `q^{-K}` reaches [`DIRICHLET_AMPLIFICATION_CAP`] are rejected.
pub fn solve_dirichlet_outer(
    grid: &UniformGrid,
    w1: &[f64],
    wq: &[f64],
    q: f64,
    k_h: Option<usize>,
) -> Result<AnnulusOuterBoundary> {
    if !(q.is_finite() && 0.0 < q && q < 1.0) {
        return Err(Error::Argument(format!(
            "inner radius q must lie strictly between 0 and 1, got {q}"
        )));
    }
    let k_h = match k_h {
        None => default_h_truncation(q),
        Some(k) => {
            if q.powi(-(k as i32)) >= DIRICHLET_AMPLIFICATION_CAP {
                return Err(Error::Truncation(format!(
                    "exponent truncation K_h = {k} amplifies boundary noise by q^{{-K}} ≥ {:.1e}; \
                     use K_h ≤ {} for q = {q}",
                    DIRICHLET_AMPLIFICATION_CAP,
                    default_h_truncation(q)
                )));
            }
            k
        }
    };

    let u1 = log_samples(grid, w1, "outer")?;
    let uq = log_samples(grid, wq, "inner")?;
    let hat1 = forward_transform_real(grid, &u1)?;
    let hatq = forward_transform_real(grid, &uq)?;

    let mean1 = hat1.coeff(0).re;
    let meanq = hatq.coeff(0).re;
    let beta = (meanq - mean1) / q.ln();
    let c0 = Complex64::new(mean1, 0.0);

    let mut h_pos = vec![Complex64::new(0.0, 0.0); k_h];
    let mut h_neg = vec![Complex64::new(0.0, 0.0); k_h];
    for n in 1..=k_h {
        let a1 = hat1.coeff(n as i64);
        let aq = hatq.coeff(n as i64);
        if a1.norm() < DIRICHLET_COEFF_FLOOR && aq.norm() < DIRICHLET_COEFF_FLOOR {
            continue;
        }
        let qn = q.powi(n as i32);
        let qmn = q.powi(-(n as i32));
        // Solve h_n + b = 2·û1(n), qⁿ·h_n + q⁻ⁿ·b = 2·ûq(n) for b = conj(h_{-n}).
        let b = (2.0 * aq - 2.0 * qn * a1) / (qmn - qn);
        let a = 2.0 * a1 - b;
        h_pos[n - 1] = a;
        h_neg[n - 1] = b.conj();
    }

    let log_q = q.ln();
    let mut g1 = Vec::with_capacity(grid.len());
    let mut gq = Vec::with_capacity(grid.len());
    for &t in grid.angles() {
        let mut exp1 = Complex64::new(0.0, beta * t) + c0;
        let mut expq = Complex64::new(beta * log_q, beta * t) + c0;
        for n in 1..=k_h {
            let phase = Complex64::new(0.0, n as f64 * t).exp();
            let qn = q.powi(n as i32);
            let qmn = q.powi(-(n as i32));
            exp1 += h_pos[n - 1] * phase + h_neg[n - 1] * phase.conj();
            expq += h_pos[n - 1] * qn * phase + h_neg[n - 1] * qmn * phase.conj();
        }
        g1.push(exp1.exp());
        gq.push(expq.exp());
    }

    Ok(AnnulusOuterBoundary {
        q,
        grid: grid.clone(),
        beta,
        c0,
        h_pos,
        h_neg,
        g1,
        gq,
    })
}

fn log_samples(grid: &UniformGrid, w: &[f64], which: &str) -> Result<Vec<f64>> {
    if w.len() != grid.len() {
        return Err(Error::LengthMismatch {
            expected: grid.len(),
            got: w.len(),
        });
    }
    w.iter()
        .map(|&x| {
            if x.is_finite() && x > 0.0 {
                Ok(x.ln())
            } else {
                Err(Error::Domain(format!(
                    "modulus samples on the {which} boundary must be strictly positive, got {x}"
                )))
            }
        })
        .collect()
}

/// Largest relative defect of the coefficient relation
/// `Ĝ₁(n) = q^{-n}·Ĝ_q(n)` for the single-valued part `G = g·z^{-β}`,
/// checked over `|n| ≤ n_max` at frequencies where both raw coefficients
/// exceed `1e-12`.
pub fn sarason_relation_defect(outer: &AnnulusOuterBoundary, n_max: i64) -> Result<f64> {
    let grid = outer.grid();
    if n_max < 0 || n_max > grid.len() as i64 / 2 - 1 {
        return Err(Error::Argument(format!(
            "coefficient range |n| ≤ {n_max} is not resolved by a grid of {} points",
            grid.len()
        )));
    }
    let beta = outer.beta();
    let q = outer.q();
    // G on B₁: g1(t)·e^{-iβt}; on B_q: gq(t)·q^{-β}e^{-iβt}.
    let strip = |samples: &[Complex64], radial: f64| -> Vec<Complex64> {
        grid.angles()
            .iter()
            .zip(samples)
            .map(|(&t, &g)| g * radial * Complex64::new(0.0, -beta * t).exp())
            .collect()
    };
    let big_g1 = forward_transform(grid, &strip(outer.g1(), 1.0))?;
    let big_gq = forward_transform(grid, &strip(outer.gq(), q.powf(-beta)))?;

    let mut worst: f64 = 0.0;
    for n in -n_max..=n_max {
        let lhs = big_g1.coeff(n);
        let rhs_raw = big_gq.coeff(n);
        if lhs.norm() > 1e-12 && rhs_raw.norm() > 1e-12 {
            let rhs = rhs_raw * q.powi(-n as i32);
            worst = worst.max((lhs - rhs).norm() / lhs.norm());
        }
    }
    Ok(worst)
}

/// Index (mod 1) of the outer function with boundary moduli `w1`, `wq`:
/// `α = frac((ûq(0) − û1(0)) / log q)`.
pub fn index_from_modulus(
    grid: &UniformGrid,
    w1: &[f64],
    wq: &[f64],
    q: f64,
) -> Result<HardyIndex> {
    if !(q.is_finite() && 0.0 < q && q < 1.0) {
        return Err(Error::Argument(format!(
            "inner radius q must lie strictly between 0 and 1, got {q}"
        )));
    }
    let u1 = log_samples(grid, w1, "outer")?;
    let uq = log_samples(grid, wq, "inner")?;
    let mean1 = u1.iter().sum::<f64>() / u1.len() as f64;
    let meanq = uq.iter().sum::<f64>() / uq.len() as f64;
    HardyIndex::from_unrestricted((meanq - mean1) / q.ln())
}

/// Index of a shifted symbol together with clamping diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct SymbolIndex {
    /// The index `α ∈ [0, 1)` of `φ - λ`.
    pub index: HardyIndex,
    /// Samples of `|φ - λ|` that were clamped up to the log floor.
    pub clamped_samples: usize,
    /// Set when more than 1% of all boundary samples were clamped; the index
    /// is then dominated by the clamp floor rather than the data.
    pub excessive_clamping: bool,
}

/// Index of the Hardy space attached to the shifted symbol `φ - λ`:
/// `α = frac((mean log|f1-λ| − mean log|fq-λ|) / (2 log q))`.
///
/// Vanishing samples of `|φ - λ|` are clamped up to the default log floor;
/// when more than 1% of samples clamp, the result carries a warning flag.
pub fn index_from_symbol(
    symbol: &crate::symbols::AnnulusSymbol,
    lambda: f64,
) -> Result<SymbolIndex> {
    let shifted = |samples: &[f64]| -> Vec<f64> { samples.iter().map(|&x| x - lambda).collect() };
    let (mean1, clamped1) = numerics::log_mean(&shifted(symbol.f1()), numerics::LOG_FLOOR_DEFAULT)?;
    let (meanq, clampedq) = numerics::log_mean(&shifted(symbol.fq()), numerics::LOG_FLOOR_DEFAULT)?;
    let clamped_samples = clamped1 + clampedq;
    let total = symbol.f1().len() + symbol.fq().len();
    let index = HardyIndex::from_unrestricted((mean1 - meanq) / (2.0 * symbol.q().ln()))?;
    Ok(SymbolIndex {
        index,
        clamped_samples,
        excessive_clamping: clamped_samples * 100 > total,
    })
}

/// Coefficients of boundary data expanded in an [`AnnulusHardyBasis`].
#[derive(Debug, Clone)]
pub struct BasisProjection {
    k: usize,
    coeffs: Vec<Complex64>,
    parseval_defect: f64,
}

impl BasisProjection {
    /// Coefficients in basis order `n = -K..=K`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `e_n`.
    pub fn coeff(&self, n: i64) -> Complex64 {
        self.coeffs[(n + self.k as i64) as usize]
    }

    /// Relative gap `|‖c‖² − ‖g‖²| / ‖g‖²` between the coefficient energy and
    /// the boundary energy; small exactly when the basis captures `g`.
    pub fn parseval_defect(&self) -> f64 {
        self.parseval_defect
    }
}

/// Expand outer-function boundary data in the Hardy basis:
/// `c_n = ⟨g, e_n⟩` computed by demodulated Fourier coefficients on both
/// boundary circles.
///
/// Requires the branch index of `g` (its `β` mod 1) to match the basis index
/// within `1e-6`, and the basis half-width to fit the grid band.
pub fn project_to_basis(
    outer: &AnnulusOuterBoundary,
    basis: &AnnulusHardyBasis,
) -> Result<BasisProjection> {
    let alpha = basis.alpha();
    if outer.index().circular_distance(alpha) > 1e-6 {
        return Err(Error::Domain(format!(
            "branch index {} of the boundary data does not match the basis index {}",
            outer.index().alpha(),
            alpha.alpha()
        )));
    }
    let grid = outer.grid();
    check_truncation_fits(basis.k(), grid)?;

    // ĉ_j(n) = (1/2π)∫ g_j(t)·e^{-i(n+α)t} dt: demodulate by e^{-iαt}, then
    // read plain Fourier coefficients.
    let demodulate = |samples: &[Complex64]| -> Vec<Complex64> {
        grid.angles()
            .iter()
            .zip(samples)
            .map(|(&t, &g)| g * Complex64::new(0.0, -alpha.alpha() * t).exp())
            .collect()
    };
    let hat1 = forward_transform(grid, &demodulate(outer.g1()))?;
    let hatq = forward_transform(grid, &demodulate(outer.gq()))?;

    let two_pi = 2.0 * std::f64::consts::PI;
    let scale = two_pi / two_pi.sqrt();
    let coeffs: Vec<Complex64> = basis
        .indices()
        .map(|n| {
            (hat1.coeff(n) * basis.outer_weight(n) + hatq.coeff(n) * basis.inner_weight(n)) * scale
        })
        .collect();

    let boundary_energy = two_pi
        * (outer.g1().iter().map(|g| g.norm_sqr()).sum::<f64>()
            + outer.gq().iter().map(|g| g.norm_sqr()).sum::<f64>())
        / grid.len() as f64;
    let coeff_energy: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
    let parseval_defect = (coeff_energy - boundary_energy).abs() / boundary_energy;

    Ok(BasisProjection {
        k: basis.k(),
        coeffs,
        parseval_defect,
    })
}

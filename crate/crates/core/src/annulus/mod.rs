//! Hardy-space machinery and spectral probes on the annulus
//! `q < |z| < 1`.
//!
//! [`hardy`] builds the index-`α` Hardy spaces (orthonormal bases, truncated
//! Toeplitz matrices, outer functions from boundary moduli, index formulas);
//! [`spectra`] turns them into eigenvalue evidence: candidate eigenvectors,
//! residual certificates, and index curves.

pub mod hardy;
pub mod spectra;

pub use hardy::{
    index_from_modulus, index_from_symbol, project_to_basis, sarason_relation_defect,
    solve_dirichlet_outer, toeplitz_matrix, AnnulusHardyBasis, AnnulusOuterBoundary,
    BasisProjection, HardyIndex, SymbolIndex, ToeplitzTruncation,
};
pub use spectra::{
    alpha_curve, annihilator_defect_annulus, eigenvector_for, spectral_gap, uniqueness_gap,
    verify_eigenpair, AlphaCurve, AlphaCurvePoint, AnnulusEigenRecord,
};

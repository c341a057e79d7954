//! Spectral analysis of Toeplitz operators compressed to the constrained
//! Hardy subspaces of the unit disc.
//!
//! The constraint couples the two lowest Taylor modes: admissible subspaces
//! are `H²_𝒱 = H² ⊖ 𝒱` for a line `𝒱 ⊂ span{1, z}`. Candidate eigenvectors
//! are outer functions whose squared boundary modulus is an explicit ratio
//! of the annihilator weight `2Re(c·e^{it})` by `φ − λ`; their origin data
//! `(f(0), f'(0))` traces a curve on the projective line that both selects
//! the subspace and certifies uniqueness.

pub mod outer;
pub mod projective;
pub mod spectra;

pub use outer::{disc_outer, f_lambda, lambda_map, DiscOuterBoundary};
pub use projective::{subspace_from_point, ChartCoordinate, NeilSubspace, ProjectivePoint};
pub use spectra::{
    annihilator_defect_neil, eigenvector_for, lipschitz_probe, neil_toeplitz,
    verify_eigenpair_neil, NeilEigenRecord, NeilToeplitz,
};

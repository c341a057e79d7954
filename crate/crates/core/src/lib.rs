//! Numerical eigenvalue structure of truncated Toeplitz operators on two
//! multiply-constrained Hardy spaces: the family `H²_α` on an annulus
//! `q < |z| < 1`, and the subspaces `H² ⊖ 𝒱` of the disc Hardy space cut out
//! by a one-dimensional slice `𝒱 ⊂ ℂ ⊕ ℂz`.
//!
//! The crate builds candidate eigenvectors in closed form from boundary data
//! (outer functions with prescribed modulus), classifies the admissible
//! eigenvalue interval of a real symbol, and verifies everything against
//! dense Hermitian truncations.

pub mod annulus;
pub mod errors;
pub mod neil;
pub mod numerics;
pub mod symbols;

pub use errors::{Error, Result};

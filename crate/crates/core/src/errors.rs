//! Error type shared by every module in the crate.

/// Crate-wide error enumeration.
///
/// Variants are grouped by the kind of contract they report on: input shape
/// (`LengthMismatch`, `Argument`, `Spec`), numerical-domain violations
/// (`Domain`, `NotHermitian`, `Truncation`), and honest negative answers from
/// the eigenvector constructors (`NotEigenvalue`), which callers are expected
/// to treat as data rather than as failures.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A sample vector does not match the grid it claims to live on.
    #[error("sample vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    /// A scalar or structural argument is outside its documented range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A symbol description failed validation (arc coverage, overlap, ...).
    #[error("invalid symbol description: {0}")]
    Spec(String),

    /// Input matrix is not Hermitian to the tolerance the solver demands.
    #[error("matrix is not Hermitian: asymmetry {defect:.3e} exceeds {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },

    /// A boundary-value problem received data outside its domain
    /// (nonpositive target modulus, vanishing denominator, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncation order is too aggressive for the requested geometry.
    #[error("truncation error: {0}")]
    Truncation(String),

    /// The requested λ is provably not an eigenvalue for the given symbol;
    /// `reason` names the check that rejected it.
    #[error("λ = {lambda} is not an eigenvalue: {reason}")]
    NotEigenvalue { lambda: f64, reason: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

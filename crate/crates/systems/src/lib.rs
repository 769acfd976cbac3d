//! Construction of the polynomial systems whose solutions locate critical
//! points of the singular variety of a rational function.
//!
//! Four families are built here, all exact over the rationals:
//!
//! * [`smooth_system`] — the λ-system `{H, z_j ∂H/∂z_j − λ}` cutting out
//!   critical points of a smooth hypersurface;
//! * [`extended_system`] — the smooth system plus `H(t·z)`, whose `t`-values
//!   on the critical fiber decide minimality along the diagonal ray;
//! * [`stratum_system`] — factors of a transverse arrangement selected by a
//!   subset, plus the maximal minors forcing the log-gradients and the
//!   all-ones vector to be linearly dependent;
//! * [`general_real_system`] — the real embedding `z_j = x_j + i y_j` used
//!   when no positivity is available: real/imaginary parts are split exactly
//!   and the modulus-comparison equations are emitted in the variables
//!   `(a, b, x, y, λ_R, λ_I, t)` with an optional rotation multiplier `ν`.
//!
//! Denominator factorizations are supplied by the caller as a
//! [`FactoredDenominator`]; construction certifies square-freeness and
//! pairwise coprimality through univariate slices and exact gcds instead of
//! factoring multivariate polynomials.

mod critical;
mod factored;
mod general;
mod poly_system;

pub use critical::{extended_system, smooth_system, stratum_system};
pub use factored::FactoredDenominator;
pub use general::{complex_split, general_real_system};
pub use poly_system::{PolySystem, Provenance};

use thiserror::Error;

/// Errors from system construction and factored-denominator certification.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemsError {
    #[error("expected a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("`{0}` has negative exponents; clear them with a monomial factor first")]
    NotPolynomial(String),
    #[error("variable `{0}` is not declared by the receiving object")]
    UnknownVariable(String),
    #[error("a factored denominator needs at least one factor")]
    NoFactors,
    #[error("{factors} factors but {multiplicities} multiplicities")]
    FactorCountMismatch { factors: usize, multiplicities: usize },
    #[error("factor multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("could not certify factor {0} as square-free")]
    NotSquareFree(usize),
    #[error("could not certify factors {0} and {1} as coprime")]
    NotCoprime(usize, usize),
    #[error("factors^multiplicities do not rebuild the denominator (up to a unit monomial and scalar)")]
    ProductMismatch,
    #[error("stratum subset selects {r} factors but the ambient space has only {n} variables")]
    SubsetTooLarge { r: usize, n: usize },
    #[error("factor index {index} out of range ({count} factors)")]
    BadFactorIndex { index: usize, count: usize },
    #[error("stratum subset must be nonempty and free of repeats")]
    InvalidSubset,
    #[error("could not parse system text: {0}")]
    Parse(String),
}

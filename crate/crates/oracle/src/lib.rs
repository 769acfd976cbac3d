//! Exact ground-truth computations: power-series coefficients of rational
//! functions by truncated expansion, lattice-walk counts in the nonnegative
//! orthant by dynamic programming, and the constructive embeddings that turn
//! algebraic functions and positive-part extractions into diagonals.
//!
//! Everything here is deliberately simple and exact; the asymptotic machinery
//! elsewhere is validated against these oracles.

pub mod embed;
mod modcount;
pub mod series;
pub mod walks;

use thiserror::Error;

pub use embed::{alg_to_diagonal, positive_extraction_to_diagonal};
pub use series::{diagonal_coeffs, SeriesTruncation};
pub use walks::{walk_count_at, walk_counts, EndpointFilter, WalkModel, WalkTable};

/// Hard cap on dense-table entries (series boxes and walk DP layers).
pub const TABLE_BUDGET: usize = 20_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("function is not expandable at the origin (denominator constant term vanishes)")]
    NotExpandable,
    #[error("dense table would need {needed} entries, exceeding the budget of {budget}")]
    TableBudget { needed: u128, budget: usize },
    #[error("step set is empty")]
    EmptyStepSet,
    #[error("step weights must be positive")]
    NonPositiveWeight,
    #[error("step vector has wrong dimension")]
    StepDimensionMismatch,
    #[error("start point must lie in the nonnegative orthant")]
    StartOutsideOrthant,
    #[error("∂P/∂y vanishes at the origin; no power-series branch exists")]
    DerivVanishesAtOrigin,
    #[error("series_check is inconsistent with P at order {order}")]
    SeriesCheckMismatch { order: usize },
    #[error("series_check must start with constant term zero")]
    SeriesCheckConstantTerm,
}

//! Exact Kronecker representations of zero-dimensional polynomial systems.
//!
//! A Kronecker representation encodes the solutions of a polynomial system
//! `f_1 = … = f_s = 0` in variables `z_1, …, z_m` by a single squarefree
//! integer polynomial `P(u)` and one integer polynomial `Q_j(u)` per
//! variable, where `u = Σ λ_j z_j` is an integer linear form separating the
//! solutions.  Every root `u*` of `P` corresponds to exactly one solution,
//! whose coordinates are `z_j = Q_j(u*) / P'(u*)`.
//!
//! [`solve`] computes a representation from a [`systems::PolySystem`]:
//! Lagrange-multiplier-style variables that occur linearly with a constant
//! coefficient are eliminated up front, a degree-reverse-lexicographic
//! Gröbner basis of the rest is computed once, and each candidate linear
//! form is then processed by an exact FGLM change of order (with `u`
//! adjoined as the least variable) followed by a dynamic-evaluation
//! back-substitution over `Q[u]/(P)`.  Candidate forms are tried in a
//! deterministic sequence — all ones, then `1, 2, 3, …`, then seeded
//! pseudo-random coefficients — until the emitted representation passes the
//! mandatory divisibility verification; small systems fall back to a
//! subresultant tower when the basis computation exceeds its budget.
//!
//! [`KroneckerRep`] supports restriction of a parametrized variable to a
//! rational value ([`KroneckerRep::restrict`]) and parametrization of
//! arbitrary polynomial — or Laurent, when the cleared variables are
//! invertible on the solution set — expressions
//! ([`KroneckerRep::parametrize_poly`]).

mod fglm;
mod gb;
mod mpoly;
mod quotient;
mod rep;
mod solve;
mod tower;
mod triangular;

pub use rep::KroneckerRep;
pub use solve::{solve, solve_seeded, solve_with_form};

use thiserror::Error;

/// Errors surfaced by the Kronecker solver and representation operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KroneckerError {
    /// Elimination produced a zero eliminant (or an unbounded staircase):
    /// the system has infinitely many solutions.
    #[error("system is positive-dimensional: {0}")]
    PositiveDimensional(String),

    /// Every attempted linear form failed the verification invariant
    /// (separation, integrality, or divisibility).
    #[error("no linear form passed verification after {attempts} attempts: {last}")]
    SeparationFailed { attempts: usize, last: String },

    /// The Gröbner engine exceeded its work budget and the system is too
    /// large for the resultant-tower fallback.
    #[error("elimination budget exceeded with {0} variables remaining")]
    EliminationBudget(usize),

    /// `restrict` was asked for a value the variable never attains.
    #[error("no solutions have {variable} = {value}")]
    RestrictEmpty { variable: String, value: String },

    /// `parametrize_poly` met a negative exponent of a variable that
    /// vanishes at some parametrized solution.
    #[error("variable {0} is zero at a parametrized solution and cannot be cleared")]
    ClearedVariableZero(String),

    /// The requested parametrization exists but has non-integer
    /// coefficients; use the rational variant instead.
    #[error("parametrization of {context} is not integral")]
    NonIntegral { context: String },

    /// A variable name absent from the representation or system.
    #[error("unknown variable {0}")]
    UnknownVariable(String),

    /// Structurally invalid input (no equations, non-polynomial equation,
    /// broken invariants on a deserialized representation).
    #[error("invalid system: {0}")]
    BadSystem(String),

    /// Malformed text or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

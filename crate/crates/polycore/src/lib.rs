//! Exact arithmetic for multivariate Laurent polynomials and rational
//! functions over the rationals, plus an expression parser and univariate
//! integer-polynomial tools (gcd, resultants, square-free parts, heights).
//!
//! Everything here is immutable after construction and safe to share across
//! threads; all operations are pure and exact.

pub mod gaussian;
pub mod laurent;
pub mod parse;
pub mod qpoly;
pub mod ratfun;
pub mod upoly;

pub use gaussian::{GaussianRational, GaussianRationalSeries};
pub use laurent::LaurentPoly;
pub use parse::{parse_expr, ParseError};
pub use qpoly::QPoly;
pub use ratfun::RationalCombo;
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used for every polynomial coefficient.
pub type Rat = BigRational;

/// Convenience constructor for small rational constants.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for small integer constants.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

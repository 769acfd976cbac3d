//! Rational functions as numerator/denominator pairs of Laurent polynomials.
//!
//! Normalization keeps the denominator a true polynomial (negative exponents
//! cleared by a monomial), moves any pure monomial factor of the denominator
//! into the numerator, and removes shared content, so the pair is coprime up
//! to the factorizations this crate deliberately does not perform.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::{LaurentPoly, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("division by identically-zero polynomial")]
pub struct DivisionByZeroPoly;

/// A rational function F = numerator / denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCombo {
    num: LaurentPoly,
    den: LaurentPoly,
    expandable_at_origin: bool,
    combinatorial_hint: Option<bool>,
}

impl RationalCombo {
    /// Builds and normalizes a rational function.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, DivisionByZeroPoly> {
        if den.is_zero() {
            return Err(DivisionByZeroPoly);
        }
        let vars: Vec<&str> = num.vars().iter().map(String::as_str).collect();
        assert_eq!(num.vars(), den.vars(), "operands must share one variable list");

        if num.is_zero() {
            let one = LaurentPoly::one(&vars);
            return Ok(RationalCombo {
                num,
                den: one,
                expandable_at_origin: true,
                combinatorial_hint: None,
            });
        }

        // Clear negative exponents from the denominator.
        let n = vars.len();
        let mut shift = vec![0i64; n];
        for (i, v) in vars.iter().enumerate() {
            if let Some((lo, _)) = den.exponent_range(v) {
                if lo < 0 {
                    shift[i] = -lo;
                }
            }
        }
        let mut num = num.shift_exponents(&shift);
        let mut den = den.shift_exponents(&shift);

        // Move the denominator's pure monomial factor into the numerator.
        let mut unshift = vec![0i64; n];
        for (i, v) in vars.iter().enumerate() {
            if let Some((lo, _)) = den.exponent_range(v) {
                if lo > 0 {
                    unshift[i] = -lo;
                }
            }
        }
        if unshift.iter().any(|&s| s != 0) {
            num = num.shift_exponents(&unshift);
            den = den.shift_exponents(&unshift);
        }

        // Remove shared content: denominator becomes integer-primitive with
        // positive leading coefficient.
        let (scale, den_prim) = den.integer_primitive();
        let num = num.scale(&scale.recip());
        let expandable = !den_prim.constant_term().is_zero();
        Ok(RationalCombo {
            num,
            den: den_prim,
            expandable_at_origin: expandable,
            combinatorial_hint: None,
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
        let one = LaurentPoly::one(&vars);
        Self::new(p, one).expect("denominator 1 is nonzero")
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &[String] {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the denominator (monomial factors removed) is nonzero at the
    /// origin, i.e. the function has a power-series expansion there up to a
    /// monomial shift carried by the numerator.
    pub fn expandable_at_origin(&self) -> bool {
        self.expandable_at_origin
    }

    pub fn combinatorial_hint(&self) -> Option<bool> {
        self.combinatorial_hint
    }

    pub fn with_combinatorial_hint(mut self, hint: Option<bool>) -> Self {
        self.combinatorial_hint = hint;
        self
    }

    /// Extracts the numerator when the denominator is exactly 1.
    ///
    /// Panics otherwise; used where a plain polynomial is expected.
    pub fn into_poly(self) -> LaurentPoly {
        assert!(
            self.den.is_constant() && self.den.constant_term().is_one(),
            "expression is not a polynomial (denominator {})",
            self.den
        );
        self.num
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        r.num = r.num.neg();
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("product of nonzero denominators is nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of nonzero denominators is nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self, DivisionByZeroPoly> {
        if other.num.is_zero() {
            return Err(DivisionByZeroPoly);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn powi(&self, k: i64) -> Result<Self, DivisionByZeroPoly> {
        let mut base = if k < 0 {
            let vars: Vec<&str> = self.vars().iter().map(String::as_str).collect();
            let one = RationalCombo::from_poly(LaurentPoly::one(&vars));
            one.div(self)?
        } else {
            self.clone()
        };
        let mut n = k.unsigned_abs();
        let vars: Vec<&str> = self.vars().iter().map(String::as_str).collect();
        let mut acc = RationalCombo::from_poly(LaurentPoly::one(&vars));
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Re-expresses both parts over a superset/reordering of the variables.
    pub fn with_vars(&self, new_vars: &[&str]) -> Self {
        let mut r = Self::new(self.num.with_vars(new_vars), self.den.with_vars(new_vars))
            .expect("nonzero denominator stays nonzero");
        r.combinatorial_hint = self.combinatorial_hint;
        r
    }

    /// Evaluates at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

impl fmt::Display for RationalCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expr;

    #[test]
    fn zero_normalizes_to_zero_over_one() {
        let f = parse_expr("0", &["x"]).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.denominator(), &LaurentPoly::one(&["x"]));
        assert!(f.expandable_at_origin());
    }

    #[test]
    fn monomial_denominator_moves_to_numerator() {
        // x² / (x·(1−x)) → x / (1−x)
        let f = parse_expr("x^2/(x*(1-x))", &["x"]).unwrap();
        let num = parse_expr("x", &["x"]).unwrap().into_poly();
        let den = parse_expr("1-x", &["x"]).unwrap().into_poly();
        assert_eq!(f.numerator(), &num);
        assert_eq!(f.denominator(), &den);
        assert!(f.expandable_at_origin());
    }

    #[test]
    fn denominator_scaled_primitive() {
        // (1/2) / (1/2 − x) = 1 / (1 − 2x) up to content normalization:
        // denominator must come out integer-primitive with positive lead.
        let f = parse_expr("(1/2)/(1/2-x)", &["x"]).unwrap();
        let den = parse_expr("1-2*x", &["x"]).unwrap().into_poly();
        assert_eq!(f.denominator(), &den);
        assert_eq!(f.numerator(), &LaurentPoly::one(&["x"]));
    }

    #[test]
    fn not_expandable_when_denominator_vanishes_at_origin() {
        let f = parse_expr("1/(x+y)", &["x", "y"]).unwrap();
        assert!(!f.expandable_at_origin());
    }

    #[test]
    fn pure_monomial_denominator_is_expandable_with_shift() {
        // 1/x: denominator becomes 1, numerator x^{-1}
        let f = parse_expr("1/x", &["x"]).unwrap();
        assert_eq!(f.denominator(), &LaurentPoly::one(&["x"]));
        assert_eq!(
            f.numerator(),
            &LaurentPoly::from_terms(&["x"], vec![(vec![-1], crate::int(1))])
        );
        assert!(f.expandable_at_origin());
    }
}

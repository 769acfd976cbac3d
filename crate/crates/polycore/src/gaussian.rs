//! Gaussian rationals (complex numbers with exact rational real and
//! imaginary parts) and truncated power series over them. The series type
//! does exact arithmetic modulo θ^(order+1), which is how higher derivatives
//! of phase and amplitude functions are extracted without floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rat;

/// An element of Q(i): re + im·i with exact rational parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Self::new(Rat::one(), Rat::zero())
    }

    pub fn i() -> Self {
        Self::new(Rat::zero(), Rat::one())
    }

    pub fn from_rat(re: Rat) -> Self {
        Self::new(re, Rat::zero())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// |z|² = re² + im², an exact rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        Self::new(&self.re / &n, -&self.im / &n)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(&self.re * c, &self.im * c)
    }

    pub fn powi(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inverse()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{} - {}*i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}*i", self.re, self.im)
        }
    }
}

/// A power series in θ over Q(i), known exactly modulo θ^(order+1).
/// Invariant: `coeffs.len() == order + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRationalSeries {
    order: usize,
    coeffs: Vec<GaussianRational>,
}

impl GaussianRationalSeries {
    /// Pads short coefficient lists with zeros and drops terms beyond the
    /// truncation order.
    pub fn new(order: usize, mut coeffs: Vec<GaussianRational>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, GaussianRational::zero());
        GaussianRationalSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, GaussianRational::one())
    }

    pub fn constant(order: usize, c: GaussianRational) -> Self {
        Self::new(order, vec![c])
    }

    /// The series θ (zero when order = 0).
    pub fn var(order: usize) -> Self {
        Self::new(order, vec![GaussianRational::zero(), GaussianRational::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &GaussianRational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    /// Result order: the smaller of the two operands' orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::new(
            order,
            (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Truncated product; result order is the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = vec![GaussianRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(order, out)
    }

    pub fn powi(&self, e: u64) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Self {
        let a0 = &self.coeffs[0];
        assert!(!a0.is_zero(), "series inverse requires a unit constant term");
        let inv0 = a0.inverse();
        let mut out = vec![inv0.clone()];
        for k in 1..=self.order {
            let mut s = GaussianRational::zero();
            for j in 1..=k {
                s = &s + &(&self.coeffs[j] * &out[k - j]);
            }
            out.push(&(-&s) * &inv0);
        }
        Self::new(self.order, out)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// d/dθ; the result is known one order lower.
    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.order - 1,
            (1..=self.order)
                .map(|i| self.coeffs[i].scale(&Rat::from_integer(i.into())))
                .collect(),
        )
    }

    /// Substitutes `inner` (which must have zero constant term) for θ.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeffs[0].is_zero(),
            "series composition requires inner constant term zero"
        );
        let order = self.order.min(inner.order);
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(&inner.truncate(order));
            acc.coeffs[0] = &acc.coeffs[0] + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_i64(-1));
    }

    #[test]
    fn division_round_trips() {
        let a = g((3, 2), (-1, 5));
        let b = g((2, 7), (4, 3));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(a.norm_sqr(), rat(9, 4) + rat(1, 25));
    }

    #[test]
    fn geometric_series_inverse() {
        // 1/(1−θ) = 1 + θ + θ² + ...
        let one = GaussianRationalSeries::one(5);
        let den = one.sub(&GaussianRationalSeries::var(5));
        let inv = den.inverse();
        for k in 0..=5 {
            assert_eq!(*inv.coeff(k), GaussianRational::one());
        }
        assert_eq!(den.mul(&inv), one);
    }

    #[test]
    fn derivative_drops_one_order() {
        // (1+θ)³ = 1 + 3θ + 3θ² + θ³; derivative 3 + 6θ + 3θ².
        let p = GaussianRationalSeries::one(3)
            .add(&GaussianRationalSeries::var(3))
            .powi(3);
        let d = p.derivative();
        assert_eq!(d.order(), 2);
        let want: Vec<i64> = vec![3, 6, 3];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(*d.coeff(k), GaussianRational::from_i64(*w));
        }
    }

    #[test]
    fn compose_geometric_with_shift() {
        // 1/(1−θ) at θ = t + t²: coefficients of Σ (t+t²)^k.
        let outer = GaussianRationalSeries::one(4)
            .sub(&GaussianRationalSeries::var(4))
            .inverse();
        let inner = GaussianRationalSeries::var(4)
            .add(&GaussianRationalSeries::var(4).powi(2));
        let out = outer.compose(&inner);
        // 1 + t + 2t² + 3t³ + 5t⁴ (Fibonacci numbers).
        let want: Vec<i64> = vec![1, 1, 2, 3, 5];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(*out.coeff(k), GaussianRational::from_i64(*w));
        }
    }
}

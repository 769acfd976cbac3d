//! Dense univariate polynomials over the rationals. These carry the
//! Euclidean algebra (division, gcd, modular inverse) used for computing in
//! quotient rings Q[u]/(P). `inverse_mod` reports a nontrivial factor of the
//! modulus on failure instead of panicking, so callers working modulo a
//! possibly-reducible polynomial can split the modulus and continue.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Rat, UPoly};

/// A polynomial in Q[u]; `coeffs[i]` multiplies u^i, highest term nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![Rat::one()] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial u.
    pub fn var() -> Self {
        QPoly { coeffs: vec![Rat::zero(), Rat::one()] }
    }

    pub fn from_upoly(p: &UPoly) -> Self {
        QPoly {
            coeffs: p.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect(),
        }
    }

    /// Writes `self = scale · p` with p integer, primitive, positive-lead.
    /// Returns (p, scale); the zero polynomial gives (0, 1).
    pub fn to_upoly_primitive(&self) -> (UPoly, Rat) {
        if self.is_zero() {
            return (UPoly::zero(), Rat::one());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let scaled = UPoly::new(ints);
        let prim = scaled.primitive_positive();
        let mut content = scaled.content();
        if scaled.lc().is_negative() {
            content = -content;
        }
        (prim, Rat::new(content, den))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn mul_scalar(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = Rat::one() / self.lc();
        self.mul_scalar(&inv)
    }

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let ld = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = &r[i] / &ld;
            let k = i - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let prod = dc * &c;
                r[k + j] -= prod;
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, m: &Self) -> Self {
        self.div_rem(m).1
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let inv = Rat::one() / r0.lc();
        (r0.mul_scalar(&inv), s0.mul_scalar(&inv), t0.mul_scalar(&inv))
    }

    /// Inverse of `self` modulo `m`. If gcd(self, m) is nonconstant the
    /// inverse does not exist; that gcd — a nontrivial factor of `m` when
    /// self ≢ 0 — is returned as the error so the caller can split `m`.
    pub fn inverse_mod(&self, m: &Self) -> Result<Self, Self> {
        let a = self.rem(m);
        if a.is_zero() {
            return Err(m.monic());
        }
        let (g, s, _) = a.extended_gcd(m);
        if g.degree() == Some(0) {
            Ok(s.rem(m))
        } else {
            Err(g)
        }
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one().rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => f.write_str("u")?,
                1 => write!(f, "{mag}*u")?,
                _ if mag.is_one() => write!(f, "u^{i}")?,
                _ => write!(f, "{mag}*u^{i}")?,
            }
        }
        Ok(())
    }
}

//! Dense univariate polynomials over the integers: gcd and resultants by the
//! subresultant remainder sequence (cross-checked against a fraction-free
//! Sylvester determinant), square-free parts, heights, and the Graeffe
//! transform used for grouping roots by modulus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{QPoly, Rat};

/// A polynomial in Z[u]; `coeffs[i]` multiplies u^i, highest term nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial u.
    pub fn var() -> Self {
        UPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
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
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
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

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by u^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: out }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Content: nonnegative gcd of all coefficients (zero for zero).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Exact integer division: panics unless `b` divides `self` with integer
    /// quotient coefficients.
    pub fn div_exact(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.degree().unwrap();
        let lb = b.lc();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let (c, rem) = r.lc().div_rem(&lb);
            assert!(rem.is_zero(), "inexact integer polynomial division");
            let k = dr - db;
            q[k] = c.clone();
            r = r.sub(&b.shift_up(k).mul_scalar(&c));
            assert!(r.degree() != Some(dr), "division failed to reduce degree");
        }
        assert!(r.is_zero(), "inexact integer polynomial division");
        Self::new(q)
    }

    /// True iff `self` divides `other` exactly over the rationals.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        let (_, r) = QPoly::from_upoly(other).div_rem(&QPoly::from_upoly(self));
        r.is_zero()
    }

    /// Pseudo-remainder scaled by exactly lc(b)^(delta+1), the normalization
    /// the subresultant algorithm expects.
    fn pseudo_rem_full(&self, b: &Self, delta: usize) -> Self {
        let lb = b.lc();
        let db = b.degree().unwrap();
        let mut r = self.clone();
        let mut steps = 0usize;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let k = dr - db;
            let lr = r.lc();
            r = r.mul_scalar(&lb).sub(&b.shift_up(k).mul_scalar(&lr));
            steps += 1;
        }
        if steps < delta + 1 {
            r = r.mul_scalar(&lb.pow((delta + 1 - steps) as u32));
        }
        r
    }

    /// Primitive positive gcd via the subresultant remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let (mut a, mut b) = (self.primitive_positive(), other.primitive_positive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree() == Some(0) {
            return UPoly::one();
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem_full(&b, delta);
            if r.is_zero() {
                return b.primitive_positive();
            }
            a = b;
            let divisor = &g * h.pow(delta as u32);
            b = r.div_exact(&UPoly::constant(divisor));
            if b.degree() == Some(0) {
                return UPoly::one();
            }
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                let num = g.pow(delta as u32);
                let den = h.pow((delta - 1) as u32);
                let (q, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "subresultant bookkeeping must divide exactly");
                q
            };
        }
    }

    /// Resultant via the subresultant remainder sequence (Cohen, Algorithm
    /// 3.3.7). Cross-validated against `sylvester_resultant` in tests.
    pub fn resultant(&self, other: &Self) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let da = self.degree().unwrap();
        let db = other.degree().unwrap();
        if da == 0 {
            return self.lc().pow(db as u32);
        }
        if db == 0 {
            return other.lc().pow(da as u32);
        }
        let mut sign_neg = false;
        let (mut a, mut b) = (self.clone(), other.clone());
        if da < db {
            if da % 2 == 1 && db % 2 == 1 {
                sign_neg = !sign_neg;
            }
            std::mem::swap(&mut a, &mut b);
        }
        let ca = a.content();
        let cb = b.content();
        let acc = ca.pow(b.degree().unwrap() as u32) * cb.pow(a.degree().unwrap() as u32);
        a = a.div_exact(&UPoly::constant(ca));
        b = b.div_exact(&UPoly::constant(cb));

        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let dega = a.degree().unwrap();
            let degb = b.degree().unwrap();
            let delta = dega - degb;
            if dega % 2 == 1 && degb % 2 == 1 {
                sign_neg = !sign_neg;
            }
            let r = a.pseudo_rem_full(&b, delta);
            if r.is_zero() {
                // deg b ≥ 1 here, so the inputs share a nonconstant factor.
                return BigInt::zero();
            }
            a = b;
            let divisor = &g * h.pow(delta as u32);
            b = r.div_exact(&UPoly::constant(divisor));
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                let num = g.pow(delta as u32);
                let den = h.pow((delta - 1) as u32);
                let (q, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "subresultant bookkeeping must divide exactly");
                q
            };
            if b.degree() == Some(0) {
                let dega = a.degree().unwrap();
                let num = b.lc().pow(dega as u32);
                let den = h.pow((dega - 1) as u32);
                let (q, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "subresultant bookkeeping must divide exactly");
                return if sign_neg { -(acc * q) } else { acc * q };
            }
        }
    }

    /// Resultant as the determinant of the Sylvester matrix, computed by
    /// fraction-free Bareiss elimination. Slower; kept as an independent
    /// check on the remainder-sequence implementation.
    pub fn sylvester_resultant(&self, other: &Self) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let m = self.degree().unwrap();
        let n = other.degree().unwrap();
        if m == 0 {
            return self.lc().pow(n as u32);
        }
        if n == 0 {
            return other.lc().pow(m as u32);
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (k, c) in self.coeffs.iter().enumerate() {
                mat[row][row + (m - k)] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in other.coeffs.iter().enumerate() {
                mat[n + row][row + (n - k)] = c.clone();
            }
        }
        bareiss_determinant(mat)
    }

    /// Discriminant: (−1)^{d(d−1)/2}·Res(p, p′)/lc(p).
    pub fn discriminant(&self) -> BigInt {
        let d = self.degree().expect("discriminant of the zero polynomial");
        if d == 0 {
            return BigInt::one();
        }
        let res = self.resultant(&self.derivative());
        let (q, rem) = res.div_rem(&self.lc());
        assert!(rem.is_zero(), "lc divides Res(p, p') exactly");
        if (d * (d - 1) / 2) % 2 == 1 {
            -q
        } else {
            q
        }
    }

    /// Square-free part p / gcd(p, p′), primitive with positive lead.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.primitive_positive();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return p;
        }
        let (q, r) = QPoly::from_upoly(&p).div_rem(&QPoly::from_upoly(&g));
        debug_assert!(r.is_zero());
        let (u, _) = q.to_upoly_primitive();
        u.primitive_positive()
    }

    pub fn is_square_free(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Bit height: bit length of the largest |coefficient| (0 for zero).
    /// A conservative integer stand-in for h = log₂ max |c| in budgets.
    pub fn height_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.abs().bits()).max().unwrap_or(0)
    }

    /// Height as a float: max(0, log₂ of the largest absolute coefficient).
    pub fn height(&self) -> f64 {
        let mut best = 0f64;
        for c in &self.coeffs {
            let a = c.abs();
            if a > BigInt::one() {
                let bits = a.bits();
                let shift = bits.saturating_sub(53);
                let top = (a >> shift).to_f64().unwrap_or(f64::MAX);
                best = best.max(top.log2() + shift as f64);
            }
        }
        best
    }

    /// Squared 2-norm of the coefficient vector.
    pub fn norm2_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Graeffe polynomial G with G(T²) = A(T)·A(−T): writing
    /// A = E(u²) + u·O(u²), returns E² − T·O².
    pub fn graeffe(&self) -> Self {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        let e = UPoly::new(even);
        let o = UPoly::new(odd);
        e.mul(&e).sub(&o.mul(&o).shift_up(1))
    }

    /// Substitutes u ← c·u for an integer scale.
    pub fn scale_var(&self, c: &BigInt) -> Self {
        let mut pow = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &pow;
                pow = &pow * c;
                out
            })
            .collect();
        Self::new(coeffs)
    }

    /// Substitutes u ← −u.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

/// Fraction-free determinant (Bareiss); consumes the matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

impl fmt::Display for UPoly {
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
            let mag = c.abs();
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basic() {
        let a = UPoly::from_i64(&[-1, 0, 1]); // u² − 1
        let b = UPoly::from_i64(&[-1, 1]); // u − 1
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn square_free_part_strips_multiplicity() {
        // (u−1)²(u+2) → (u−1)(u+2) = u² + u − 2
        let f = UPoly::from_i64(&[-1, 1]);
        let g = UPoly::from_i64(&[2, 1]);
        let p = f.mul(&f).mul(&g);
        assert_eq!(p.square_free_part(), f.mul(&g));
    }

    #[test]
    fn resultant_matches_sylvester_on_fixed_pairs() {
        let pairs = [
            (UPoly::from_i64(&[-2, 0, 1]), UPoly::from_i64(&[1, 1])),
            (UPoly::from_i64(&[1, 3, 3, 1]), UPoly::from_i64(&[-1, 0, 2])),
            (UPoly::from_i64(&[5, -4, 0, 2, 7]), UPoly::from_i64(&[3, 0, -1, 1])),
            (UPoly::from_i64(&[0, 2, 4]), UPoly::from_i64(&[6, 0, 0, 3])),
        ];
        for (a, b) in pairs {
            assert_eq!(a.resultant(&b), a.sylvester_resultant(&b));
            assert_eq!(b.resultant(&a), b.sylvester_resultant(&a));
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_root() {
        let a = UPoly::from_i64(&[-1, 0, 1]); // (u−1)(u+1)
        let b = UPoly::from_i64(&[-3, 2, 1]); // (u+3)(u−1)
        assert!(a.resultant(&b).is_zero());
        let c = UPoly::from_i64(&[7, 1]);
        assert!(!a.resultant(&c).is_zero());
    }

    #[test]
    fn discriminant_of_quadratic() {
        // disc(au² + bu + c) = b² − 4ac
        let p = UPoly::from_i64(&[3, -5, 2]); // 2u² − 5u + 3
        assert_eq!(p.discriminant(), BigInt::from(25 - 24));
    }

    #[test]
    fn graeffe_identity_on_example() {
        let a = UPoly::from_i64(&[2, -3, 0, 1]);
        let g = a.graeffe();
        // G(T²) = A(T)·A(−T)
        let mut spread = vec![BigInt::zero(); 2 * g.coeffs().len()];
        for (i, c) in g.coeffs().iter().enumerate() {
            spread[2 * i] = c.clone();
        }
        assert_eq!(UPoly::new(spread), a.mul(&a.reflect()));
    }

    #[test]
    fn height_is_log2_of_largest_coefficient() {
        let p = UPoly::from_i64(&[1, -8]);
        assert_eq!(p.height(), 3.0);
        assert_eq!(p.height_bits(), 4);
        assert_eq!(UPoly::one().height(), 0.0);
    }
}

//! Caller-supplied denominator factorizations, certified at construction.
//!
//! The toolkit never factors multivariate polynomials. Instead the caller
//! hands over the factors and this module proves three things exactly:
//! each factor is square-free, the factors are pairwise coprime, and the
//! factors (with multiplicities) rebuild the denominator up to a unit
//! monomial and a rational scalar.
//!
//! Square-freeness and coprimality are certified through univariate slices:
//! specializing all variables but one at integer points and taking exact
//! gcds. A slice that preserves the leading coefficient and comes out
//! square-free (resp. coprime) proves that no repeated (resp. common) factor
//! involves the sliced variable, because specialization maps any such factor
//! to a positive-degree divisor of the slice. Certifying every variable this
//! way pins the offending factor down to a constant. Failure on all attempts
//! is reported as an error, never silently accepted.

use crate::SystemsError;
use num_traits::Zero;
use polycore::{int, LaurentPoly, QPoly, Rat, UPoly};

const SLICE_ATTEMPTS: usize = 8;

/// A denominator `D = unit · Π H_i^{m_i}` with pairwise-coprime square-free
/// factors `H_i`. Factors are stored aligned over the denominator's full
/// ordered variable list.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredDenominator {
    denominator: LaurentPoly,
    factors: Vec<LaurentPoly>,
    multiplicities: Vec<u32>,
}

impl FactoredDenominator {
    /// Validates and certifies a factorization. The denominator may be a
    /// Laurent polynomial (unit monomials are immaterial); factors must be
    /// genuine nonconstant polynomials over the denominator's variables.
    pub fn new(
        denominator: LaurentPoly,
        factors: Vec<LaurentPoly>,
        multiplicities: Vec<u32>,
    ) -> Result<Self, SystemsError> {
        if factors.is_empty() {
            return Err(SystemsError::NoFactors);
        }
        if factors.len() != multiplicities.len() {
            return Err(SystemsError::FactorCountMismatch {
                factors: factors.len(),
                multiplicities: multiplicities.len(),
            });
        }
        if multiplicities.iter().any(|&m| m == 0) {
            return Err(SystemsError::ZeroMultiplicity);
        }
        let names: Vec<&str> = denominator.vars().iter().map(String::as_str).collect();
        let mut aligned = Vec::with_capacity(factors.len());
        for f in &factors {
            if !f.is_polynomial() {
                return Err(SystemsError::NotPolynomial(f.pretty_print()));
            }
            if let Some(v) = f.vars().iter().find(|v| !denominator.vars().contains(v)) {
                return Err(SystemsError::UnknownVariable(v.clone()));
            }
            let g = f.with_vars(&names);
            if g.is_constant() {
                return Err(SystemsError::ConstantPolynomial);
            }
            aligned.push(g);
        }

        for (i, f) in aligned.iter().enumerate() {
            if !certify_square_free(f) {
                return Err(SystemsError::NotSquareFree(i));
            }
        }
        for i in 0..aligned.len() {
            for j in i + 1..aligned.len() {
                if !certify_coprime(&aligned[i], &aligned[j]) {
                    return Err(SystemsError::NotCoprime(i, j));
                }
            }
        }

        let mut product = LaurentPoly::one(&names);
        for (f, &m) in aligned.iter().zip(&multiplicities) {
            product = product.mul(&f.pow(m));
        }
        if unit_normal_form(&product) != unit_normal_form(&denominator) {
            return Err(SystemsError::ProductMismatch);
        }

        Ok(Self {
            denominator,
            factors: aligned,
            multiplicities,
        })
    }

    /// The denominator as its own single square-free factor.
    pub fn single(h: &LaurentPoly) -> Result<Self, SystemsError> {
        Self::new(h.clone(), vec![h.clone()], vec![1])
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    /// Factors aligned over [`Self::variables`].
    pub fn factors(&self) -> &[LaurentPoly] {
        &self.factors
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// The common ordered variable list (the denominator's).
    pub fn variables(&self) -> &[String] {
        self.denominator.vars()
    }
}

/// Deterministic nonzero integer evaluation points (splitmix-style hashing of
/// the attempt and coordinate indices), so certificates are reproducible.
fn eval_point(attempt: usize, coord: usize) -> Rat {
    let mut s = (attempt as u64 + 1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(coord as u64);
    s ^= s >> 31;
    s = s.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    s ^= s >> 27;
    let v = (s % 61) as i64 - 30;
    int(if v == 0 { 17 } else { v })
}

/// Specializes every variable except `keep` at the attempt's points and
/// returns the slice as a primitive integer univariate polynomial.
fn univariate_slice(f: &LaurentPoly, keep: &str, attempt: usize) -> UPoly {
    let keep_idx = f.var_index(keep);
    let vals: Vec<Option<Rat>> = (0..f.nvars())
        .map(|j| {
            if j == keep_idx {
                None
            } else {
                Some(eval_point(attempt, j))
            }
        })
        .collect();
    let sliced = f.substitute_values(&vals);
    let deg = match sliced.exponent_range(keep) {
        Some((_, hi)) => hi as usize,
        None => return UPoly::zero(),
    };
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (e, c) in sliced.terms() {
        coeffs[e[keep_idx] as usize] += c;
    }
    let (upoly, _scale) = QPoly::new(coeffs).to_upoly_primitive();
    upoly
}

/// Degree of `f` in `v` (0 when `v` does not occur).
fn degree_in(f: &LaurentPoly, v: &str) -> i64 {
    match f.exponent_range(v) {
        Some((_, hi)) => hi,
        None => 0,
    }
}

/// Proves that no repeated irreducible factor of `f` involves any of its
/// variables: for each variable, some slice preserving the leading
/// coefficient must be square-free.
fn certify_square_free(f: &LaurentPoly) -> bool {
    for v in f.vars() {
        let deg = degree_in(f, v);
        if deg == 0 {
            continue;
        }
        let certified = (0..SLICE_ATTEMPTS).any(|attempt| {
            let u = univariate_slice(f, v, attempt);
            u.degree() == Some(deg as usize) && u.is_square_free()
        });
        if !certified {
            return false;
        }
    }
    true
}

/// Proves `gcd(f, g)` constant: any common factor would involve a variable
/// shared by both, and for each such variable some simultaneous slice
/// preserving both leading coefficients has coprime images.
fn certify_coprime(f: &LaurentPoly, g: &LaurentPoly) -> bool {
    for v in f.vars() {
        let df = degree_in(f, v);
        let dg = degree_in(g, v);
        if df == 0 || dg == 0 {
            continue;
        }
        let certified = (0..SLICE_ATTEMPTS).any(|attempt| {
            let uf = univariate_slice(f, v, attempt);
            let ug = univariate_slice(g, v, attempt);
            uf.degree() == Some(df as usize)
                && ug.degree() == Some(dg as usize)
                && uf.gcd(&ug).degree() == Some(0)
        });
        if !certified {
            return false;
        }
    }
    true
}

/// Canonical representative of the class "equal up to a unit monomial and a
/// rational scalar": shift every variable's minimum exponent to zero, then
/// take the primitive integer form with positive trailing coefficient.
fn unit_normal_form(p: &LaurentPoly) -> LaurentPoly {
    let shift: Vec<i64> = p
        .vars()
        .iter()
        .map(|v| match p.exponent_range(v) {
            Some((lo, _)) => -lo,
            None => 0,
        })
        .collect();
    let (_, prim) = p.shift_exponents(&shift).integer_primitive();
    prim
}

//! Multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms are kept in a canonical graded-lexicographic order (grade = sum of
//! exponents, which may be negative) with no stored zero coefficients, so two
//! polynomials over the same variable list are equal iff their term lists are.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rat;

/// Largest exponent magnitude we accept; inputs at thesis scale are tiny and
/// anything beyond this indicates a runaway computation.
pub const MAX_EXPONENT: i64 = 1 << 30;

/// A Laurent polynomial: ordered variable list plus a canonical term list.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    /// Sorted graded-lexicographically (ascending); no zero coefficients.
    terms: Vec<(Vec<i64>, Rat)>,
}

/// Graded-lexicographic comparison of exponent vectors.
fn grlex(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl LaurentPoly {
    /// The zero polynomial over the given variables.
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: Vec::new(),
        }
    }

    /// The constant-one polynomial.
    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let n = vars.len();
        let mut p = LaurentPoly { vars, terms: Vec::new() };
        if !c.is_zero() {
            p.terms.push((vec![0; n], c));
        }
        p
    }

    /// The polynomial consisting of a single named variable.
    ///
    /// Panics if `name` is not in `vars`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("variable {name} not in variable list"));
        let mut exps = vec![0i64; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, &exps, Rat::one())
    }

    /// A single term `c * vars^exps`.
    pub fn monomial(vars: &[&str], exps: &[i64], c: Rat) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length mismatch");
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let mut p = LaurentPoly { vars, terms: Vec::new() };
        if !c.is_zero() {
            check_exps(exps);
            p.terms.push((exps.to_vec(), c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, Rat)>,
    {
        let vars_owned: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let n = vars_owned.len();
        let mut map: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            check_exps(&e);
            let entry = map.entry(e).or_insert_with(Rat::zero);
            *entry += c;
        }
        let mut terms: Vec<(Vec<i64>, Rat)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex(&a.0, &b.0));
        LaurentPoly { vars: vars_owned, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("variable {name} not in variable list"))
    }

    /// Iterates terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    /// The coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[i64]) -> Rat {
        match self.terms.binary_search_by(|(e, _)| grlex(e, exps)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Maximum total degree over all terms, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| e.iter().sum())
    }

    /// (min, max) exponent of `var` over all terms; `None` if zero polynomial.
    pub fn exponent_range(&self, var: &str) -> Option<(i64, i64)> {
        let idx = self.var_index(var);
        let mut it = self.terms.iter().map(|(e, _)| e[idx]);
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for e in it {
            lo = lo.min(e);
            hi = hi.max(e);
        }
        Some((lo, hi))
    }

    /// True if every exponent of every variable is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&x| x >= 0))
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "operands must share one variable list"
        );
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match grlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        if self.is_zero() || other.is_zero() {
            return LaurentPoly { vars: self.vars.clone(), terms: Vec::new() };
        }
        let mut map: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca * cb;
                let entry = map.entry(e).or_insert_with(Rat::zero);
                *entry += c;
            }
        }
        let mut terms: Vec<(Vec<i64>, Rat)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        for (e, _) in &terms {
            check_exps(e);
        }
        terms.sort_by(|a, b| grlex(&a.0, &b.0));
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly { vars: self.vars.clone(), terms: Vec::new() };
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(
            &self.vars.iter().map(String::as_str).collect::<Vec<_>>(),
            Rat::one(),
        );
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative; Laurent exponents are permitted.
    pub fn partial_derivative(&self, var: &str) -> Self {
        let idx = self.var_index(var);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[idx] != 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[idx] -= 1;
                (e2, c * Rat::from_integer(e[idx].into()))
            })
            .collect();
        let mut p = LaurentPoly { vars: self.vars.clone(), terms };
        p.terms.sort_by(|a, b| grlex(&a.0, &b.0));
        p
    }

    /// The logarithmic-derivative combination `var * d/d(var)` used by the
    /// critical-point equations.
    pub fn zdz(&self, var: &str) -> Self {
        let idx = self.var_index(var);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[idx] != 0)
            .map(|(e, c)| (e.clone(), c * Rat::from_integer(e[idx].into())))
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Evaluates at a full rational point (one value per variable).
    ///
    /// Panics if a coordinate with a negative exponent is zero.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= rat_pow(x, k);
            }
            acc += t;
        }
        acc
    }

    /// Substitutes rational values for a subset of variables (given by
    /// `Some(value)` entries); the result stays over the same variable list.
    pub fn substitute_values(&self, vals: &[Option<Rat>]) -> Self {
        assert_eq!(vals.len(), self.vars.len());
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e2 = e.clone();
            let mut c2 = c.clone();
            for (i, v) in vals.iter().enumerate() {
                if let Some(x) = v {
                    c2 *= rat_pow(x, e2[i]);
                    e2[i] = 0;
                }
            }
            (e2, c2)
        });
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Self::from_terms(&vars, terms)
    }

    /// Replaces `var` by the monomial `c * vars^mono` (c nonzero); this covers
    /// reciprocal substitutions like x → 1/x and scalings like z → t·z.
    pub fn substitute_monomial(&self, var: &str, c: &Rat, mono: &[i64]) -> Self {
        assert!(!c.is_zero(), "monomial substitution needs a nonzero coefficient");
        assert_eq!(mono.len(), self.vars.len());
        let idx = self.var_index(var);
        let terms = self.terms.iter().map(|(e, k)| {
            let pow = e[idx];
            let mut e2 = e.clone();
            e2[idx] = 0;
            for (t, m) in e2.iter_mut().zip(mono) {
                *t += pow * m;
            }
            (e2, k * rat_pow(c, pow))
        });
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Self::from_terms(&vars, terms)
    }

    /// Replaces `var` by an arbitrary polynomial. Requires every exponent of
    /// `var` to be nonnegative (Horner evaluation).
    pub fn substitute_poly(&self, var: &str, p: &Self) -> Self {
        self.assert_same_vars(p);
        let groups = self.coeffs_in(var);
        assert!(
            groups.iter().all(|(k, _)| *k >= 0),
            "polynomial substitution requires nonnegative exponents of {var}"
        );
        let max = groups.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut acc = LaurentPoly::zero(&vars);
        let mut by_exp: Vec<LaurentPoly> =
            (0..=max).map(|_| LaurentPoly::zero(&vars)).collect();
        for (k, g) in groups {
            by_exp[k as usize] = g;
        }
        for g in by_exp.into_iter().rev() {
            acc = acc.mul(p).add(&g);
        }
        acc
    }

    /// Groups terms by the exponent of `var`: returns (exponent, coefficient
    /// polynomial with that variable's exponent zeroed) sorted by exponent.
    pub fn coeffs_in(&self, var: &str) -> Vec<(i64, LaurentPoly)> {
        let idx = self.var_index(var);
        let mut map: BTreeMap<i64, Vec<(Vec<i64>, Rat)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[idx];
            e2[idx] = 0;
            map.entry(k).or_default().push((e2, c.clone()));
        }
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        map.into_iter()
            .map(|(k, terms)| (k, Self::from_terms(&vars, terms)))
            .collect()
    }

    /// Re-expresses the polynomial over a superset (or reordering) of its
    /// variables; every current variable must appear in `new_vars`.
    pub fn with_vars(&self, new_vars: &[&str]) -> Self {
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                new_vars
                    .iter()
                    .position(|w| w == v)
                    .unwrap_or_else(|| panic!("variable {v} missing from new list"))
            })
            .collect();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e2 = vec![0i64; new_vars.len()];
            for (old, &new) in positions.iter().enumerate() {
                e2[new] = e[old];
            }
            (e2, c.clone())
        });
        Self::from_terms(new_vars, terms)
    }

    /// Multiplies by the monomial vars^shift (used for Laurent clearing).
    pub fn shift_exponents(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        let terms = self.terms.iter().map(|(e, c)| {
            let e2: Vec<i64> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            (e2, c.clone())
        });
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Self::from_terms(&vars, terms)
    }

    /// Writes `self = scale · prim` with `prim` having integer coefficients,
    /// content 1, and positive trailing (graded-lex-smallest) coefficient —
    /// so denominators like 1−x−y keep their constant term +1.
    /// The zero polynomial returns scale 1.
    pub fn integer_primitive(&self) -> (Rat, LaurentPoly) {
        use num_bigint::BigInt;
        use num_integer::Integer as _;
        if self.is_zero() {
            return (Rat::one(), self.clone());
        }
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut scale = Rat::new(num_gcd, den_lcm);
        if self.terms.first().unwrap().1.is_negative() {
            scale = -scale;
        }
        let inv = scale.recip();
        let prim = LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * &inv))
                .collect(),
        };
        (scale, prim)
    }

    /// Canonical text form: terms in graded-lex order with explicit `^`.
    pub fn pretty_print(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(mag.to_string());
            }
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{k}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn check_exps(e: &[i64]) {
    for &x in e {
        assert!(
            x.abs() <= MAX_EXPONENT,
            "exponent {x} exceeds the supported range ±2^30"
        );
    }
}

/// Exact rational power with integer (possibly negative) exponent.
pub fn rat_pow(x: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    assert!(!(x.is_zero() && k < 0), "zero raised to a negative power");
    let mut base = if k < 0 { x.recip() } else { x.clone() };
    let mut n = k.unsigned_abs();
    let mut acc = Rat::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty_print())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.vars.join(","), self.pretty_print())
    }
}

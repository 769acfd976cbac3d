//! Dense-exponent multivariate integer polynomials ordered by degrevlex.
//!
//! The Gröbner engine works over `Z[z_0, …, z_{m-1}]` with primitive
//! (content-free) polynomials so that all reductions stay fraction-free.
//! Terms are kept sorted in strictly decreasing degree-reverse-lexicographic
//! order; the leading term is always `terms[0]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

pub(crate) type Exps = Vec<u32>;

/// Degree-reverse-lexicographic comparison: higher total degree wins; on a
/// tie the exponent vectors are compared from the last variable backwards
/// and the one with the *smaller* exponent at the first difference wins.
pub(crate) fn cmp_drl(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Plain lexicographic comparison with variable 0 strongest.
pub(crate) fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

pub(crate) fn exp_divides(d: &[u32], m: &[u32]) -> bool {
    d.iter().zip(m.iter()).all(|(a, b)| a <= b)
}

pub(crate) fn exp_sub(m: &[u32], d: &[u32]) -> Exps {
    m.iter().zip(d.iter()).map(|(a, b)| a - b).collect()
}

pub(crate) fn exp_add(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub(crate) fn exp_lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn exp_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

pub(crate) fn exp_deg(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// Multivariate integer polynomial; terms strictly decreasing in degrevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MPoly {
    pub terms: Vec<(Exps, BigInt)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(terms: Vec<(Exps, BigInt)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| cmp_drl(&b.0, &a.0));
        let mut merged: Vec<(Exps, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((pe, pc)) if *pe == e => *pc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        MPoly { terms: merged }
    }

    pub fn leading(&self) -> (&Exps, &BigInt) {
        let (e, c) = &self.terms[0];
        (e, c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| exp_deg(e)).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    pub fn nvars(&self) -> usize {
        self.terms.first().map_or(0, |(e, _)| e.len())
    }

    /// Merge `a·self − (c·x^δ)·g` in one pass; the workhorse of reduction
    /// and S-polynomial formation.
    pub fn lin_comb(&self, a: &BigInt, g: &MPoly, delta: &[u32], c: &BigInt) -> MPoly {
        let mut out: Vec<(Exps, BigInt)> = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let ge = exp_add(&g.terms[j].0, delta);
            match cmp_drl(&self.terms[i].0, &ge) {
                Ordering::Greater => {
                    out.push((self.terms[i].0.clone(), a * &self.terms[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((ge, -(c * &g.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = a * &self.terms[i].1 - c * &g.terms[j].1;
                    if !v.is_zero() {
                        out.push((ge, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push((self.terms[i].0.clone(), a * &self.terms[i].1));
            i += 1;
        }
        while j < g.terms.len() {
            out.push((exp_add(&g.terms[j].0, delta), -(c * &g.terms[j].1)));
            j += 1;
        }
        MPoly { terms: out }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut acc: Vec<(Exps, BigInt)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                acc.push((exp_add(e1, e2), c1 * c2));
            }
        }
        MPoly::from_terms(acc)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.lin_comb(&BigInt::from(1), other, &vec![0; self.nvars().max(other.nvars())], &BigInt::from(1))
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g == BigInt::from(1) {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn strip_content(&mut self) {
        let g = self.content();
        if g > BigInt::from(1) {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
        }
    }

    /// Primitive with positive leading coefficient.
    pub fn primitive_positive(mut self) -> MPoly {
        self.strip_content();
        if let Some((_, c)) = self.terms.first() {
            if c.is_negative() {
                for (_, c) in &mut self.terms {
                    *c = -c.clone();
                }
            }
        }
        self
    }

    /// Exact division by `d`; returns `None` when the division is not exact
    /// (used defensively by the subresultant tower where exactness is a
    /// theorem).
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot: Vec<(Exps, BigInt)> = Vec::new();
        let (dl, dc) = (d.terms[0].0.clone(), d.terms[0].1.clone());
        while !rem.is_zero() {
            let (le, lc) = rem.leading();
            if !exp_divides(&dl, le) {
                return None;
            }
            let (q, r) = lc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let delta = exp_sub(le, &dl);
            rem = rem.lin_comb(&BigInt::from(1), d, &delta, &q);
            quot.push((delta, q));
        }
        Some(MPoly::from_terms(quot))
    }

    /// Extends the exponent vectors to `n` variables (appending zeros).
    pub fn extend_vars(&self, n: usize) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(n, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

}

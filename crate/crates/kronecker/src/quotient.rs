//! The finite-dimensional quotient algebra behind a zero-dimensional ideal.
//!
//! From a reduced degrevlex Gröbner basis this derives the monomial
//! staircase (the basis of `Q[z]/I`), certifies zero-dimensionality, and
//! computes normal forms and multiplication matrices over the rationals —
//! exactly the data the FGLM change of order consumes.

use crate::mpoly::{cmp_drl, exp_divides, Exps, MPoly};
use num_traits::{One, Zero};
use polycore::Rat;
use std::collections::BTreeMap;

/// Column-major matrix over the rationals: `cols[j]` is the image of the
/// j-th staircase monomial.
pub(crate) type Mat = Vec<Vec<Rat>>;

pub(crate) fn mat_vec(m: &Mat, v: &[Rat]) -> Vec<Rat> {
    let dim = m.first().map_or(0, |c| c.len());
    let mut out = vec![Rat::zero(); dim];
    for (col, w) in m.iter().zip(v.iter()) {
        if w.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(col.iter()) {
            if !c.is_zero() {
                *o += c * w;
            }
        }
    }
    out
}

pub(crate) struct Quotient {
    pub nvars: usize,
    gb: Vec<MPoly>,
    lms: Vec<Exps>,
    /// Staircase monomials sorted in increasing degrevlex order.
    pub basis: Vec<Exps>,
    index: BTreeMap<Exps, usize>,
    memo: std::cell::RefCell<BTreeMap<Exps, Vec<Rat>>>,
}

/// Result of staircase construction: either the quotient data or the name
/// index of a variable with no pure-power leading monomial (the ideal is
/// then positive-dimensional).
pub(crate) enum QuotientResult {
    ZeroDim(Quotient),
    PositiveDim { unbounded_var: usize },
}

impl Quotient {
    pub fn build(gb: Vec<MPoly>, nvars: usize) -> QuotientResult {
        let lms: Vec<Exps> = gb.iter().map(|g| g.terms[0].0.clone()).collect();
        // Unit ideal: the variety is empty and the quotient is zero.
        if lms.iter().any(|lm| lm.iter().all(|&e| e == 0)) {
            return QuotientResult::ZeroDim(Quotient {
                nvars,
                gb,
                lms,
                basis: Vec::new(),
                index: BTreeMap::new(),
                memo: std::cell::RefCell::new(BTreeMap::new()),
            });
        }
        // Zero-dimensionality: every variable needs a pure-power leading
        // monomial bounding the staircase in its direction.
        let mut bound = vec![0u32; nvars];
        for v in 0..nvars {
            let b = lms
                .iter()
                .filter(|lm| lm[v] > 0 && lm.iter().enumerate().all(|(k, &e)| k == v || e == 0))
                .map(|lm| lm[v])
                .min();
            match b {
                Some(b) => bound[v] = b,
                None => return QuotientResult::PositiveDim { unbounded_var: v },
            }
        }
        // Breadth-first enumeration of the staircase under the bounds.
        let mut seen: BTreeMap<Exps, bool> = BTreeMap::new();
        let mut queue: Vec<Exps> = vec![vec![0; nvars]];
        let mut basis: Vec<Exps> = Vec::new();
        while let Some(m) = queue.pop() {
            if seen.contains_key(&m) {
                continue;
            }
            let reducible = lms.iter().any(|lm| exp_divides(lm, &m));
            seen.insert(m.clone(), true);
            if reducible {
                continue;
            }
            for v in 0..nvars {
                if m[v] < bound[v] {
                    let mut m2 = m.clone();
                    m2[v] += 1;
                    queue.push(m2);
                }
            }
            basis.push(m);
        }
        basis.sort_by(|a, b| cmp_drl(a, b));
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        QuotientResult::ZeroDim(Quotient {
            nvars,
            gb,
            lms,
            basis,
            index,
            memo: std::cell::RefCell::new(BTreeMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, mono: &Exps) -> Option<usize> {
        self.index.get(mono).copied()
    }

    /// Normal form of a monomial as a coordinate vector on the staircase.
    pub fn nf_mono(&self, mono: &Exps) -> Vec<Rat> {
        if let Some(&i) = self.index.get(mono) {
            let mut v = vec![Rat::zero(); self.dim()];
            v[i] = Rat::one();
            return v;
        }
        if let Some(v) = self.memo.borrow().get(mono) {
            return v.clone();
        }
        // mono = δ · lm(g): reduce once by g and recurse on strictly
        // degrevlex-smaller monomials δ·t for the tail terms t of g.
        let (gi, lm) = self
            .lms
            .iter()
            .enumerate()
            .find(|(_, lm)| exp_divides(lm, mono))
            .map(|(i, lm)| (i, lm.clone()))
            .expect("monomial outside staircase must be reducible");
        let g = &self.gb[gi];
        let delta: Exps = mono.iter().zip(lm.iter()).map(|(a, b)| a - b).collect();
        let lc = Rat::from(g.terms[0].1.clone());
        let mut out = vec![Rat::zero(); self.dim()];
        for (e, c) in g.terms.iter().skip(1) {
            let shifted: Exps = e.iter().zip(delta.iter()).map(|(a, b)| a + b).collect();
            let sub = self.nf_mono(&shifted);
            let scale = -Rat::from(c.clone()) / &lc;
            for (o, s) in out.iter_mut().zip(sub.iter()) {
                if !s.is_zero() {
                    *o += s * &scale;
                }
            }
        }
        self.memo.borrow_mut().insert(mono.clone(), out.clone());
        out
    }

    /// Normal form of a rational-coefficient term list.
    pub fn nf_terms(&self, terms: &[(Exps, Rat)]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let v = self.nf_mono(e);
            for (o, s) in out.iter_mut().zip(v.iter()) {
                if !s.is_zero() {
                    *o += s * c;
                }
            }
        }
        out
    }

    /// Multiplication matrix of the polynomial with the given terms.
    pub fn mult_matrix(&self, terms: &[(Exps, Rat)]) -> Mat {
        self.basis
            .iter()
            .map(|b| {
                let shifted: Vec<(Exps, Rat)> = terms
                    .iter()
                    .map(|(e, c)| {
                        (e.iter().zip(b.iter()).map(|(a, x)| a + x).collect(), c.clone())
                    })
                    .collect();
                self.nf_terms(&shifted)
            })
            .collect()
    }

    /// Multiplication matrix of a single variable.
    pub fn var_matrix(&self, var: usize) -> Mat {
        let mut e = vec![0u32; self.nvars];
        e[var] = 1;
        self.mult_matrix(&[(e, Rat::one())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{groebner_drl, Budget};
    use num_bigint::BigInt;

    fn p(nv: usize, terms: &[(&[u32], i64)]) -> MPoly {
        MPoly::from_terms(
            terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.to_vec();
                    e.resize(nv, 0);
                    (e, BigInt::from(*c))
                })
                .collect(),
        )
    }

    fn rat(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    #[test]
    fn conic_pair_has_four_dimensional_quotient() {
        let gens = vec![
            p(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -5)]),
            p(2, &[(&[1, 1], 1), (&[0, 0], -2)]),
        ];
        let gb = groebner_drl(gens, &mut Budget::new(1 << 30)).unwrap();
        match Quotient::build(gb, 2) {
            QuotientResult::ZeroDim(q) => assert_eq!(q.dim(), 4),
            QuotientResult::PositiveDim { .. } => panic!("zero-dimensional system"),
        }
    }

    #[test]
    fn positive_dimensional_ideal_is_detected() {
        let gens = vec![p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)])];
        let gb = groebner_drl(gens, &mut Budget::new(1 << 30)).unwrap();
        match Quotient::build(gb, 2) {
            QuotientResult::ZeroDim(_) => panic!("line is positive-dimensional"),
            QuotientResult::PositiveDim { .. } => {}
        }
    }

    #[test]
    fn multiplication_matrix_satisfies_the_defining_relation() {
        // I = (x^2 − 2): basis {1, x}, M_x swaps with the relation x·x = 2.
        let gens = vec![p(1, &[(&[2], 1), (&[0], -2)])];
        let gb = groebner_drl(gens, &mut Budget::new(1 << 30)).unwrap();
        let q = match Quotient::build(gb, 1) {
            QuotientResult::ZeroDim(q) => q,
            _ => unreachable!(),
        };
        assert_eq!(q.dim(), 2);
        let mx = q.var_matrix(0);
        // Columns: x·1 = x → (0,1); x·x = 2 → (2,0).
        assert_eq!(mx[0], vec![rat(0), rat(1)]);
        assert_eq!(mx[1], vec![rat(2), rat(0)]);
    }

    #[test]
    fn normal_form_respects_reduction() {
        // I = (y − x^2, x^3 − 1): y·x ≡ x^3 ≡ 1.
        let gens = vec![
            p(2, &[(&[0, 1], 1), (&[2, 0], -1)]),
            p(2, &[(&[3, 0], 1), (&[0, 0], -1)]),
        ];
        let gb = groebner_drl(gens, &mut Budget::new(1 << 30)).unwrap();
        let q = match Quotient::build(gb, 2) {
            QuotientResult::ZeroDim(q) => q,
            _ => unreachable!(),
        };
        assert_eq!(q.dim(), 3);
        let one = q.basis_index(&vec![0, 0]).unwrap();
        let nf = q.nf_mono(&vec![1, 1]);
        let mut expected = vec![Rat::zero(); 3];
        expected[one] = Rat::one();
        assert_eq!(nf, expected);
    }
}

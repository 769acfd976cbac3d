//! FGLM change of order: from the degrevlex quotient structure to the
//! reduced *lexicographic* Gröbner basis over `(z_0, …, z_{m-1}, u)` with
//! `z_0` strongest and the linear-form variable `u` weakest.
//!
//! `u` need not belong to the original polynomial ring: its multiplication
//! matrix is supplied directly (the matrix of the linear form), which is
//! equivalent to adjoining the definition `u − Σ λ_j z_j` to the ideal.
//! Monomials are enumerated in increasing lex order starting `1, u, u², …`,
//! so the first relation found is the eliminant of `u`.

use crate::mpoly::{cmp_lex, Exps};
use crate::quotient::{mat_vec, Mat, Quotient};
use num_traits::{One, Zero};
use polycore::Rat;
use std::collections::{BTreeMap, BTreeSet};

/// A lex Gröbner basis element: terms sorted in decreasing lex order, monic
/// leading coefficient, exponents over `m + 1` variables (`u` last).
pub(crate) type LexPoly = Vec<(Exps, Rat)>;

struct Echelon {
    /// (reduced vector, pivot index, expression over lex-basis monomials).
    rows: Vec<(Vec<Rat>, usize, Vec<Rat>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `w`; returns `Err(combo)` when dependent (`w = Σ combo·orig`)
    /// or stores the new row and returns `Ok(())`.
    fn insert(&mut self, w: Vec<Rat>, basis_len: usize) -> Result<(), Vec<Rat>> {
        let mut r = w;
        let mut acc = vec![Rat::zero(); basis_len];
        for (rv, pivot, rexpr) in &self.rows {
            let f = r[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(rv.iter()) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
            for (a, e) in acc.iter_mut().zip(rexpr.iter()) {
                if !e.is_zero() {
                    *a += e * &f;
                }
            }
        }
        let pivot = match r.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return Err(acc),
        };
        let inv = Rat::one() / r[pivot].clone();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        let mut expr = vec![Rat::zero(); basis_len + 1];
        expr[basis_len] = Rat::one();
        for (e, a) in expr.iter_mut().zip(acc.iter()) {
            *e -= a;
        }
        for e in expr.iter_mut() {
            *e *= &inv;
        }
        self.rows.push((r, pivot, expr));
        Ok(())
    }
}

/// Computes the reduced lex Gröbner basis of the ideal extended by the
/// linear-form variable.  `mats[v]` is the multiplication matrix of `z_v`
/// for `v < m`; `mats[m]` is the matrix of the linear form (`u`).
pub(crate) fn fglm_lex(quotient: &Quotient, mats: &[Mat]) -> Vec<LexPoly> {
    let m = quotient.nvars;
    debug_assert_eq!(mats.len(), m + 1);
    let dim = quotient.dim();

    let mut queue: BTreeSet<Exps> = BTreeSet::new();
    queue.insert(vec![0u32; m + 1]);
    let mut leading: Vec<Exps> = Vec::new();
    let mut lex_basis: Vec<(Exps, Vec<Rat>)> = Vec::new();
    let mut position: BTreeMap<Exps, usize> = BTreeMap::new();
    let mut echelon = Echelon::new();
    let mut out: Vec<LexPoly> = Vec::new();

    while let Some(mono) = queue.iter().next().cloned() {
        queue.remove(&mono);
        if leading
            .iter()
            .any(|lm| lm.iter().zip(mono.iter()).all(|(a, b)| a <= b))
        {
            continue;
        }
        let vec = if mono.iter().all(|&e| e == 0) {
            // The class of 1.
            let mut v = vec![Rat::zero(); dim];
            let idx = quotient
                .basis_index(&vec![0; m])
                .expect("unit monomial lies on the staircase");
            v[idx] = Rat::one();
            v
        } else {
            // Divide by the weakest variable present; the quotient monomial
            // is lex-smaller and was therefore processed earlier.
            let v = (0..=m).rev().find(|&v| mono[v] > 0).expect("nonconstant");
            let mut prev = mono.clone();
            prev[v] -= 1;
            let idx = position[&prev];
            mat_vec(&mats[v], &lex_basis[idx].1)
        };

        match echelon.insert(vec.clone(), lex_basis.len()) {
            Err(combo) => {
                // New lex Gröbner basis element μ − Σ combo_i·μ_i.
                let mut terms: LexPoly = vec![(mono.clone(), Rat::one())];
                for (i, c) in combo.iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((lex_basis[i].0.clone(), -c.clone()));
                    }
                }
                terms.sort_by(|a, b| cmp_lex(&b.0, &a.0));
                out.push(terms);
                leading.push(mono);
            }
            Ok(()) => {
                position.insert(mono.clone(), lex_basis.len());
                lex_basis.push((mono.clone(), vec));
                for v in 0..=m {
                    let mut child = mono.clone();
                    child[v] += 1;
                    queue.insert(child);
                }
            }
        }
    }
    debug_assert_eq!(lex_basis.len(), dim, "lex staircase must match the quotient dimension");
    out
}

/// Extracts the eliminant — the basis element in `u` alone — as monic
/// rational coefficients (ascending).  `None` signals that no such element
/// exists, which cannot happen for a zero-dimensional input.
pub(crate) fn eliminant(lex_gb: &[LexPoly], m: usize) -> Option<Vec<Rat>> {
    for poly in lex_gb {
        if poly[0].0[..m].iter().all(|&e| e == 0) {
            let deg = poly[0].0[m] as usize;
            let mut coeffs = vec![Rat::zero(); deg + 1];
            for (e, c) in poly {
                debug_assert!(e[..m].iter().all(|&x| x == 0));
                coeffs[e[m] as usize] = c.clone();
            }
            return Some(coeffs);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{groebner_drl, Budget};
    use crate::mpoly::MPoly;
    use crate::quotient::QuotientResult;
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

    fn quotient_of(gens: Vec<MPoly>, nv: usize) -> Quotient {
        let gb = groebner_drl(gens, &mut Budget::new(1 << 30)).unwrap();
        match Quotient::build(gb, nv) {
            QuotientResult::ZeroDim(q) => q,
            QuotientResult::PositiveDim { .. } => panic!("positive-dimensional"),
        }
    }

    #[test]
    fn eliminant_of_two_shifted_points_under_sum_form() {
        // I = ((x−1)(x−2), y − x) with u = x + y: u-values {2, 4},
        // eliminant u² − 6u + 8.
        let q = quotient_of(
            vec![
                p(2, &[(&[2, 0], 1), (&[1, 0], -3), (&[0, 0], 2)]),
                p(2, &[(&[0, 1], 1), (&[1, 0], -1)]),
            ],
            2,
        );
        let mx = q.var_matrix(0);
        let my = q.var_matrix(1);
        let mu: Mat = mx
            .iter()
            .zip(my.iter())
            .map(|(a, b)| a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            .collect();
        let gb = fglm_lex(&q, &[mx, my, mu]);
        let e = eliminant(&gb, 2).unwrap();
        assert_eq!(e, vec![rat(8), rat(-6), rat(1)]);
    }

    #[test]
    fn lex_basis_solves_the_variables_in_terms_of_u() {
        // Same ideal: the lex basis must contain y − (linear in u) and
        // x − (linear in u); with u = x + y = 2x we get x = u/2.
        let q = quotient_of(
            vec![
                p(2, &[(&[2, 0], 1), (&[1, 0], -3), (&[0, 0], 2)]),
                p(2, &[(&[0, 1], 1), (&[1, 0], -1)]),
            ],
            2,
        );
        let mx = q.var_matrix(0);
        let my = q.var_matrix(1);
        let mu: Mat = mx
            .iter()
            .zip(my.iter())
            .map(|(a, b)| a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            .collect();
        let gb = fglm_lex(&q, &[mx, my, mu]);
        // y − u/2 (leading monomial y): terms (y, 1), (u, −1/2).
        let y_poly = gb
            .iter()
            .find(|g| g[0].0 == vec![0, 1, 0])
            .expect("element with leading monomial y");
        assert_eq!(y_poly.len(), 2);
        assert_eq!(y_poly[1].0, vec![0, 0, 1]);
        assert_eq!(y_poly[1].1, Rat::new(BigInt::from(-1), BigInt::from(2)));
    }

    #[test]
    fn multiplicity_is_preserved_by_the_change_of_order() {
        // I = ((x−1)², y − x): eliminant under u = x+y is (u−2)².
        let q = quotient_of(
            vec![
                p(2, &[(&[2, 0], 1), (&[1, 0], -2), (&[0, 0], 1)]),
                p(2, &[(&[0, 1], 1), (&[1, 0], -1)]),
            ],
            2,
        );
        let mx = q.var_matrix(0);
        let my = q.var_matrix(1);
        let mu: Mat = mx
            .iter()
            .zip(my.iter())
            .map(|(a, b)| a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            .collect();
        let gb = fglm_lex(&q, &[mx, my, mu]);
        let e = eliminant(&gb, 2).unwrap();
        assert_eq!(e, vec![rat(4), rat(-4), rat(1)]);
    }
}

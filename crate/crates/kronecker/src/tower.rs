//! Resultant-tower elimination: the fallback route when the Gröbner basis
//! budget is exhausted and at most three variables remain.
//!
//! Variables are projected away one at a time with subresultant pseudo-
//! remainder sequences.  Every intermediate polynomial lies in the ideal
//! generated by its two parents, so the final univariates all vanish on the
//! projection of the variety; their gcd is a *multiple* of the true
//! eliminant.  Extraneous factors are harmless: the triangular solver prunes
//! inconsistent branches and the representation is verified against the
//! original system afterwards.

use crate::fglm::LexPoly;
use crate::gb::{Budget, BudgetExhausted};
use crate::mpoly::{Exps, MPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use polycore::{Rat, UPoly};

pub(crate) struct TowerOutput {
    /// Candidate eliminant in `u` (a multiple of the true one), primitive.
    pub eliminant: UPoly,
    /// Per-variable constraint sets in `(z_k, u)`, exponents over `m + 1`
    /// slots, each with positive degree in `z_k`.
    pub bivariate: Vec<Vec<LexPoly>>,
}

#[derive(Debug)]
pub(crate) enum TowerFailure {
    Budget(usize),
    /// Every elimination path degenerated to zero.
    Collapsed(String),
}

/// Coefficients of `f` viewed as a polynomial in variable `z`, ascending,
/// with the `z`-slot zeroed inside each coefficient.
fn as_univar(f: &MPoly, z: usize) -> Vec<MPoly> {
    let d = f.degree_in(z) as usize;
    let mut out: Vec<Vec<(Exps, BigInt)>> = vec![Vec::new(); d + 1];
    for (e, c) in &f.terms {
        let k = e[z] as usize;
        let mut e2 = e.clone();
        e2[z] = 0;
        out[k].push((e2, c.clone()));
    }
    out.into_iter().map(MPoly::from_terms).collect()
}

fn trim(mut a: Vec<MPoly>) -> Vec<MPoly> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn scale(a: &[MPoly], c: &MPoly, budget: &mut Budget) -> Result<Vec<MPoly>, BudgetExhausted> {
    let mut out = Vec::with_capacity(a.len());
    for x in a {
        budget.charge((x.terms.len() * c.terms.len()) as u64)?;
        out.push(x.mul(c));
    }
    Ok(out)
}

/// Pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a mod b`, coefficients in
/// the multivariate ring.
fn prem(a: &[MPoly], b: &[MPoly], budget: &mut Budget) -> Result<Vec<MPoly>, BudgetExhausted> {
    let db = b.len() - 1;
    let d = b.last().unwrap();
    let mut r = a.to_vec();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while r.len() > db {
        let s = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        r = scale(&r, d, budget)?;
        if !s.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                budget.charge((s.terms.len() * bi.terms.len()) as u64)?;
                r[i + shift] = r[i + shift].sub(&s.mul(bi));
            }
        }
        r.pop();
        r = trim(r);
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = scale(&r, d, budget)?;
    }
    Ok(r)
}

/// Last element of the subresultant sequence of `f` and `g` with respect to
/// `z`: a primitive polynomial free of `z` lying in `⟨f, g⟩`, or zero when
/// the two share a `z`-factor.
fn subres_last(
    f: &MPoly,
    g: &MPoly,
    z: usize,
    budget: &mut Budget,
) -> Result<MPoly, BudgetExhausted> {
    let mut a = trim(as_univar(f, z));
    let mut b = trim(as_univar(g, z));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() <= 1 {
        // Resultant against a z-free polynomial: a power of it, and the
        // ideal membership we need is the polynomial itself.
        return Ok(match b.into_iter().next() {
            Some(c) => c.primitive_positive(),
            None => MPoly::zero(),
        });
    }
    let one = MPoly::from_terms(vec![(vec![0; f.nvars()], BigInt::one())]);
    let mut gg = one.clone();
    let mut h = one;
    loop {
        let delta = a.len() - b.len();
        let r = prem(&a, &b, budget)?;
        if r.is_empty() {
            return Ok(MPoly::zero());
        }
        a = b;
        let mut divisor = gg.clone();
        for _ in 0..delta {
            budget.charge((divisor.terms.len() * h.terms.len()) as u64)?;
            divisor = divisor.mul(&h);
        }
        b = {
            let mut out = Vec::with_capacity(r.len());
            for c in &r {
                match c.div_exact(&divisor) {
                    Some(q) => out.push(q),
                    None => {
                        // The subresultant recurrence guarantees exactness;
                        // keep the undivided remainder if it ever fails —
                        // still an ideal member, merely larger.
                        debug_assert!(false, "inexact subresultant division");
                        out = r.clone();
                        break;
                    }
                }
            }
            trim(out)
        };
        gg = a.last().unwrap().clone();
        if delta > 0 {
            // h ← g^δ / h^(δ−1), exact by the subresultant theory.
            let mut num = gg.clone();
            for _ in 1..delta {
                budget.charge((num.terms.len() * gg.terms.len()) as u64)?;
                num = num.mul(&gg);
            }
            let mut den = MPoly::from_terms(vec![(vec![0; f.nvars()], BigInt::one())]);
            for _ in 1..delta {
                budget.charge((den.terms.len() * h.terms.len()) as u64)?;
                den = den.mul(&h);
            }
            h = num.div_exact(&den).unwrap_or(num);
        }
        if b.len() <= 1 {
            return Ok(match b.into_iter().next() {
                Some(c) => c.primitive_positive(),
                None => MPoly::zero(),
            });
        }
    }
}

/// Projects variable `z` out of `polys`: polynomials free of `z` pass
/// through; the rest are folded into pairwise subresultants against the
/// member of smallest `z`-degree.  A single `z`-positive polynomial imposes
/// no closure constraint and is dropped.
fn eliminate_var(
    polys: Vec<MPoly>,
    z: usize,
    budget: &mut Budget,
) -> Result<Vec<MPoly>, BudgetExhausted> {
    let (mut with, without): (Vec<_>, Vec<_>) =
        polys.into_iter().partition(|p| p.degree_in(z) > 0);
    let mut out = without;
    if with.len() >= 2 {
        with.sort_by_key(|p| p.degree_in(z));
        let pivot = with[0].clone();
        for q in &with[1..] {
            let r = subres_last(&pivot, q, z, budget)?;
            if !r.is_zero() {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Runs the full tower: `eqs` are the preprocessed equations over the `m`
/// remaining variables; `u_def` (over `m + 1` slots, `u` last) ties the
/// linear-form variable to them, `u − L̃ = 0`.  Produces the eliminant
/// candidate and the per-variable bivariate sets.
pub(crate) fn tower_eliminate(
    eqs: &[MPoly],
    u_def: &MPoly,
    m: usize,
    budget: &mut Budget,
) -> Result<TowerOutput, TowerFailure> {
    let mut base: Vec<MPoly> = eqs.iter().map(|p| p.extend_vars(m + 1)).collect();
    base.push(u_def.clone());

    let chain = |keep: Option<usize>, budget: &mut Budget| -> Result<Vec<MPoly>, BudgetExhausted> {
        let mut cur = base.clone();
        for z in 0..m {
            if Some(z) == keep {
                continue;
            }
            cur = eliminate_var(cur, z, budget)?;
        }
        Ok(cur)
    };

    // Eliminant: gcd of every surviving univariate in u.
    let finals = chain(None, budget).map_err(|_| TowerFailure::Budget(m))?;
    let mut elim = UPoly::zero();
    for p in &finals {
        let up = to_upoly_in_u(p, m);
        if !up.is_zero() {
            elim = elim.gcd(&up);
        }
    }
    if elim.is_zero() {
        return Err(TowerFailure::Collapsed(
            "every resultant chain vanished; the projection carries no constraint".into(),
        ));
    }

    let mut bivariate = Vec::with_capacity(m);
    for k in 0..m {
        let set = chain(Some(k), budget).map_err(|_| TowerFailure::Budget(m))?;
        let constraints: Vec<LexPoly> = set
            .iter()
            .filter(|p| p.degree_in(k) > 0)
            .map(|p| to_lex(p))
            .collect();
        bivariate.push(constraints);
    }
    Ok(TowerOutput { eliminant: elim.primitive_positive(), bivariate })
}

/// Converts a polynomial supported on `u` alone into a `UPoly`.
fn to_upoly_in_u(p: &MPoly, m: usize) -> UPoly {
    let mut coeffs = vec![BigInt::zero(); p.degree_in(m) as usize + 1];
    for (e, c) in &p.terms {
        debug_assert!(e[..m].iter().all(|&x| x == 0), "polynomial not univariate in u");
        coeffs[e[m] as usize] += c;
    }
    UPoly::new(coeffs)
}

fn to_lex(p: &MPoly) -> LexPoly {
    p.terms
        .iter()
        .map(|(e, c)| (e.clone(), Rat::from(c.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn subresultant_matches_the_classical_conic_resultant() {
        // Res_x(x² + y² − 5, xy − 2) = y⁴ − 5y² + 4 up to sign.
        let f = p(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -5)]);
        let g = p(2, &[(&[1, 1], 1), (&[0, 0], -2)]);
        let mut budget = Budget::new(1 << 30);
        let r = subres_last(&f, &g, 0, &mut budget).unwrap();
        let expect = p(2, &[(&[0, 4], 1), (&[0, 2], -5), (&[0, 0], 4)]);
        assert_eq!(r, expect);
    }

    #[test]
    fn shared_factor_yields_zero() {
        // f = (x − y)·x, g = (x − y)·(x + 1) share x − y.
        let f = p(2, &[(&[2, 0], 1), (&[1, 1], -1)]);
        let g = p(2, &[(&[2, 0], 1), (&[1, 1], -1), (&[1, 0], 1), (&[0, 1], -1)]);
        let mut budget = Budget::new(1 << 30);
        let r = subres_last(&f, &g, 0, &mut budget).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn tower_eliminant_covers_the_true_u_values() {
        // {x² + y² − 5, xy − 2} has points (±1, ±2), (±2, ±1); with
        // u = x + y the values are ±3, so (u−3)(u+3) divides the candidate.
        let eqs = vec![
            p(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -5)]),
            p(2, &[(&[1, 1], 1), (&[0, 0], -2)]),
        ];
        // u − x − y over (x, y, u).
        let u_def = p(3, &[(&[0, 0, 1], 1), (&[1, 0, 0], -1), (&[0, 1, 0], -1)]);
        let mut budget = Budget::new(1 << 30);
        let out = tower_eliminate(&eqs, &u_def, 2, &mut budget).unwrap();
        let elim = polycore::QPoly::from_upoly(&out.eliminant);
        for root in [3i64, -3] {
            let v = Rat::from(BigInt::from(root));
            assert!(elim.eval(&v).is_zero(), "u = {root} must be a root");
        }
        assert_eq!(out.bivariate.len(), 2);
        assert!(!out.bivariate[0].is_empty());
        assert!(!out.bivariate[1].is_empty());
    }
}

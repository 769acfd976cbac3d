//! Buchberger's algorithm in degrevlex with the sugar selection strategy
//! and the Gebauer–Möller pair-update criteria.
//!
//! All arithmetic is fraction-free over the integers: reductions form
//! `lc(g)·f − c·x^δ·g` and strip the content afterwards, so coefficients
//! stay as small as primitive polynomials allow.  A work budget guards
//! against runaway eliminations; exceeding it is reported to the caller,
//! which may fall back to the resultant tower for small systems.

use crate::mpoly::{cmp_drl, exp_add, exp_coprime, exp_deg, exp_divides, exp_lcm, exp_sub, Exps, MPoly};
use num_traits::Signed;
use std::cmp::Ordering;

pub(crate) struct Budget {
    remaining: u64,
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) struct BudgetExhausted;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { remaining: limit }
    }

    pub fn charge(&mut self, cost: u64) -> Result<(), BudgetExhausted> {
        if self.remaining < cost {
            self.remaining = 0;
            return Err(BudgetExhausted);
        }
        self.remaining -= cost;
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exps,
    sugar: u32,
}

impl Pair {
    fn key(&self) -> (u32, u32, &Exps, usize, usize) {
        (self.sugar, exp_deg(&self.lcm), &self.lcm, self.i, self.j)
    }
}

fn pair_cmp(a: &Pair, b: &Pair) -> Ordering {
    let (sa, da, la, ia, ja) = a.key();
    let (sb, db, lb, ib, jb) = b.key();
    sa.cmp(&sb)
        .then(da.cmp(&db))
        .then(cmp_drl(la, lb))
        .then(ia.cmp(&ib))
        .then(ja.cmp(&jb))
}

fn make_pair(i: usize, j: usize, lms: &[Exps], sugars: &[u32]) -> Pair {
    let lcm = exp_lcm(&lms[i], &lms[j]);
    let si = sugars[i] + exp_deg(&exp_sub(&lcm, &lms[i]));
    let sj = sugars[j] + exp_deg(&exp_sub(&lcm, &lms[j]));
    Pair { i, j, lcm, sugar: si.max(sj) }
}

/// Full normal form of `f` with respect to `basis`, fraction-free.
/// Returns the primitive remainder.
pub(crate) fn normal_form(
    f: MPoly,
    basis: &[MPoly],
    lms: &[Exps],
    budget: &mut Budget,
) -> Result<MPoly, BudgetExhausted> {
    let mut f = f;
    f.strip_content();
    let mut i = 0;
    'outer: while i < f.terms.len() {
        let (mono, coef) = (f.terms[i].0.clone(), f.terms[i].1.clone());
        for (g, lm) in basis.iter().zip(lms.iter()) {
            if exp_divides(lm, &mono) {
                budget.charge((f.terms.len() + g.terms.len()) as u64)?;
                let delta = exp_sub(&mono, lm);
                let lc = g.terms[0].1.clone();
                let (a, c) = if lc.is_negative() { (-lc, -coef) } else { (lc, coef) };
                f = f.lin_comb(&a, g, &delta, &c);
                f.strip_content();
                continue 'outer;
            }
        }
        i += 1;
    }
    Ok(f)
}

/// Gebauer–Möller update: install pairs of the new element `t` against the
/// existing basis, pruning by the lcm-divisibility and coprimality criteria,
/// and discard old pairs made redundant by the chain criterion.
fn update_pairs(pairs: &mut Vec<Pair>, lms: &[Exps], sugars: &[u32], alive: &[bool], t: usize) {
    let lt = &lms[t];

    // Candidate new pairs (i, t).
    let cand: Vec<Pair> = (0..t)
        .filter(|&i| alive[i])
        .map(|i| make_pair(i, t, lms, sugars))
        .collect();

    // Drop candidates whose lcm is a proper multiple of another candidate's
    // lcm; among equal lcms keep the first.
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].lcm == cand[a].lcm {
                if b > a {
                    keep[b] = false;
                }
            } else if exp_divides(&cand[b].lcm, &cand[a].lcm) {
                keep[a] = false;
                break;
            }
        }
    }
    // Buchberger's first criterion: coprime leading monomials reduce to zero.
    for (k, p) in cand.iter().enumerate() {
        if keep[k] && exp_coprime(&lms[p.i], lt) {
            keep[k] = false;
        }
    }

    // Chain criterion on the old pairs: (i, j) is redundant once lm(t)
    // strictly divides lcm(i, j) and both mixed lcms differ from it.
    pairs.retain(|p| {
        !(exp_divides(lt, &p.lcm)
            && exp_lcm(&lms[p.i], lt) != p.lcm
            && exp_lcm(&lms[p.j], lt) != p.lcm)
    });

    let mut kept: Vec<Pair> = cand
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();
    pairs.append(&mut kept);
}

/// Reduced Gröbner basis in degrevlex.  Elements are primitive with positive
/// leading coefficients, sorted by increasing leading monomial, and each is
/// fully reduced against the others.
pub(crate) fn groebner_drl(
    gens: Vec<MPoly>,
    budget: &mut Budget,
) -> Result<Vec<MPoly>, BudgetExhausted> {
    let mut basis: Vec<MPoly> = Vec::new();
    let mut lms: Vec<Exps> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let install = |p: MPoly,
                       sugar: u32,
                       basis: &mut Vec<MPoly>,
                       lms: &mut Vec<Exps>,
                       sugars: &mut Vec<u32>,
                       alive: &mut Vec<bool>,
                       pairs: &mut Vec<Pair>| {
        let p = p.primitive_positive();
        let lm = p.terms[0].0.clone();
        basis.push(p);
        lms.push(lm);
        sugars.push(sugar);
        alive.push(true);
        let t = basis.len() - 1;
        update_pairs(pairs, lms, sugars, alive, t);
        // Older elements whose leading monomial the new one divides stop
        // generating pairs (they stay available as reducers).
        for i in 0..t {
            if alive[i] && exp_divides(&lms[t], &lms[i]) {
                alive[i] = false;
            }
        }
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let sugar = g.total_degree();
        let g = normal_form(g, &basis, &lms, budget)?;
        if !g.is_zero() {
            install(g, sugar, &mut basis, &mut lms, &mut sugars, &mut alive, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| pair_cmp(a, b))
            .map(|(k, _)| k)
            .expect("nonempty");
        let pair = pairs.swap_remove(best);

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        budget.charge((fi.terms.len() + fj.terms.len()) as u64)?;
        // S-polynomial, fraction-free: lc(j)·x^{δi}·f_i − lc(i)·x^{δj}·f_j.
        let di = exp_sub(&pair.lcm, &lms[pair.i]);
        let dj = exp_sub(&pair.lcm, &lms[pair.j]);
        let shifted = MPoly {
            terms: fi
                .terms
                .iter()
                .map(|(e, c)| (exp_add(e, &di), c.clone()))
                .collect(),
        };
        let s = shifted.lin_comb(&fj.terms[0].1, fj, &dj, &fi.terms[0].1);
        let s = normal_form(s, &basis, &lms, budget)?;
        if !s.is_zero() {
            install(s, pair.sugar, &mut basis, &mut lms, &mut sugars, &mut alive, &mut pairs);
        }
    }

    // Minimalize: drop elements whose leading monomial another divides.
    let mut minimal: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        if (0..basis.len())
            .all(|j| j == i || !exp_divides(&lms[j], &lms[i]) || (lms[j] == lms[i] && j > i))
        {
            minimal.push(i);
        }
    }
    // Inter-reduce tails for the reduced basis.
    let mut reduced: Vec<MPoly> = Vec::new();
    for &i in &minimal {
        let others: Vec<MPoly> = minimal
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| basis[j].clone())
            .collect();
        let other_lms: Vec<Exps> = others.iter().map(|g| g.terms[0].0.clone()).collect();
        let nf = normal_form(basis[i].clone(), &others, &other_lms, budget)?;
        if !nf.is_zero() {
            reduced.push(nf.primitive_positive());
        }
    }
    reduced.sort_by(|a, b| cmp_drl(&a.terms[0].0, &b.terms[0].0));
    Ok(reduced)
}

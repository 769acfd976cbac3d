//! Back-substitution of a triangular (lex) system over `K = ℚ[u]/(P)`.
//!
//! `P` is square-free but usually not irreducible, so `K` is a product of
//! fields.  Arithmetic proceeds as if `K` were a field; whenever a zero
//! divisor blocks an inversion, the offending factor splits the modulus and
//! both branches are re-processed independently (dynamic evaluation).  At
//! the end the branches are recombined by the Chinese remainder theorem.
//!
//! Because the linear form is separating, the fiber of the variety over
//! each root of `P` is a single point, possibly of higher multiplicity: the
//! accumulated gcd in each variable must be a pure power `(z − v)^d`, and
//! `v` is read off the subleading coefficient.  A gcd that is not such a
//! power proves the form non-separating and aborts the attempt.

use crate::fglm::LexPoly;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;
use polycore::{QPoly, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TriangularError {
    /// Some fiber holds more than one point: retry with another form.
    NotSeparating,
    /// A branch admits no solution and pruning is disallowed.
    Inconsistent(String),
}

/// Polynomial in one variable `z` with coefficients in `K = ℚ[u]/(p)`,
/// ascending, trimmed, every coefficient reduced mod `p`.
type KPoly = Vec<QPoly>;

fn kp_trim(mut a: KPoly) -> KPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Scales `a` monic; `Err` carries a nontrivial monic factor of `p`.
fn kp_monic(a: &KPoly, p: &QPoly) -> Result<KPoly, QPoly> {
    let lc = a.last().expect("kp_monic on zero polynomial");
    if lc.degree() == Some(0) && lc.lc().is_one() {
        return Ok(a.clone());
    }
    let inv = lc.inverse_mod(p)?;
    Ok(a.iter().map(|c| c.mul_mod(&inv, p)).collect())
}

/// Remainder of `a` by monic `d` over `K`.
fn kp_rem(a: &KPoly, d: &KPoly, p: &QPoly) -> KPoly {
    let mut r = a.clone();
    let dd = d.len() - 1;
    while r.len() > dd {
        let c = r.last().unwrap().clone();
        let shift = r.len() - 1 - dd;
        if !c.is_zero() {
            for (i, di) in d.iter().enumerate() {
                r[i + shift] = r[i + shift].sub(&c.mul_mod(di, p)).rem(p);
            }
        }
        r.pop();
        r = kp_trim(r);
    }
    r
}

/// Monic gcd over `K`; inputs nonzero.
fn kp_gcd(a: &KPoly, b: &KPoly, p: &QPoly) -> Result<KPoly, QPoly> {
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if b.is_empty() {
            return kp_monic(&a, p);
        }
        let bm = kp_monic(&b, p)?;
        let r = kp_rem(&a, &bm, p);
        a = bm;
        b = r;
    }
}

/// Substitutes already-solved variables (indices above `k`) and `u` into an
/// equation, leaving a polynomial in `z_k` over `K`.  Exponent vectors run
/// over `m + 1` slots with `u` last.
fn substitute(eq: &LexPoly, k: usize, vals: &[Option<QPoly>], p: &QPoly, m: usize) -> KPoly {
    let mut out: Vec<QPoly> = Vec::new();
    for (e, c) in eq {
        debug_assert!(e[..k].iter().all(|&x| x == 0), "equation touches an unsolved variable");
        let mut term = QPoly::constant(c.clone()).rem(p);
        if e[m] > 0 {
            term = term.mul_mod(&QPoly::var().pow_mod(e[m] as u64, p), p);
        }
        for j in (k + 1)..m {
            if e[j] > 0 {
                let vj = vals[j].as_ref().expect("later variable already solved");
                term = term.mul_mod(&vj.pow_mod(e[j] as u64, p), p);
            }
        }
        let d = e[k] as usize;
        if out.len() <= d {
            out.resize(d + 1, QPoly::zero());
        }
        out[d] = out[d].add(&term);
    }
    kp_trim(out)
}

/// Reads the single root off a monic `g = (z − v)^d` and verifies the shape
/// coefficient by coefficient.
fn extract_root(g: &KPoly, p: &QPoly) -> Result<QPoly, TriangularError> {
    let d = g.len() - 1;
    let v = g[d - 1].mul_scalar(&-Rat::new(BigInt::from(1), BigInt::from(d as i64)));
    let mut pw = QPoly::one(); // (−v)^j
    let neg_v = v.neg();
    for j in 0..=d {
        let expect = pw.mul_scalar(&Rat::from(binomial(BigInt::from(d), BigInt::from(j))));
        if g[d - j].sub(&expect).rem(p).is_zero() {
            if j < d {
                pw = pw.mul_mod(&neg_v, p);
            }
        } else {
            return Err(TriangularError::NotSeparating);
        }
    }
    Ok(v)
}

enum VarOutcome {
    Solved(QPoly),
    Split(QPoly),
    Empty,
    NotSeparating,
}

fn solve_var(p: &QPoly, vals: &[Option<QPoly>], k: usize, eqs: &[LexPoly], m: usize) -> VarOutcome {
    let mut acc: Option<KPoly> = None;
    for eq in eqs {
        let kp = substitute(eq, k, vals, p, m);
        if kp.is_empty() {
            continue;
        }
        let next = match &acc {
            None => kp_monic(&kp, p),
            Some(a) => kp_gcd(a, &kp, p),
        };
        match next {
            Ok(g) => {
                if g.len() == 1 {
                    return VarOutcome::Empty;
                }
                acc = Some(g);
            }
            Err(f) => return VarOutcome::Split(f),
        }
    }
    match acc {
        None => VarOutcome::Empty,
        Some(g) => match extract_root(&g, p) {
            Ok(v) => VarOutcome::Solved(v),
            Err(_) => VarOutcome::NotSeparating,
        },
    }
}

struct Branch {
    p: QPoly,
    vals: Vec<Option<QPoly>>,
    /// Number of still-unsolved leading variables; `z_remaining..z_{m-1}`
    /// are already solved.
    remaining: usize,
}

/// Solves every variable over each branch of `ℚ[u]/(p0)` and recombines.
///
/// `eqs[k]` lists the equations usable to pin `z_k`: support contained in
/// `{z_k, …, z_{m-1}, u}` with positive degree in `z_k`.  With
/// `prune_empty` set, branches admitting no solution are silently dropped
/// (the modulus came from resultants and may carry extraneous factors);
/// otherwise they are an error.  Returns the product of the surviving
/// moduli and one value per variable modulo that product.
pub(crate) fn solve_triangular(
    p0: &QPoly,
    eqs: &[Vec<LexPoly>],
    m: usize,
    prune_empty: bool,
) -> Result<(QPoly, Vec<QPoly>), TriangularError> {
    let p0 = p0.monic();
    if m == 0 {
        return Ok((p0, Vec::new()));
    }
    let mut work = vec![Branch { p: p0, vals: vec![None; m], remaining: m }];
    let mut done: Vec<(QPoly, Vec<QPoly>)> = Vec::new();
    while let Some(mut br) = work.pop() {
        if br.remaining == 0 {
            let vals = br.vals.into_iter().map(|v| v.unwrap()).collect();
            done.push((br.p, vals));
            continue;
        }
        let k = br.remaining - 1;
        match solve_var(&br.p, &br.vals, k, &eqs[k], m) {
            VarOutcome::Solved(v) => {
                br.vals[k] = Some(v);
                br.remaining = k;
                work.push(br);
            }
            VarOutcome::Split(f) => {
                let (cof, rem) = br.p.div_rem(&f);
                debug_assert!(rem.is_zero(), "split factor must divide the modulus");
                for part in [f, cof.monic()] {
                    let vals = br
                        .vals
                        .iter()
                        .map(|o| o.as_ref().map(|v| v.rem(&part)))
                        .collect();
                    work.push(Branch { p: part, vals, remaining: br.remaining });
                }
            }
            VarOutcome::Empty => {
                if !prune_empty {
                    return Err(TriangularError::Inconsistent(format!(
                        "no solution for variable index {k} over a branch"
                    )));
                }
            }
            VarOutcome::NotSeparating => return Err(TriangularError::NotSeparating),
        }
    }
    let mut iter = done.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| TriangularError::Inconsistent("all branches pruned".into()))?;
    iter.try_fold(first, |a, b| crt_pair(a, b))
}

/// Combines two coprime branches: `v ≡ v_a (p_a)`, `v ≡ v_b (p_b)`.
fn crt_pair(
    a: (QPoly, Vec<QPoly>),
    b: (QPoly, Vec<QPoly>),
) -> Result<(QPoly, Vec<QPoly>), TriangularError> {
    let inv = a.0.inverse_mod(&b.0).map_err(|_| {
        TriangularError::Inconsistent("branch moduli are not coprime".into())
    })?;
    let prod = a.0.mul(&b.0);
    let vals = a
        .1
        .iter()
        .zip(b.1.iter())
        .map(|(va, vb)| {
            let t = vb.sub(va).mul_mod(&inv, &b.0);
            va.add(&a.0.mul(&t)).rem(&prod)
        })
        .collect();
    Ok((prod, vals))
}

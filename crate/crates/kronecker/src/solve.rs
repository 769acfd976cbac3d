//! The solving pipeline: polynomial system → verified Kronecker
//! representation.
//!
//! 1. Variables appearing linearly with a constant coefficient are
//!    eliminated by substitution (critical-point systems are full of
//!    `z_j ∂H/∂z_j − λ` equations that collapse this way).
//! 2. The remaining equations get one degrevlex Gröbner basis — computed
//!    once, since it does not depend on the linear form — and the quotient
//!    staircase decides zero-dimensionality.
//! 3. Per linear-form attempt: FGLM changes order to lex with the form
//!    variable `u` adjoined weakest, giving the eliminant and a triangular
//!    basis; dynamic-evaluation back-substitution produces each coordinate
//!    as a polynomial in `u`; numerators are rebuilt against `P′` and must
//!    come out integral.
//! 4. Every candidate representation is verified against the literal input
//!    system; any failure (non-separating form, non-integral numerator)
//!    moves to the next deterministic form attempt.
//!
//! When the Gröbner budget runs out with at most three variables left, a
//! subresultant tower supplies the eliminant and bivariate constraints
//! instead; extraneous resultant factors are pruned during
//! back-substitution and by the final verification.

use crate::fglm::{eliminant, fglm_lex, LexPoly};
use crate::gb::{groebner_drl, Budget};
use crate::mpoly::{Exps, MPoly};
use crate::quotient::{Mat, Quotient, QuotientResult};
use crate::rep::KroneckerRep;
use crate::tower::{tower_eliminate, TowerFailure};
use crate::triangular::{solve_triangular, TriangularError};
use crate::KroneckerError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use polycore::{LaurentPoly, QPoly, Rat, UPoly};
use systems::{PolySystem, Provenance};

const MAX_ATTEMPTS: usize = 5;
/// Term-operation allowance for the degrevlex Gröbner basis.
const GB_BUDGET: u64 = 2_000_000_000;
/// Term-operation allowance for the resultant tower fallback.
const TOWER_BUDGET: u64 = 2_000_000_000;

/// Solves with the default deterministic form sequence.
pub fn solve(system: &PolySystem) -> Result<KroneckerRep, KroneckerError> {
    solve_seeded(system, 0)
}

/// Solves with the random form attempts keyed to `seed` (attempts 0 and 1
/// are the fixed all-ones and 1,2,3,… forms regardless of seed).
pub fn solve_seeded(system: &PolySystem, seed: u64) -> Result<KroneckerRep, KroneckerError> {
    let prep = prepare(system)?;
    let engine = build_engine(&prep)?;
    let mut last = String::new();
    for attempt in 0..MAX_ATTEMPTS {
        let form = make_form(&prep, attempt, seed);
        match run_attempt(&prep, &engine, &form) {
            Ok(rep) => return Ok(rep),
            Err(AttemptError::Fatal(e)) => return Err(e),
            Err(AttemptError::Retry(reason)) => last = reason,
        }
    }
    Err(KroneckerError::SeparationFailed { attempts: MAX_ATTEMPTS, last })
}

/// Single attempt with a caller-chosen linear form (one coefficient per
/// system variable).  Multiplier coefficients are the caller's business.
pub fn solve_with_form(
    system: &PolySystem,
    form: &[i64],
) -> Result<KroneckerRep, KroneckerError> {
    let prep = prepare(system)?;
    if form.len() != prep.names.len() {
        return Err(KroneckerError::BadSystem(format!(
            "form has {} coefficients for {} variables",
            form.len(),
            prep.names.len()
        )));
    }
    let engine = build_engine(&prep)?;
    match run_attempt(&prep, &engine, form) {
        Ok(rep) => Ok(rep),
        Err(AttemptError::Fatal(e)) => Err(e),
        Err(AttemptError::Retry(last)) => {
            Err(KroneckerError::SeparationFailed { attempts: 1, last })
        }
    }
}

enum AttemptError {
    /// This linear form did not work out; the next may.
    Retry(String),
    Fatal(KroneckerError),
}

struct Prepared<'a> {
    system: &'a PolySystem,
    names: Vec<String>,
    label: String,
    multipliers: Vec<usize>,
    /// Original indices of the variables the Gröbner engine still sees.
    remaining: Vec<usize>,
    /// Original index of each remaining variable's slot, inverse of the above.
    slot_of: Vec<Option<usize>>,
    /// Substituted-out variables with their expressions over the remaining
    /// ones (kept over the full variable list for alignment).
    eliminated: Vec<(usize, LaurentPoly)>,
    /// Remaining equations over the remaining slots, integer and primitive.
    eqs: Vec<MPoly>,
    /// A nonzero-constant equation appeared: the system has no solutions.
    empty: bool,
    max_degree: u32,
}

/// Repeatedly substitutes out variables that occur linearly with a constant
/// coefficient, then converts what is left to integer multivariate
/// polynomials over the surviving variables.
fn prepare(system: &PolySystem) -> Result<Prepared<'_>, KroneckerError> {
    let names = system.variables().to_vec();
    let n = names.len();
    if n == 0 {
        return Err(KroneckerError::BadSystem("the system has no variables".into()));
    }
    if system.equations().is_empty() {
        return Err(KroneckerError::PositiveDimensional(
            "the system has no equations".into(),
        ));
    }
    let max_degree = system
        .equations()
        .iter()
        .filter_map(|e| e.total_degree())
        .max()
        .unwrap_or(1)
        .max(1) as u32;

    let mut eqs: Vec<LaurentPoly> = system.equations().to_vec();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut eliminated: Vec<(usize, LaurentPoly)> = Vec::new();
    let mut empty = false;

    loop {
        eqs.retain(|e| !e.is_zero());
        if eqs.iter().any(|e| e.is_constant()) {
            empty = true;
            eqs.clear();
            break;
        }
        let mut found: Option<(usize, usize, LaurentPoly)> = None;
        'scan: for (ei, eq) in eqs.iter().enumerate() {
            for (ri, &v) in remaining.iter().enumerate() {
                let groups = eq.coeffs_in(&names[v]);
                if groups.iter().any(|(k, _)| *k != 0 && *k != 1) {
                    continue;
                }
                let Some((_, c)) = groups.iter().find(|(k, _)| *k == 1) else {
                    continue;
                };
                if !c.is_constant() {
                    continue;
                }
                let rest = groups
                    .iter()
                    .find(|(k, _)| *k == 0)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| eq.scale(&Rat::zero()));
                let expr = rest.scale(&(-c.constant_term().recip()));
                found = Some((ei, ri, expr));
                break 'scan;
            }
        }
        let Some((ei, ri, expr)) = found else { break };
        let v = remaining[ri];
        eqs.remove(ei);
        for e in eqs.iter_mut() {
            *e = e.substitute_poly(&names[v], &expr);
        }
        for (_, prev) in eliminated.iter_mut() {
            *prev = prev.substitute_poly(&names[v], &expr);
        }
        eliminated.push((v, expr));
        remaining.remove(ri);
    }

    let mut slot_of = vec![None; n];
    for (slot, &v) in remaining.iter().enumerate() {
        slot_of[v] = Some(slot);
    }
    let m = remaining.len();
    let eqs_m: Vec<MPoly> = eqs
        .iter()
        .map(|e| {
            let (_, prim) = e.integer_primitive();
            MPoly::from_terms(
                project_terms(&prim, &slot_of, m)
                    .into_iter()
                    .map(|(exps, c)| {
                        debug_assert!(c.denom().is_one());
                        (exps, c.numer().clone())
                    })
                    .collect(),
            )
        })
        .collect();

    Ok(Prepared {
        system,
        names,
        label: system.provenance().label(),
        multipliers: multiplier_indices(system.provenance(), n),
        remaining,
        slot_of,
        eliminated,
        eqs: eqs_m,
        empty,
        max_degree,
    })
}

/// Re-indexes a polynomial over the full variable list onto the remaining
/// slots.  Panics if a term touches an eliminated variable (they are fully
/// substituted out by construction).
fn project_terms(poly: &LaurentPoly, slot_of: &[Option<usize>], m: usize) -> Vec<(Exps, Rat)> {
    poly.terms()
        .map(|(exps, c)| {
            let mut e = vec![0u32; m];
            for (j, &k) in exps.iter().enumerate() {
                if k != 0 {
                    let slot = slot_of[j].expect("term touches an eliminated variable");
                    debug_assert!(k > 0, "system equations are polynomials");
                    e[slot] = k as u32;
                }
            }
            (e, c.clone())
        })
        .collect()
}

/// Which variables are Lagrange-type multipliers whose linear-form
/// coefficient is pinned to zero (so downstream sign tests on `Q_λ` remain
/// meaningful, and so homogeneous-in-λ structure cannot break separation).
/// The scaling variable `t` and the rotation multiplier `ν` keep theirs.
fn multiplier_indices(provenance: &Provenance, n: usize) -> Vec<usize> {
    match provenance {
        Provenance::Smooth => vec![n - 1],
        Provenance::Extended => vec![n - 2],
        Provenance::Stratum(_) => Vec::new(),
        Provenance::GeneralReal => {
            let q = (n - 3) / 4;
            vec![4 * q, 4 * q + 1]
        }
        Provenance::GeneralRealCritical => {
            let q = (n - 4) / 4;
            vec![4 * q, 4 * q + 1]
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Attempt 0: all ones.  Attempt 1: 1, 2, 3, …  Later attempts: seeded
/// nonzero integers in `[−B, B]`, `B = max(8, #vars · max_degree²)`.
/// Multiplier coefficients stay zero throughout.
fn make_form(prep: &Prepared, attempt: usize, seed: u64) -> Vec<i64> {
    let n = prep.names.len();
    let free: Vec<usize> = (0..n).filter(|j| !prep.multipliers.contains(j)).collect();
    let mut form = vec![0i64; n];
    match attempt {
        0 => {
            for &j in &free {
                form[j] = 1;
            }
        }
        1 => {
            for (i, &j) in free.iter().enumerate() {
                form[j] = (i + 1) as i64;
            }
        }
        _ => {
            let bound = ((free.len() as u64) * u64::from(prep.max_degree).pow(2)).max(8);
            let mut state = seed ^ (attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            for &j in &free {
                let r = splitmix64(&mut state);
                let v = (r % (2 * bound)) as i64 - bound as i64;
                form[j] = if v == 0 { bound as i64 } else { v };
            }
        }
    }
    form
}

enum Engine {
    /// No solutions (constant contradiction or empty staircase).
    Empty,
    /// Every variable was eliminated linearly: one rational point.
    Point,
    /// Zero-dimensional quotient with precomputed variable matrices.
    Quotient { quotient: Quotient, mats: Vec<Mat> },
    /// Gröbner budget exhausted with few enough variables to run resultants.
    Tower,
}

fn build_engine(prep: &Prepared) -> Result<Engine, KroneckerError> {
    if prep.empty {
        return Ok(Engine::Empty);
    }
    let m = prep.remaining.len();
    if m == 0 {
        return Ok(Engine::Point);
    }
    if prep.eqs.is_empty() {
        return Err(KroneckerError::PositiveDimensional(format!(
            "variable `{}` is unconstrained after substitution",
            prep.names[prep.remaining[0]]
        )));
    }
    let mut budget = Budget::new(GB_BUDGET);
    match groebner_drl(prep.eqs.clone(), &mut budget) {
        Ok(gb) => match Quotient::build(gb, m) {
            QuotientResult::ZeroDim(quotient) => {
                if quotient.dim() == 0 {
                    Ok(Engine::Empty)
                } else {
                    let mats = (0..m).map(|v| quotient.var_matrix(v)).collect();
                    Ok(Engine::Quotient { quotient, mats })
                }
            }
            QuotientResult::PositiveDim { unbounded_var } => {
                Err(KroneckerError::PositiveDimensional(format!(
                    "no leading pure power of `{}`: the solution set is infinite",
                    prep.names[prep.remaining[unbounded_var]]
                )))
            }
        },
        Err(_) if m <= 3 => Ok(Engine::Tower),
        Err(_) => Err(KroneckerError::EliminationBudget(m)),
    }
}

fn run_attempt(
    prep: &Prepared,
    engine: &Engine,
    form: &[i64],
) -> Result<KroneckerRep, AttemptError> {
    match engine {
        Engine::Empty => {
            let rep = KroneckerRep {
                variables: prep.names.clone(),
                form: form.to_vec(),
                p: UPoly::new(vec![BigInt::one()]),
                q: vec![UPoly::zero(); prep.names.len()],
                provenance: prep.label.clone(),
            };
            rep.check_invariants().map_err(AttemptError::Fatal)?;
            Ok(rep)
        }
        Engine::Point => point_attempt(prep, form),
        Engine::Quotient { quotient, mats } => quotient_attempt(prep, quotient, mats, form),
        Engine::Tower => tower_attempt(prep, form),
    }
}

/// All variables were eliminated linearly: the single solution is rational.
fn point_attempt(prep: &Prepared, form: &[i64]) -> Result<KroneckerRep, AttemptError> {
    let n = prep.names.len();
    let mut values = vec![Rat::zero(); n];
    for (v, expr) in &prep.eliminated {
        debug_assert!(expr.is_constant(), "point solutions have constant expressions");
        values[*v] = expr.constant_term();
    }
    let mut u_val = Rat::zero();
    for (j, &lam) in form.iter().enumerate() {
        if lam != 0 {
            u_val += &values[j] * Rat::from(BigInt::from(lam));
        }
    }
    // P = primitive(denom·u − numer); P′ then absorbs the denominators.
    let p = UPoly::new(vec![-u_val.numer().clone(), u_val.denom().clone()])
        .primitive_positive();
    let dp = p.derivative().coeff(0);
    let mut q = Vec::with_capacity(n);
    for (j, val) in values.iter().enumerate() {
        let scaled = val * Rat::from(dp.clone());
        if !scaled.denom().is_one() {
            return Err(AttemptError::Retry(format!(
                "coordinate `{}` does not clear against P′",
                prep.names[j]
            )));
        }
        q.push(UPoly::new(vec![scaled.numer().clone()]));
    }
    finish(prep, form, p, q)
}

/// Terms of the effective linear form `L̃ = Σ λ_j z_j` over the remaining
/// slots, with eliminated variables replaced by their expressions.
fn form_terms(prep: &Prepared, form: &[i64]) -> Vec<(Exps, Rat)> {
    let m = prep.remaining.len();
    let mut terms: Vec<(Exps, Rat)> = Vec::new();
    for (slot, &orig) in prep.remaining.iter().enumerate() {
        if form[orig] != 0 {
            let mut e = vec![0u32; m];
            e[slot] = 1;
            terms.push((e, Rat::from(BigInt::from(form[orig]))));
        }
    }
    for (v, expr) in &prep.eliminated {
        if form[*v] != 0 {
            let lam = Rat::from(BigInt::from(form[*v]));
            for (e, c) in project_terms(expr, &prep.slot_of, m) {
                terms.push((e, c * &lam));
            }
        }
    }
    terms
}

fn quotient_attempt(
    prep: &Prepared,
    quotient: &Quotient,
    mats: &[Mat],
    form: &[i64],
) -> Result<KroneckerRep, AttemptError> {
    let m = prep.remaining.len();
    let mu = quotient.mult_matrix(&form_terms(prep, form));
    let mut all_mats = mats.to_vec();
    all_mats.push(mu);
    let lex_gb = fglm_lex(quotient, &all_mats);
    let p_bar = QPoly::new(
        eliminant(&lex_gb, m).expect("a zero-dimensional ideal always has an eliminant"),
    );
    debug_assert!(
        p_bar.degree().unwrap_or(0) <= bezout_bound(&prep.eqs, m),
        "eliminant degree exceeds the Bézout bound"
    );
    let (p_int, _) = p_bar.to_upoly_primitive();
    let p_sf = p_int.square_free_part().primitive_positive();
    let p0 = QPoly::from_upoly(&p_sf).monic();

    let eqs_k: Vec<Vec<LexPoly>> = (0..m)
        .map(|k| {
            lex_gb
                .iter()
                .filter(|g| {
                    g[0].0[k] >= 1 && g.iter().all(|(e, _)| e[..k].iter().all(|&x| x == 0))
                })
                .cloned()
                .collect()
        })
        .collect();

    let (p_mod, vals) = solve_triangular(&p0, &eqs_k, m, false).map_err(|e| match e {
        TriangularError::NotSeparating => {
            AttemptError::Retry("a fiber of the linear form holds several solutions".into())
        }
        TriangularError::Inconsistent(msg) => AttemptError::Retry(msg),
    })?;
    debug_assert_eq!(p_mod, p0, "branch moduli must multiply back to P");
    assemble(prep, form, p_sf, &vals)
}

fn tower_attempt(prep: &Prepared, form: &[i64]) -> Result<KroneckerRep, AttemptError> {
    let m = prep.remaining.len();
    // u·d − d·L̃ with d clearing the denominators of L̃.
    let terms = form_terms(prep, form);
    let mut den = BigInt::one();
    for (_, c) in &terms {
        den = den.lcm(c.denom());
    }
    let mut u_def = vec![(
        {
            let mut e = vec![0u32; m + 1];
            e[m] = 1;
            e
        },
        den.clone(),
    )];
    for (e, c) in &terms {
        let mut e2 = e.clone();
        e2.push(0);
        let scaled = c * Rat::from(den.clone());
        debug_assert!(scaled.denom().is_one());
        u_def.push((e2, -scaled.numer().clone()));
    }
    let u_def = MPoly::from_terms(u_def);

    let mut budget = Budget::new(TOWER_BUDGET);
    let out = tower_eliminate(&prep.eqs, &u_def, m, &mut budget).map_err(|e| match e {
        TowerFailure::Budget(v) => AttemptError::Fatal(KroneckerError::EliminationBudget(v)),
        TowerFailure::Collapsed(msg) => {
            AttemptError::Fatal(KroneckerError::PositiveDimensional(msg))
        }
    })?;
    let p_candidate = out.eliminant.square_free_part().primitive_positive();
    if p_candidate.degree() == Some(0) {
        // The projection is constant-free: no solutions at all.
        let rep = KroneckerRep {
            variables: prep.names.clone(),
            form: form.to_vec(),
            p: UPoly::new(vec![BigInt::one()]),
            q: vec![UPoly::zero(); prep.names.len()],
            provenance: prep.label.clone(),
        };
        rep.check_invariants().map_err(AttemptError::Fatal)?;
        return Ok(rep);
    }
    let p0 = QPoly::from_upoly(&p_candidate).monic();
    let (p_mod, vals) = solve_triangular(&p0, &out.bivariate, m, true).map_err(|e| match e {
        TriangularError::NotSeparating => {
            AttemptError::Retry("a fiber of the linear form holds several solutions".into())
        }
        TriangularError::Inconsistent(msg) => AttemptError::Retry(msg),
    })?;
    let (p_true, _) = p_mod.to_upoly_primitive();
    assemble(prep, form, p_true.primitive_positive(), &vals)
}

/// Shared tail: evaluate eliminated variables, check separation, rebuild
/// integer numerators, verify against the input system.
fn assemble(
    prep: &Prepared,
    form: &[i64],
    p_sf: UPoly,
    vals: &[QPoly],
) -> Result<KroneckerRep, AttemptError> {
    let n = prep.names.len();
    let m = prep.remaining.len();
    let p0 = QPoly::from_upoly(&p_sf).monic();

    let mut full: Vec<Option<QPoly>> = vec![None; n];
    for (slot, &orig) in prep.remaining.iter().enumerate() {
        full[orig] = Some(vals[slot].rem(&p0));
    }
    for (v, expr) in &prep.eliminated {
        let mut acc = QPoly::zero();
        for (e, c) in project_terms(expr, &prep.slot_of, m) {
            let mut term = QPoly::constant(c).rem(&p0);
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul_mod(&vals[j].pow_mod(u64::from(k), &p0), &p0);
                }
            }
            acc = acc.add(&term);
        }
        full[*v] = Some(acc.rem(&p0));
    }
    let full: Vec<QPoly> = full
        .into_iter()
        .map(|v| v.expect("every variable is either remaining or eliminated"))
        .collect();

    // Σ λ_j z_j must reproduce u exactly on the solutions.
    let mut sep = QPoly::zero();
    for (j, &lam) in form.iter().enumerate() {
        if lam != 0 {
            sep = sep.add(&full[j].mul_scalar(&Rat::from(BigInt::from(lam))));
        }
    }
    if !sep.sub(&QPoly::var()).rem(&p0).is_zero() {
        return Err(AttemptError::Retry(
            "the linear form does not evaluate back to u".into(),
        ));
    }

    let dp = QPoly::from_upoly(&p_sf.derivative());
    let mut q = Vec::with_capacity(n);
    for (j, val) in full.iter().enumerate() {
        let scaled = val.mul_mod(&dp, &p0);
        match integral(&scaled) {
            Some(qj) => q.push(qj),
            None => {
                return Err(AttemptError::Retry(format!(
                    "numerator for `{}` is not integral",
                    prep.names[j]
                )))
            }
        }
    }
    finish(prep, form, p_sf, q)
}

fn finish(
    prep: &Prepared,
    form: &[i64],
    p: UPoly,
    q: Vec<UPoly>,
) -> Result<KroneckerRep, AttemptError> {
    let rep = KroneckerRep {
        variables: prep.names.clone(),
        form: form.to_vec(),
        p,
        q,
        provenance: prep.label.clone(),
    };
    rep.check_invariants().map_err(AttemptError::Fatal)?;
    match rep.verify_system(prep.system) {
        Ok(true) => Ok(rep),
        Ok(false) => Err(AttemptError::Retry(
            "candidate representation fails an input equation".into(),
        )),
        Err(e) => Err(AttemptError::Fatal(e)),
    }
}

fn integral(p: &QPoly) -> Option<UPoly> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if !c.denom().is_one() {
            return None;
        }
        coeffs.push(c.numer().clone());
    }
    Some(UPoly::new(coeffs))
}

/// Product of the `m` largest equation total degrees — the weakest square-
/// subsystem Bézout bound, used as a sanity ceiling on `deg P`.
fn bezout_bound(eqs: &[MPoly], m: usize) -> usize {
    let mut degs: Vec<u64> = eqs.iter().map(|e| u64::from(e.total_degree())).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    degs.iter()
        .take(m)
        .product::<u64>()
        .min(usize::MAX as u64) as usize
}

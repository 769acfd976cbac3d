//! Smooth, extended, and stratified critical-point systems.

use crate::{FactoredDenominator, PolySystem, Provenance, SystemsError};
use polycore::LaurentPoly;

/// Picks a name not already in `taken`, extending with underscores until
/// free, so auxiliary variables never collide with the input's variables.
fn fresh(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|v| v == &name) {
        name.push('_');
    }
    name
}

/// Multiplies by the unit monomial clearing negative exponents. Critical
/// points away from the coordinate hyperplanes are unchanged: on `H = 0` the
/// log-gradient of `z^s·H` equals `z^s` times that of `H` plus a multiple of
/// `H` itself.
fn clear_to_polynomial(h: &LaurentPoly) -> LaurentPoly {
    let shift: Vec<i64> = h
        .vars()
        .iter()
        .map(|v| match h.exponent_range(v) {
            Some((lo, _)) if lo < 0 => -lo,
            _ => 0,
        })
        .collect();
    if shift.iter().all(|&s| s == 0) {
        h.clone()
    } else {
        h.shift_exponents(&shift)
    }
}

/// The smooth critical-point system `{H, z_1 ∂H/∂z_1 − λ, …, z_n ∂H/∂z_n − λ}`
/// over `(z, λ)`: points of the zero set where the log-gradient is parallel
/// to the all-ones direction, with λ the common value.
pub fn smooth_system(h: &LaurentPoly) -> Result<PolySystem, SystemsError> {
    let h = clear_to_polynomial(h);
    if h.is_constant() {
        return Err(SystemsError::ConstantPolynomial);
    }
    let lambda = fresh("lambda", h.vars());
    let mut variables = h.vars().to_vec();
    variables.push(lambda.clone());
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();

    let lam = LaurentPoly::var(&names, &lambda);
    let mut equations = vec![h.with_vars(&names)];
    for v in h.vars() {
        equations.push(h.zdz(v).with_vars(&names).sub(&lam));
    }
    PolySystem::new(variables, equations, Provenance::Smooth)
}

/// The smooth system extended by `H(t·z_1, …, t·z_n)` over `(z, λ, t)`.
/// For a critical point `w` of a combinatorial function, the `t`-values this
/// system attains above `z = w` detect scaled-down copies of the zero set
/// crossing the diagonal segment from the origin: any root with `0 < t < 1`
/// blocks minimality.
pub fn extended_system(h: &LaurentPoly) -> Result<PolySystem, SystemsError> {
    let h = clear_to_polynomial(h);
    if h.is_constant() {
        return Err(SystemsError::ConstantPolynomial);
    }
    let lambda = fresh("lambda", h.vars());
    let mut variables = h.vars().to_vec();
    variables.push(lambda.clone());
    let t = fresh("t", &variables);
    variables.push(t.clone());
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();

    let lam = LaurentPoly::var(&names, &lambda);
    let mut equations = vec![h.with_vars(&names)];
    for v in h.vars() {
        equations.push(h.zdz(v).with_vars(&names).sub(&lam));
    }
    // H(t z): every term picks up t to its total degree in the original vars.
    let scaled = LaurentPoly::from_terms(
        &names,
        h.terms().map(|(e, c)| {
            let mut e2 = e.to_vec();
            e2.push(0);
            e2.push(e.iter().sum());
            (e2, c.clone())
        }),
    );
    equations.push(scaled);
    PolySystem::new(variables, equations, Provenance::Extended)
}

/// Critical points of the stratum where the factors indexed by `subset`
/// vanish simultaneously. With `r = |subset| < n` the system is the selected
/// factors together with every `(r+1)×(r+1)` minor of the matrix whose rows
/// are their log-gradients `(z_1 ∂H_i/∂z_1, …, z_n ∂H_i/∂z_n)` topped off by
/// an all-ones row — vanishing minors make the diagonal direction a
/// combination of the normal directions. With `r = n` every point of the
/// (finite) stratum is critical and only the factors remain.
pub fn stratum_system(
    fd: &FactoredDenominator,
    subset: &[usize],
) -> Result<PolySystem, SystemsError> {
    let count = fd.factors().len();
    if subset.is_empty() {
        return Err(SystemsError::InvalidSubset);
    }
    for (i, &s) in subset.iter().enumerate() {
        if s >= count {
            return Err(SystemsError::BadFactorIndex { index: s, count });
        }
        if subset[..i].contains(&s) {
            return Err(SystemsError::InvalidSubset);
        }
    }
    let variables = fd.variables().to_vec();
    let n = variables.len();
    let r = subset.len();
    if r > n {
        return Err(SystemsError::SubsetTooLarge { r, n });
    }
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();

    let mut equations: Vec<LaurentPoly> = subset.iter().map(|&i| fd.factors()[i].clone()).collect();
    if r < n {
        let mut matrix: Vec<Vec<LaurentPoly>> = subset
            .iter()
            .map(|&i| {
                let h = &fd.factors()[i];
                variables.iter().map(|v| h.zdz(v)).collect()
            })
            .collect();
        matrix.push(vec![LaurentPoly::one(&names); n]);
        for cols in combinations(n, r + 1) {
            let minor: Vec<Vec<LaurentPoly>> = matrix
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            equations.push(poly_det(&minor));
        }
    }
    PolySystem::new(variables, equations, Provenance::Stratum(subset.to_vec()))
}

/// All k-subsets of `{0, …, n-1}` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    debug_assert!(k >= 1 && k <= n);
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant by cofactor expansion along the first row; matrices here are
/// at most (n+1)×(n+1) for small n, so exact expansion is fine.
fn poly_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let names: Vec<&str> = m[0][0].vars().iter().map(String::as_str).collect();
    let mut acc = LaurentPoly::zero(&names);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&poly_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

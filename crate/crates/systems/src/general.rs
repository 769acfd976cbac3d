//! Real embedding of critical-point and minimality conditions.
//!
//! When the coefficient positivity used by the combinatorial route is not
//! available, minimality is decided over the reals: write `z_j = x_j + i y_j`,
//! split `H` into exact real and imaginary parts, and compare the candidate
//! point `(a, b)` against points `(x, y)` of the variety whose coordinate-wise
//! squared moduli are a common multiple `t` of the candidate's. Solutions
//! with `0 < t < 1` exhibit a strictly smaller point of the variety on the
//! same polydisk ray and therefore block minimality.

use crate::{PolySystem, Provenance, SystemsError};
use polycore::LaurentPoly;

/// Splits `H(x_1 + i y_1, …, x_n + i y_n)` into `(H_R, H_I)` exactly over the
/// rationals. Output variables are `x_1..x_n, y_1..y_n` in block order.
pub fn complex_split(h: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly), SystemsError> {
    if !h.is_polynomial() {
        return Err(SystemsError::NotPolynomial(h.pretty_print()));
    }
    let n = h.nvars();
    let var_names: Vec<String> = (1..=n)
        .map(|j| format!("x_{j}"))
        .chain((1..=n).map(|j| format!("y_{j}")))
        .collect();
    let names: Vec<&str> = var_names.iter().map(String::as_str).collect();

    let mut re = LaurentPoly::zero(&names);
    let mut im = LaurentPoly::zero(&names);
    for (e, c) in h.terms() {
        let mut term_re = LaurentPoly::constant(&names, c.clone());
        let mut term_im = LaurentPoly::zero(&names);
        for j in 0..n {
            let x = LaurentPoly::var(&names, &names[j]);
            let y = LaurentPoly::var(&names, &names[n + j]);
            for _ in 0..e[j] {
                let next_re = term_re.mul(&x).sub(&term_im.mul(&y));
                let next_im = term_re.mul(&y).add(&term_im.mul(&x));
                term_re = next_re;
                term_im = next_im;
            }
        }
        re = re.add(&term_re);
        im = im.add(&term_im);
    }
    Ok((re, im))
}

/// The real-embedded system over `(a, b, x, y, λ_R, λ_I, t)`, plus `ν` when
/// `include_critical_eqs` is set:
///
/// 1. `H_R(a,b) = H_I(a,b) = 0` — the candidate lies on the variety;
/// 2. `a_j ∂H_R/∂x_j(a,b) + b_j ∂H_R/∂y_j(a,b) = λ_R` for all j;
/// 3. `a_j ∂H_I/∂x_j(a,b) + b_j ∂H_I/∂y_j(a,b) = λ_I` for all j
///    (2–3 are the real and imaginary parts of the critical-point equations);
/// 4. `H_R(x,y) = H_I(x,y) = 0` — a comparison point on the variety;
/// 5. `x_j² + y_j² = t·(a_j² + b_j²)` — its squared moduli sit at the common
///    fraction `t` of the candidate's;
/// 6. `(y_j − ν x_j)·∂H_R/∂x_j(x,y) = (x_j + ν y_j)·∂H_R/∂y_j(x,y)` — the
///    rotation-multiplier equations cutting the comparison locus down to
///    critical points of the modulus map.
pub fn general_real_system(
    h: &LaurentPoly,
    include_critical_eqs: bool,
) -> Result<PolySystem, SystemsError> {
    if h.is_constant() {
        return Err(SystemsError::ConstantPolynomial);
    }
    let (h_re, h_im) = complex_split(h)?;
    let n = h.nvars();

    let mut variables: Vec<String> = Vec::with_capacity(4 * n + 4);
    for prefix in ["a", "b", "x", "y"] {
        for j in 1..=n {
            variables.push(format!("{prefix}_{j}"));
        }
    }
    variables.push("lambda_R".into());
    variables.push("lambda_I".into());
    variables.push("t".into());
    if include_critical_eqs {
        variables.push("nu".into());
    }
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();

    // Renames the split polynomials (block order x, y) into the a, b blocks.
    let ab_names: Vec<&str> = names[..2 * n].to_vec();
    let to_ab = |p: &LaurentPoly| {
        LaurentPoly::from_terms(&ab_names, p.terms().map(|(e, c)| (e.to_vec(), c.clone())))
            .with_vars(&names)
    };
    let var = |name: &str| LaurentPoly::var(&names, name);

    let mut equations = Vec::with_capacity(4 * n + 4);
    // (1) candidate on the variety
    equations.push(to_ab(&h_re));
    equations.push(to_ab(&h_im));
    // (2) real part of the critical-point equations
    let lambda_r = var("lambda_R");
    for j in 1..=n {
        let dx = to_ab(&h_re.partial_derivative(&format!("x_{j}")));
        let dy = to_ab(&h_re.partial_derivative(&format!("y_{j}")));
        let eq = var(&format!("a_{j}"))
            .mul(&dx)
            .add(&var(&format!("b_{j}")).mul(&dy))
            .sub(&lambda_r);
        equations.push(eq);
    }
    // (3) imaginary part of the critical-point equations
    let lambda_i = var("lambda_I");
    for j in 1..=n {
        let dx = to_ab(&h_im.partial_derivative(&format!("x_{j}")));
        let dy = to_ab(&h_im.partial_derivative(&format!("y_{j}")));
        let eq = var(&format!("a_{j}"))
            .mul(&dx)
            .add(&var(&format!("b_{j}")).mul(&dy))
            .sub(&lambda_i);
        equations.push(eq);
    }
    // (4) comparison point on the variety
    equations.push(h_re.with_vars(&names));
    equations.push(h_im.with_vars(&names));
    // (5) squared-modulus comparison
    let t = var("t");
    for j in 1..=n {
        let x = var(&format!("x_{j}"));
        let y = var(&format!("y_{j}"));
        let a = var(&format!("a_{j}"));
        let b = var(&format!("b_{j}"));
        let eq = x
            .mul(&x)
            .add(&y.mul(&y))
            .sub(&t.mul(&a.mul(&a).add(&b.mul(&b))));
        equations.push(eq);
    }
    // (6) rotation-multiplier equations
    if include_critical_eqs {
        let nu = var("nu");
        for j in 1..=n {
            let x = var(&format!("x_{j}"));
            let y = var(&format!("y_{j}"));
            let dx = h_re.partial_derivative(&format!("x_{j}")).with_vars(&names);
            let dy = h_re.partial_derivative(&format!("y_{j}")).with_vars(&names);
            let eq = y
                .sub(&nu.mul(&x))
                .mul(&dx)
                .sub(&x.add(&nu.mul(&y)).mul(&dy));
            equations.push(eq);
        }
    }

    let provenance = if include_critical_eqs {
        Provenance::GeneralRealCritical
    } else {
        Provenance::GeneralReal
    };
    PolySystem::new(variables, equations, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::{int, parse_expr, rat, GaussianRational};

    /// Independent arithmetic route: evaluate `h` at Gaussian-rational
    /// arguments term by term.
    fn gaussian_eval(h: &LaurentPoly, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), h.nvars());
        let mut acc = GaussianRational::zero();
        for (e, c) in h.terms() {
            let mut term = GaussianRational::from_rat(c.clone());
            for (z, &k) in point.iter().zip(e) {
                assert!(k >= 0, "gaussian_eval expects a polynomial");
                term = &term * &z.powi(k as u64);
            }
            acc = &acc + &term;
        }
        acc
    }

    fn poly(text: &str, vars: &[&str]) -> LaurentPoly {
        let combo = parse_expr(text, vars).unwrap();
        assert!(combo.denominator().is_constant());
        combo
            .numerator()
            .scale(&combo.denominator().constant_term().recip())
    }

    #[test]
    fn split_of_a_single_variable_is_the_identity_embedding() {
        let (re, im) = complex_split(&poly("z", &["z"])).unwrap();
        assert_eq!(re, poly("x_1", &["x_1", "y_1"]));
        assert_eq!(im, poly("y_1", &["x_1", "y_1"]));
    }

    #[test]
    fn split_of_a_square_matches_the_binomial_expansion() {
        // (x + i y)^2 = x^2 - y^2 + 2 i x y
        let (re, im) = complex_split(&poly("z^2", &["z"])).unwrap();
        assert_eq!(re, poly("x_1^2 - y_1^2", &["x_1", "y_1"]));
        assert_eq!(im, poly("2*x_1*y_1", &["x_1", "y_1"]));
    }

    #[test]
    fn split_agrees_with_gaussian_arithmetic() {
        let h = poly("2 + y - x*(1 + y)^2", &["x", "y"]);
        let (re, im) = complex_split(&h).unwrap();
        let samples = [
            (rat(1, 2), rat(-1, 3), int(2), rat(3, 5)),
            (int(-1), int(2), rat(1, 7), rat(-2, 3)),
            (rat(5, 4), rat(0, 1), rat(-3, 2), rat(1, 6)),
        ];
        for (x1, y1, x2, y2) in samples {
            let z = [
                GaussianRational::new(x1.clone(), y1.clone()),
                GaussianRational::new(x2.clone(), y2.clone()),
            ];
            let direct = gaussian_eval(&h, &z);
            let point = vec![x1, x2, y1, y2];
            assert_eq!(re.eval(&point), direct.re);
            assert_eq!(im.eval(&point), direct.im);
        }
    }

    #[test]
    fn rejects_laurent_input() {
        let h = LaurentPoly::monomial(&["z"], &[-1], rat(1, 1));
        assert!(matches!(
            complex_split(&h),
            Err(SystemsError::NotPolynomial(_))
        ));
        assert!(matches!(
            general_real_system(&h, false),
            Err(SystemsError::NotPolynomial(_))
        ));
    }
}

//! Constructive embeddings of other generating functions as diagonals.
//!
//! Two classical reductions are implemented: Furstenberg's embedding of an
//! algebraic power series as the diagonal of an explicit bivariate rational
//! function, and the reciprocal substitution that turns a non-negative
//! sub-series extraction (as produced by the kernel method) into a diagonal.

use num_rational::BigRational as Rat;
use num_traits::{One, Zero};
use polycore::{LaurentPoly, RationalCombo};

use crate::series::diagonal_coeffs;
use crate::OracleError;

/// Embeds the algebraic series F with P(z, F(z)) = 0 and F(0) = 0 as the
/// diagonal of   y² (∂P/∂y)(zy, y) / P(zy, y).
///
/// `p` must be a polynomial in exactly two variables, ordered (z, y);
/// `series_check` supplies the first coefficients of the branch (starting
/// with the constant term 0) and is used twice: to verify that P indeed
/// annihilates the proposed series through the given order, and to verify
/// the diagonal of the constructed rational function against the branch.
pub fn alg_to_diagonal(
    p: &LaurentPoly,
    series_check: &[Rat],
) -> Result<RationalCombo, OracleError> {
    assert_eq!(p.nvars(), 2, "alg_to_diagonal expects a bivariate polynomial");
    assert!(p.is_polynomial(), "alg_to_diagonal expects a polynomial, not a Laurent polynomial");

    if series_check.is_empty() || !series_check[0].is_zero() {
        return Err(OracleError::SeriesCheckConstantTerm);
    }
    let order = series_check.len() - 1;

    let z = p.vars()[0].clone();
    let y = p.vars()[1].clone();
    let p_y = p.partial_derivative(&y);
    if p_y.coeff(&[0, 0]).is_zero() {
        return Err(OracleError::DerivVanishesAtOrigin);
    }

    // P(z, F(z)) must vanish through the supplied truncation.
    let deg_y = p
        .terms()
        .map(|(e, _)| e[1])
        .max()
        .expect("nonzero polynomial") as usize;
    let f_powers = truncated_powers(series_check, deg_y, order);
    let mut residual = vec![Rat::zero(); order + 1];
    for (e, c) in p.terms() {
        let (a, b) = (e[0] as usize, e[1] as usize);
        for (j, fj) in f_powers[b].iter().enumerate() {
            if a + j > order {
                break;
            }
            residual[a + j] += c * fj;
        }
    }
    if let Some(bad) = residual.iter().position(|r| !r.is_zero()) {
        return Err(OracleError::SeriesCheckMismatch { order: bad });
    }

    // The embedding: substitute z -> z*y, multiply the derivative by y².
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    let sub = |q: &LaurentPoly| q.substitute_monomial(&z, &Rat::one(), &[1, 1]);
    let y_squared = LaurentPoly::monomial(&vars, &[0, 2], Rat::one());
    let combo = RationalCombo::new(sub(&p_y).mul(&y_squared), sub(p))
        .expect("P(zy, y) is nonzero when ∂P/∂y(0,0) is");

    // Internal verification: the diagonal reproduces the branch.
    let diag = diagonal_coeffs(&combo, order)?;
    for (j, (got, want)) in diag.iter().zip(series_check).enumerate() {
        if got != want {
            return Err(OracleError::SeriesCheckMismatch { order: j });
        }
    }
    Ok(combo)
}

/// Powers F^0 .. F^max of a truncated series, each through the same order.
fn truncated_powers(f: &[Rat], max: usize, order: usize) -> Vec<Vec<Rat>> {
    let mut powers = Vec::with_capacity(max + 1);
    let mut one = vec![Rat::zero(); order + 1];
    one[0] = Rat::one();
    powers.push(one);
    for b in 1..=max {
        let prev = &powers[b - 1];
        let mut next = vec![Rat::zero(); order + 1];
        for (i, fi) in f.iter().take(order + 1).enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, pj) in prev.iter().take(order + 1 - i).enumerate() {
                if !pj.is_zero() {
                    next[i + j] += fi * pj;
                }
            }
        }
        powers.push(next);
    }
    powers
}

/// Rewrites a kernel-method extraction as a diagonal: substitutes
/// z_j -> 1/z_j and t -> z_1⋯z_n·t in F(z_1..z_n, t), then divides by
/// (1-z_j) for every flagged coordinate.
///
/// Flag j selects summation over all values of coordinate j (the walk may
/// end anywhere on that axis); an unset flag keeps only the coefficient of
/// z_j^0 (the walk returns to zero in that coordinate).
pub fn positive_extraction_to_diagonal(
    f: &RationalCombo,
    flags: &[bool],
) -> RationalCombo {
    let n = flags.len();
    assert_eq!(
        f.vars().len(),
        n + 1,
        "need one flag per variable, with the series variable last"
    );
    let num = reciprocal_substitution(f.numerator());
    let mut den = reciprocal_substitution(f.denominator());
    let vars: Vec<&str> = f.vars().iter().map(String::as_str).collect();
    for (j, &flag) in flags.iter().enumerate() {
        if flag {
            let mut e = vec![0i64; n + 1];
            e[j] = 1;
            let factor = LaurentPoly::one(&vars)
                .sub(&LaurentPoly::from_terms(&vars, [(e, Rat::one())]));
            den = den.mul(&factor);
        }
    }
    RationalCombo::new(num, den).expect("monomial substitution preserves nonzero denominators")
}

/// The monomial substitution z_j -> 1/z_j (all but the last variable),
/// t -> z_1⋯z_n·t (the last variable); a ring automorphism of the Laurent
/// polynomials.
fn reciprocal_substitution(p: &LaurentPoly) -> LaurentPoly {
    let n = p.nvars() - 1;
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    LaurentPoly::from_terms(
        &vars,
        p.terms().map(|(e, c)| {
            let t_exp = e[n];
            let mut ne = vec![0i64; n + 1];
            for j in 0..n {
                ne[j] = t_exp - e[j];
            }
            ne[n] = t_exp;
            (ne, c.clone())
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse_expr;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn linear_branch_embeds_exactly() {
        // P = y - z has the branch F(z) = z.
        let p = parse_expr("y - z", &["z", "y"])
            .unwrap()
            .into_poly();
        let check = vec![rat(0), rat(1), rat(0), rat(0)];
        let combo = alg_to_diagonal(&p, &check).unwrap();
        assert_eq!(diagonal_coeffs(&combo, 3).unwrap(), check);
    }

    #[test]
    fn geometric_branch_embeds_exactly() {
        // P = y - z - z*y annihilates F(z) = z/(1-z) = z + z² + z³ + …
        let p = parse_expr("y - z - z*y", &["z", "y"])
            .unwrap()
            .into_poly();
        let check: Vec<Rat> = (0..=6).map(|j| if j == 0 { rat(0) } else { rat(1) }).collect();
        let combo = alg_to_diagonal(&p, &check).unwrap();
        assert_eq!(diagonal_coeffs(&combo, 6).unwrap(), check);
    }

    #[test]
    fn vanishing_derivative_is_rejected() {
        // ∂P/∂y = 2y - z vanishes at the origin: no power-series branch.
        let p = parse_expr("y^2 - z*y - z", &["z", "y"])
            .unwrap()
            .into_poly();
        let check = vec![rat(0), rat(1)];
        assert!(matches!(
            alg_to_diagonal(&p, &check),
            Err(OracleError::DerivVanishesAtOrigin)
        ));
    }

    #[test]
    fn inconsistent_series_is_rejected_with_first_bad_order() {
        let p = parse_expr("y - z - z*y", &["z", "y"])
            .unwrap()
            .into_poly();
        // Correct through order 1, wrong at order 2.
        let check = vec![rat(0), rat(1), rat(5)];
        assert!(matches!(
            alg_to_diagonal(&p, &check),
            Err(OracleError::SeriesCheckMismatch { order: 2 })
        ));
        assert!(matches!(
            alg_to_diagonal(&p, &[rat(1), rat(1)]),
            Err(OracleError::SeriesCheckConstantTerm)
        ));
    }

    #[test]
    fn extraction_substitution_matches_hand_expansion() {
        // F = 1 + (w1 + w1·w2)·t; coefficient sums by endpoint flags.
        let f = parse_expr("1 + (x + x*y)*t", &["x", "y", "t"]).unwrap();
        let cases: [(Vec<bool>, Vec<i64>); 4] = [
            (vec![true, true], vec![1, 2]),   // f_k(1,1)
            (vec![false, false], vec![1, 0]), // [x^0 y^0] f_k
            (vec![true, false], vec![1, 1]),  // [y^0] f_k at x=1
            (vec![false, true], vec![1, 0]),  // [x^0] f_k at y=1
        ];
        for (flags, want) in cases {
            let combo = positive_extraction_to_diagonal(&f, &flags);
            let diag = diagonal_coeffs(&combo, 1).unwrap();
            let want: Vec<Rat> = want.into_iter().map(rat).collect();
            assert_eq!(diag, want, "flags {flags:?}");
        }
    }
}

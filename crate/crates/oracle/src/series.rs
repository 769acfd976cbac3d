//! Truncated power-series expansion of rational functions over a dense
//! exponent box, and diagonal coefficient extraction.

use num_traits::{One, Zero};
use polycore::{Rat, RationalCombo};

use crate::{OracleError, TABLE_BUDGET};

/// A dense table of series coefficients of a rational function over the box
/// `[0,K]^n`. When the numerator carries negative exponents (a monomial
/// denominator factor absorbed during normalization), the affected
/// coefficients are those of the Laurent expansion; the absorbed monomial is
/// reported in `shift`.
pub struct SeriesTruncation {
    function: RationalCombo,
    order: usize,
    shift: Vec<i64>,
    widths: Vec<usize>,
    table: Vec<Rat>,
}

impl SeriesTruncation {
    /// Expands `f` through per-variable order `k`.
    pub fn expand(f: &RationalCombo, k: usize) -> Result<Self, OracleError> {
        let inner = expand_inverse_denominator(f, k)?;
        let n = f.vars().len();
        let widths = vec![k + 1; n];
        check_budget(&widths)?;
        let strides = row_major_strides(&widths);
        let total: usize = widths.iter().product();
        let mut table = vec![Rat::zero(); total];
        let mut alpha = vec![0i64; n];
        for (idx, slot) in table.iter_mut().enumerate() {
            unrank(idx, &strides, &widths, &mut alpha);
            *slot = inner.coeff_at(&alpha);
        }
        Ok(SeriesTruncation {
            function: f.clone(),
            order: k,
            shift: inner.shift,
            widths,
            table,
        })
    }

    pub fn function(&self) -> &RationalCombo {
        &self.function
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The monomial shift absorbed from the numerator's negative exponents
    /// (zero vector when the function was an ordinary power series).
    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    /// Coefficient of z^alpha; alpha must lie in `[0,K]^n`.
    pub fn coeff(&self, alpha: &[i64]) -> &Rat {
        assert_eq!(alpha.len(), self.widths.len());
        let strides = row_major_strides(&self.widths);
        let mut idx = 0usize;
        for (j, &a) in alpha.iter().enumerate() {
            assert!(
                a >= 0 && (a as usize) < self.widths[j],
                "exponent outside truncation box"
            );
            idx += a as usize * strides[j];
        }
        &self.table[idx]
    }

    /// The diagonal sequence [f_0, ..., f_K].
    pub fn diagonal(&self) -> Vec<Rat> {
        (0..=self.order)
            .map(|k| {
                let alpha = vec![k as i64; self.widths.len()];
                self.coeff(&alpha).clone()
            })
            .collect()
    }
}

/// Exact diagonal coefficients [f_0 .. f_K] of `f`, skipping the full output
/// table: only the inverse-denominator box and the diagonal convolution are
/// materialized.
pub fn diagonal_coeffs(f: &RationalCombo, k: usize) -> Result<Vec<Rat>, OracleError> {
    let inner = expand_inverse_denominator(f, k)?;
    let n = f.vars().len();
    let mut out = Vec::with_capacity(k + 1);
    let mut alpha = vec![0i64; n];
    for j in 0..=k {
        alpha.fill(j as i64);
        out.push(inner.coeff_at(&alpha));
    }
    Ok(out)
}

/// Power-series table of 1/denominator over the box needed to read
/// coefficients of the full function through order `k`, plus the numerator.
struct InverseDenominator {
    num_terms: Vec<(Vec<i64>, Rat)>,
    shift: Vec<i64>,
    widths: Vec<usize>,
    strides: Vec<usize>,
    inv_table: Vec<Rat>,
}

impl InverseDenominator {
    /// Coefficient of z^alpha in the full function (numerator folded in).
    fn coeff_at(&self, alpha: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        'terms: for (e, c) in &self.num_terms {
            let mut idx = 0usize;
            for j in 0..alpha.len() {
                let a = alpha[j] - e[j];
                if a < 0 || a as usize >= self.widths[j] {
                    continue 'terms;
                }
                idx += a as usize * self.strides[j];
            }
            acc += c * &self.inv_table[idx];
        }
        acc
    }
}

fn expand_inverse_denominator(
    f: &RationalCombo,
    k: usize,
) -> Result<InverseDenominator, OracleError> {
    if !f.expandable_at_origin() {
        return Err(OracleError::NotExpandable);
    }
    let n = f.vars().len();
    let num = f.numerator();
    let den = f.denominator();

    // Negative numerator exponents (an absorbed monomial denominator factor)
    // enlarge the box of 1/den coefficients we must reach.
    let mut shift = vec![0i64; n];
    for (e, _) in num.terms() {
        for j in 0..n {
            shift[j] = shift[j].max(-e[j]);
        }
    }
    let widths: Vec<usize> = shift.iter().map(|&s| k + 1 + s as usize).collect();
    check_budget(&widths)?;
    let strides = row_major_strides(&widths);
    let total: usize = widths.iter().product();

    let h0 = den.constant_term();
    debug_assert!(!h0.is_zero());
    let inv_h0 = Rat::one() / h0;
    let den_terms: Vec<(Vec<usize>, Rat)> = den
        .terms()
        .filter(|(e, _)| e.iter().any(|&x| x != 0))
        .map(|(e, c)| (e.iter().map(|&x| x as usize).collect(), c.clone()))
        .collect();

    // S[alpha] of 1/den in row-major order: every dependency alpha - beta is
    // componentwise smaller, hence already filled.
    let mut inv_table = vec![Rat::zero(); total];
    let mut alpha = vec![0i64; n];
    for idx in 0..total {
        unrank(idx, &strides, &widths, &mut alpha);
        let mut acc = if idx == 0 { Rat::one() } else { Rat::zero() };
        'dt: for (e, c) in &den_terms {
            let mut src = 0usize;
            for j in 0..n {
                let a = alpha[j] - e[j] as i64;
                if a < 0 {
                    continue 'dt;
                }
                src += a as usize * strides[j];
            }
            acc -= c * &inv_table[src];
        }
        inv_table[idx] = acc * &inv_h0;
    }

    Ok(InverseDenominator {
        num_terms: num.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect(),
        shift,
        widths,
        strides,
        inv_table,
    })
}

fn check_budget(widths: &[usize]) -> Result<(), OracleError> {
    let needed: u128 = widths.iter().map(|&w| w as u128).product();
    if needed > TABLE_BUDGET as u128 {
        return Err(OracleError::TableBudget { needed, budget: TABLE_BUDGET });
    }
    Ok(())
}

fn row_major_strides(widths: &[usize]) -> Vec<usize> {
    let n = widths.len();
    let mut strides = vec![1usize; n];
    for j in (0..n.saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * widths[j + 1];
    }
    strides
}

fn unrank(mut idx: usize, strides: &[usize], widths: &[usize], alpha: &mut [i64]) {
    for j in 0..widths.len() {
        alpha[j] = (idx / strides[j]) as i64;
        idx %= strides[j];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::{int, parse_expr};

    fn f(text: &str, vars: &[&str]) -> RationalCombo {
        parse_expr(text, vars).unwrap()
    }

    #[test]
    fn central_binomial_diagonal() {
        let g = f("1/(1-x-y)", &["x", "y"]);
        let d = diagonal_coeffs(&g, 4).unwrap();
        let want = [1, 2, 6, 20, 70];
        assert_eq!(d, want.map(int).to_vec());
    }

    #[test]
    fn geometric_series_table() {
        let g = f("1/(1-x)", &["x"]);
        let t = SeriesTruncation::expand(&g, 6).unwrap();
        for j in 0..=6 {
            assert_eq!(*t.coeff(&[j]), int(1));
        }
        assert_eq!(t.shift(), &[0]);
    }

    #[test]
    fn absorbed_monomial_shifts_laurent_expansion() {
        // 1/(x(1-x^2*y)) has Laurent coefficients x^(2m-1) y^m; only m=1
        // lands on the diagonal.
        let g = f("1/(x*(1-x^2*y))", &["x", "y"]);
        let d = diagonal_coeffs(&g, 4).unwrap();
        assert_eq!(d, vec![int(0), int(1), int(0), int(0), int(0)]);
        let t = SeriesTruncation::expand(&g, 4).unwrap();
        assert_eq!(t.shift(), &[1, 0]);
        assert_eq!(*t.coeff(&[1, 1]), int(1));
        assert_eq!(*t.coeff(&[3, 2]), int(1));
        assert_eq!(*t.coeff(&[2, 1]), int(0));
    }

    #[test]
    fn non_expandable_is_an_error() {
        let g = f("1/(x+y)", &["x", "y"]);
        assert_eq!(diagonal_coeffs(&g, 3), Err(OracleError::NotExpandable));
    }

    #[test]
    fn budget_is_enforced() {
        let g = f("1/(1-x-y-z-w)", &["x", "y", "z", "w"]);
        match diagonal_coeffs(&g, 100) {
            Err(OracleError::TableBudget { needed, .. }) => {
                assert_eq!(needed, 101u128.pow(4));
            }
            other => panic!("expected budget error, got {:?}", other.map(|_| ())),
        }
    }
}

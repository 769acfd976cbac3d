//! The Kronecker representation proper: `P`, one `Q_j` per variable, and the
//! separating linear form, together with verification, fiber restriction,
//! parametrization of derived quantities, and (de)serialization.

use crate::KroneckerError;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use polycore::{LaurentPoly, QPoly, Rat, UPoly};
use serde_json::{json, Value};
use systems::PolySystem;

/// Encodes the solutions of a zero-dimensional system: for each root `u*`
/// of the square-free integer polynomial `P`, the point
/// `z_j = Q_j(u*) / P′(u*)` is a solution, `u* = Σ λ_j z_j`, and every
/// solution arises exactly once this way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerRep {
    /// Solution coordinates, in order (main variables then auxiliaries).
    pub variables: Vec<String>,
    /// Coefficients `λ_j` of the separating linear form `u = Σ λ_j z_j`.
    pub form: Vec<i64>,
    /// Square-free primitive eliminant with positive leading coefficient.
    pub p: UPoly,
    /// Numerators: `deg Q_j < deg P`, coordinate `j` equals `Q_j / P′`.
    pub q: Vec<UPoly>,
    /// Label of the system construction this representation solves.
    pub provenance: String,
}

impl KroneckerRep {
    /// Number of solutions counted without multiplicity.
    pub fn degree(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    /// True when the representation encodes the empty solution set (`P = 1`).
    pub fn is_empty(&self) -> bool {
        self.degree() == 0
    }

    /// Coordinate values `Q_j · (P′)⁻¹ mod P` as rational polynomials in `u`.
    pub fn values_mod_p(&self) -> Result<Vec<QPoly>, KroneckerError> {
        let p = QPoly::from_upoly(&self.p);
        let dp = p.derivative();
        let inv = dp.inverse_mod(&p).map_err(|_| {
            KroneckerError::BadSystem("P is not square-free: P′ is not invertible".into())
        })?;
        Ok(self
            .q
            .iter()
            .map(|qj| QPoly::from_upoly(qj).mul_mod(&inv, &p))
            .collect())
    }

    /// Structural invariants: shape, square-freeness, primitivity, degree
    /// bounds, and the separation identity `P′·u ≡ Σ λ_j Q_j (mod P)`.
    pub fn check_invariants(&self) -> Result<(), KroneckerError> {
        let fail = |msg: String| Err(KroneckerError::BadSystem(msg));
        if self.variables.len() != self.form.len() || self.variables.len() != self.q.len() {
            return fail("variables, form, and numerators must have equal length".into());
        }
        if self.p.is_zero() {
            return fail("P must be nonzero".into());
        }
        if !self.p.lc().is_positive() {
            return fail("P must have a positive leading coefficient".into());
        }
        if self.p.content() != BigInt::one() {
            return fail("P must be primitive".into());
        }
        if !self.p.is_square_free() {
            return fail("P must be square-free".into());
        }
        let d = self.degree();
        if d == 0 {
            if self.q.iter().any(|qj| !qj.is_zero()) {
                return fail("an empty representation must have zero numerators".into());
            }
            return Ok(());
        }
        for (name, qj) in self.variables.iter().zip(&self.q) {
            if qj.degree().is_some_and(|dq| dq >= d) {
                return fail(format!("deg Q[{name}] must be below deg P"));
            }
        }
        // P′·u − Σ λ_j Q_j ≡ 0 (mod P).
        let mut sep = self.p.derivative().shift_up(1);
        for (lam, qj) in self.form.iter().zip(&self.q) {
            sep = sep.sub(&qj.mul_scalar(&BigInt::from(*lam)));
        }
        if !QPoly::from_upoly(&sep).rem(&QPoly::from_upoly(&self.p)).is_zero() {
            return fail("the linear form does not reproduce u on the solutions".into());
        }
        Ok(())
    }

    /// Substitutes `z_j = Q_j / P′` into a polynomial equation, clears the
    /// denominators, and checks the result is divisible by `P`.
    pub fn verify_equation(&self, eq: &LaurentPoly) -> Result<bool, KroneckerError> {
        if self.is_empty() {
            return Ok(true);
        }
        let eq = self.aligned(eq)?;
        let p = QPoly::from_upoly(&self.p);
        let dp = QPoly::from_upoly(&self.p.derivative());
        let n = self.variables.len();

        let mut max_exp = vec![0u32; n];
        let mut max_total: i64 = 0;
        for (exps, _) in eq.terms() {
            let mut tot = 0i64;
            for (j, &e) in exps.iter().enumerate() {
                debug_assert!(e >= 0, "system equations are polynomials");
                max_exp[j] = max_exp[j].max(e as u32);
                tot += e;
            }
            max_total = max_total.max(tot);
        }
        let q_pows: Vec<Vec<QPoly>> = (0..n)
            .map(|j| powers(&QPoly::from_upoly(&self.q[j]), max_exp[j]))
            .collect();
        let dp_pows = powers(&dp, max_total as u32);

        let mut acc = QPoly::zero();
        for (exps, c) in eq.terms() {
            let mut term = QPoly::constant(c.clone());
            let mut tot = 0i64;
            for (j, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&q_pows[j][e as usize]);
                    tot += e;
                }
            }
            term = term.mul(&dp_pows[(max_total - tot) as usize]);
            acc = acc.add(&term);
        }
        Ok(acc.rem(&p).is_zero())
    }

    /// Checks the representation against every equation of `system`.
    pub fn verify_system(&self, system: &PolySystem) -> Result<bool, KroneckerError> {
        if system.variables() != &self.variables[..] {
            return Err(KroneckerError::BadSystem(format!(
                "system variables {:?} do not match representation variables {:?}",
                system.variables(),
                self.variables
            )));
        }
        for eq in system.equations() {
            if !self.verify_equation(eq)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restricts to the solutions where `variable` equals the rational
    /// `value`: `P̃ = primitive(gcd(P, P′·c − Q_v))`, the numerators rebuilt
    /// against `P̃′`.  All variables are kept.
    pub fn restrict(&self, variable: &str, value: &Rat) -> Result<Self, KroneckerError> {
        let v = self.var_index(variable)?;
        let p = QPoly::from_upoly(&self.p);
        let dp = QPoly::from_upoly(&self.p.derivative());
        let target = dp
            .mul_scalar(value)
            .sub(&QPoly::from_upoly(&self.q[v]));
        let g = p.gcd(&target);
        if g.degree() == Some(0) || g.is_zero() {
            return Err(KroneckerError::RestrictEmpty {
                variable: variable.to_string(),
                value: value.to_string(),
            });
        }
        let (p_new, _) = g.to_upoly_primitive();
        let p_new = p_new.primitive_positive();
        let pq = QPoly::from_upoly(&p_new);
        let dp_new = QPoly::from_upoly(&p_new.derivative());
        let inv = dp.inverse_mod(&pq).map_err(|_| {
            KroneckerError::BadSystem("P′ is not invertible modulo the restricted P".into())
        })?;
        let mut q_new = Vec::with_capacity(self.q.len());
        for (name, qj) in self.variables.iter().zip(&self.q) {
            let val = QPoly::from_upoly(qj).mul_mod(&inv, &pq);
            let scaled = val.mul_mod(&dp_new, &pq);
            q_new.push(to_integer_poly(&scaled).ok_or_else(|| {
                KroneckerError::NonIntegral {
                    context: format!("restricted numerator for `{name}`"),
                }
            })?);
        }
        let rep = KroneckerRep {
            variables: self.variables.clone(),
            form: self.form.clone(),
            p: p_new,
            q: q_new,
            provenance: self.provenance.clone(),
        };
        rep.check_invariants()?;
        Ok(rep)
    }

    /// Parametrizes a polynomial (or Laurent) expression `q` of the
    /// variables over the solutions: returns integer `Q_q` with
    /// `q(z) = Q_q(u*) / P′(u*)` at every solution.
    pub fn parametrize_poly(&self, expr: &LaurentPoly) -> Result<UPoly, KroneckerError> {
        let value = self.parametrize_rational(expr)?;
        let p = QPoly::from_upoly(&self.p);
        let dp = QPoly::from_upoly(&self.p.derivative());
        let scaled = value.mul_mod(&dp, &p);
        to_integer_poly(&scaled).ok_or_else(|| KroneckerError::NonIntegral {
            context: format!("parametrization of `{}`", expr.pretty_print()),
        })
    }

    /// As [`parametrize_poly`](Self::parametrize_poly) but without the `P′`
    /// scaling or integrality requirement: the exact value of the expression
    /// as a rational polynomial in `u` modulo `P`.
    pub fn parametrize_rational(&self, expr: &LaurentPoly) -> Result<QPoly, KroneckerError> {
        if self.is_empty() {
            return Ok(QPoly::zero());
        }
        let expr = self.aligned(expr)?;
        let p = QPoly::from_upoly(&self.p);
        let vals = self.values_mod_p()?;
        let mut acc = QPoly::zero();
        for (exps, c) in expr.terms() {
            let mut term = QPoly::constant(c.clone()).rem(&p);
            for (j, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul_mod(&vals[j].pow_mod(e as u64, &p), &p);
                } else if e < 0 {
                    let inv = vals[j].inverse_mod(&p).map_err(|_| {
                        KroneckerError::ClearedVariableZero(format!(
                            "`{}` vanishes at a solution and cannot be inverted",
                            self.variables[j]
                        ))
                    })?;
                    term = term.mul_mod(&inv.pow_mod((-e) as u64, &p), &p);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc.rem(&p))
    }

    fn var_index(&self, name: &str) -> Result<usize, KroneckerError> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| KroneckerError::UnknownVariable(name.to_string()))
    }

    /// Re-expresses an expression over this representation's variable list.
    fn aligned(&self, expr: &LaurentPoly) -> Result<LaurentPoly, KroneckerError> {
        for v in expr.vars() {
            if !self.variables.iter().any(|w| w == v) {
                return Err(KroneckerError::UnknownVariable(v.clone()));
            }
        }
        let names: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        Ok(expr.with_vars(&names))
    }

    /// Plain-text form, one field per line.
    pub fn to_text(&self) -> String {
        let mut out = String::from("kronecker-representation\n");
        out.push_str(&format!("variables: {}\n", self.variables.join(" ")));
        let form: Vec<String> = self.form.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("form: {}\n", form.join(" ")));
        out.push_str(&format!("P: {}\n", coeff_line(&self.p)));
        for (name, qj) in self.variables.iter().zip(&self.q) {
            out.push_str(&format!("Q[{name}]: {}\n", coeff_line(qj)));
        }
        out.push_str(&format!("provenance: {}\n", self.provenance));
        out
    }

    /// Parses the output of [`to_text`](Self::to_text).
    pub fn from_text(text: &str) -> Result<Self, KroneckerError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let head = lines.next().unwrap_or("");
        if head != "kronecker-representation" {
            return Err(KroneckerError::Parse(format!(
                "expected `kronecker-representation` header, found `{head}`"
            )));
        }
        let mut variables: Option<Vec<String>> = None;
        let mut form: Option<Vec<i64>> = None;
        let mut p: Option<UPoly> = None;
        let mut q_fields: Vec<(String, UPoly)> = Vec::new();
        let mut provenance = String::new();
        for line in lines {
            let (key, rest) = line.split_once(':').ok_or_else(|| {
                KroneckerError::Parse(format!("expected `key: value`, found `{line}`"))
            })?;
            let rest = rest.trim();
            match key.trim() {
                "variables" => {
                    variables = Some(rest.split_whitespace().map(String::from).collect())
                }
                "form" => {
                    let mut cs = Vec::new();
                    for w in rest.split_whitespace() {
                        cs.push(w.parse::<i64>().map_err(|_| {
                            KroneckerError::Parse(format!("bad form coefficient `{w}`"))
                        })?);
                    }
                    form = Some(cs);
                }
                "P" => p = Some(parse_coeff_line(rest)?),
                "provenance" => provenance = rest.to_string(),
                other => {
                    if let Some(name) = other.strip_prefix("Q[").and_then(|s| s.strip_suffix(']'))
                    {
                        q_fields.push((name.to_string(), parse_coeff_line(rest)?));
                    } else {
                        return Err(KroneckerError::Parse(format!("unknown field `{other}`")));
                    }
                }
            }
        }
        let variables =
            variables.ok_or_else(|| KroneckerError::Parse("missing `variables`".into()))?;
        let form = form.ok_or_else(|| KroneckerError::Parse("missing `form`".into()))?;
        let p = p.ok_or_else(|| KroneckerError::Parse("missing `P`".into()))?;
        let mut q = Vec::with_capacity(variables.len());
        for name in &variables {
            let qj = q_fields
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, poly)| poly.clone())
                .ok_or_else(|| KroneckerError::Parse(format!("missing `Q[{name}]`")))?;
            q.push(qj);
        }
        let rep = KroneckerRep { variables, form, p, q, provenance };
        rep.check_invariants()?;
        Ok(rep)
    }

    /// JSON form with coefficients as decimal strings (they routinely
    /// overflow machine integers).
    pub fn to_json(&self) -> String {
        let q: Vec<Value> = self.q.iter().map(coeff_json).collect();
        let value = json!({
            "variables": self.variables,
            "form": self.form,
            "p": coeff_json(&self.p),
            "q": q,
            "provenance": self.provenance,
        });
        value.to_string()
    }

    /// Parses the output of [`to_json`](Self::to_json).
    pub fn from_json(text: &str) -> Result<Self, KroneckerError> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| KroneckerError::Parse(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| KroneckerError::Parse("expected a JSON object".into()))?;
        let variables: Vec<String> = obj
            .get("variables")
            .and_then(Value::as_array)
            .ok_or_else(|| KroneckerError::Parse("missing `variables`".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(String::from)
                    .ok_or_else(|| KroneckerError::Parse("variable names must be strings".into()))
            })
            .collect::<Result<_, _>>()?;
        let form: Vec<i64> = obj
            .get("form")
            .and_then(Value::as_array)
            .ok_or_else(|| KroneckerError::Parse("missing `form`".into()))?
            .iter()
            .map(|v| {
                v.as_i64()
                    .ok_or_else(|| KroneckerError::Parse("form coefficients must be integers".into()))
            })
            .collect::<Result<_, _>>()?;
        let p = coeff_from_json(
            obj.get("p")
                .ok_or_else(|| KroneckerError::Parse("missing `p`".into()))?,
        )?;
        let q = obj
            .get("q")
            .and_then(Value::as_array)
            .ok_or_else(|| KroneckerError::Parse("missing `q`".into()))?
            .iter()
            .map(coeff_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        let provenance = obj
            .get("provenance")
            .and_then(Value::as_str)
            .unwrap_or("")
            .to_string();
        let rep = KroneckerRep { variables, form, p, q, provenance };
        rep.check_invariants()?;
        Ok(rep)
    }
}

fn powers(base: &QPoly, up_to: u32) -> Vec<QPoly> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(QPoly::one());
    for _ in 0..up_to {
        out.push(out.last().unwrap().mul(base));
    }
    out
}

/// Converts a rational polynomial with integer entries to `UPoly`.
fn to_integer_poly(p: &QPoly) -> Option<UPoly> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if !c.denom().is_one() {
            return None;
        }
        coeffs.push(c.numer().clone());
    }
    Some(UPoly::new(coeffs))
}

/// Ascending integer coefficients, space-separated.
fn coeff_line(p: &UPoly) -> String {
    let cs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    if cs.is_empty() {
        "0".into()
    } else {
        cs.join(" ")
    }
}

fn parse_coeff_line(text: &str) -> Result<UPoly, KroneckerError> {
    let mut coeffs = Vec::new();
    for w in text.split_whitespace() {
        coeffs.push(
            w.parse::<BigInt>()
                .map_err(|_| KroneckerError::Parse(format!("bad coefficient `{w}`")))?,
        );
    }
    Ok(UPoly::new(coeffs))
}

fn coeff_json(p: &UPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn coeff_from_json(value: &Value) -> Result<UPoly, KroneckerError> {
    let arr = value
        .as_array()
        .ok_or_else(|| KroneckerError::Parse("coefficients must be an array".into()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for v in arr {
        let s = v
            .as_str()
            .ok_or_else(|| KroneckerError::Parse("coefficients must be decimal strings".into()))?;
        coeffs.push(
            s.parse::<BigInt>()
                .map_err(|_| KroneckerError::Parse(format!("bad coefficient `{s}`")))?,
        );
    }
    Ok(UPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse_expr;

    fn upoly(cs: &[i64]) -> UPoly {
        UPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn lp(text: &str, vars: &[&str]) -> LaurentPoly {
        parse_expr(text, vars).unwrap().into_poly()
    }

    /// The representation pinned for the critical-point system of 1 − x − y:
    /// single solution x = y = 1/2, λ = −1/2, under u = x + 2y.
    fn smooth_half() -> KroneckerRep {
        KroneckerRep {
            variables: vec!["x".into(), "y".into(), "lambda".into()],
            form: vec![1, 2, 0],
            p: upoly(&[-3, 2]),
            q: vec![upoly(&[1]), upoly(&[1]), upoly(&[-1])],
            provenance: "smooth".into(),
        }
    }

    #[test]
    fn smooth_example_satisfies_all_invariants() {
        smooth_half().check_invariants().unwrap();
    }

    #[test]
    fn smooth_example_verifies_its_defining_equations() {
        let rep = smooth_half();
        let vars = ["x", "y", "lambda"];
        // H = 1 − x − y, x∂H/∂x − λ = −x − λ, y∂H/∂y − λ = −y − λ.
        assert!(rep.verify_equation(&lp("1 - x - y", &vars)).unwrap());
        assert!(rep.verify_equation(&lp("-x - lambda", &vars)).unwrap());
        assert!(rep.verify_equation(&lp("-y - lambda", &vars)).unwrap());
        // And rejects an equation that does not vanish there.
        assert!(!rep.verify_equation(&lp("x - 1", &vars)).unwrap());
    }

    #[test]
    fn separation_identity_is_enforced() {
        let mut rep = smooth_half();
        rep.form = vec![1, 1, 0]; // u would be 1, not 3/2
        assert!(rep.check_invariants().is_err());
    }

    #[test]
    fn parametrize_recovers_a_coordinate_numerator() {
        let rep = smooth_half();
        let qx = rep.parametrize_poly(&lp("x", &["x", "y", "lambda"])).unwrap();
        assert_eq!(qx, rep.q[0]);
    }

    #[test]
    fn parametrize_evaluates_products_and_inverses() {
        let rep = smooth_half();
        // x·y = 1/4 on the solution: value polynomial is the constant 1/4.
        let v = rep
            .parametrize_rational(&lp("x*y", &["x", "y", "lambda"]))
            .unwrap();
        assert_eq!(v, QPoly::constant(Rat::new(BigInt::from(1), BigInt::from(4))));
        // 1/x = 2.
        let inv = rep
            .parametrize_rational(&lp("x^(-1)", &["x", "y", "lambda"]))
            .unwrap();
        assert_eq!(inv, QPoly::constant(Rat::from(BigInt::from(2))));
    }

    #[test]
    fn restrict_at_own_value_reproduces_the_representation() {
        let rep = smooth_half();
        let r = rep
            .restrict("x", &Rat::new(BigInt::from(1), BigInt::from(2)))
            .unwrap();
        assert_eq!(r, rep);
    }

    #[test]
    fn restrict_at_missed_value_errors() {
        let rep = smooth_half();
        let err = rep.restrict("x", &Rat::from(BigInt::from(7))).unwrap_err();
        assert!(matches!(err, KroneckerError::RestrictEmpty { .. }));
    }

    #[test]
    fn restrict_selects_the_matching_fiber() {
        // Two points (1, 4) and (3, 2) with u = x: P = (u−1)(u−3).
        // x = u needs Q_x = u·P′ mod P; P′ = 2u − 4.
        // Q_x = 2u² − 4u mod (u²−4u+3) = 4u − 6; check: at u=1 Q/P′ = −2/−2 = 1 ✓.
        // y = 5 − x: Q_y = (5−u)(2u−4) mod P = −2u² + 14u − 20 ≡ 6u − 14... compute:
        // −2u²+14u−20 + 2(u²−4u+3) = 6u − 14; at u=1: −8/−2 = 4 ✓ at u=3: 4/2 = 2 ✓.
        let rep = KroneckerRep {
            variables: vec!["x".into(), "y".into()],
            form: vec![1, 0],
            p: upoly(&[3, -4, 1]),
            q: vec![upoly(&[-6, 4]), upoly(&[-14, 6])],
            provenance: "smooth".into(),
        };
        rep.check_invariants().unwrap();
        let r = rep.restrict("y", &Rat::from(BigInt::from(2))).unwrap();
        assert_eq!(r.degree(), 1);
        assert_eq!(r.p, upoly(&[-3, 1]));
        let vals = r.values_mod_p().unwrap();
        assert_eq!(vals[0], QPoly::constant(Rat::from(BigInt::from(3))));
        assert_eq!(vals[1], QPoly::constant(Rat::from(BigInt::from(2))));
    }

    #[test]
    fn text_and_json_round_trips_preserve_everything() {
        let rep = smooth_half();
        let text = rep.to_text();
        assert_eq!(KroneckerRep::from_text(&text).unwrap(), rep);
        let json = rep.to_json();
        assert_eq!(KroneckerRep::from_json(&json).unwrap(), rep);
        // Deterministic output.
        assert_eq!(rep.to_json(), json);
    }

    #[test]
    fn degenerate_inputs_are_rejected_at_parse_time() {
        // Non-square-free P.
        let text = "kronecker-representation\nvariables: x\nform: 1\nP: 1 -2 1\nQ[x]: 0 2\nprovenance: smooth\n";
        assert!(KroneckerRep::from_text(text).is_err());
    }
}

//! A finite polynomial system over an ordered variable list, tagged with how
//! it was constructed.

use crate::SystemsError;
use num_traits::One;
use polycore::{parse_expr, LaurentPoly};

/// How a system was constructed. Downstream solving keys off this tag: which
/// auxiliaries are present (`λ`, `t`, `ν`, `λ_R`, `λ_I`), which sign tests
/// apply, and how solutions should be grouped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `{H, z_j ∂H/∂z_j − λ}` over `(z, λ)`.
    Smooth,
    /// Smooth system plus `H(t·z)` over `(z, λ, t)`.
    Extended,
    /// Selected factors plus maximal log-gradient minors over `z`; the
    /// payload records which factors were selected.
    Stratum(Vec<usize>),
    /// Real-embedded system GenSys1–5 over `(a, b, x, y, λ_R, λ_I, t)`.
    GeneralReal,
    /// GenSys1–6, adding the rotation multiplier `ν`.
    GeneralRealCritical,
}

impl Provenance {
    /// Stable text tag used in serialized systems and representations.
    pub fn label(&self) -> String {
        match self {
            Provenance::Smooth => "smooth".into(),
            Provenance::Extended => "extended".into(),
            Provenance::Stratum(s) => {
                let ix: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                format!("stratum {}", ix.join(" "))
            }
            Provenance::GeneralReal => "general_real".into(),
            Provenance::GeneralRealCritical => "general_real_critical".into(),
        }
    }

    /// Inverse of [`Provenance::label`].
    pub fn parse(text: &str) -> Result<Self, SystemsError> {
        let mut words = text.split_whitespace();
        let head = words.next().unwrap_or("");
        let tag = match head {
            "smooth" => Provenance::Smooth,
            "extended" => Provenance::Extended,
            "general_real" => Provenance::GeneralReal,
            "general_real_critical" => Provenance::GeneralRealCritical,
            "stratum" => {
                let mut subset = Vec::new();
                for w in words {
                    subset.push(w.parse::<usize>().map_err(|_| {
                        SystemsError::Parse(format!("bad stratum index `{w}`"))
                    })?);
                }
                return Ok(Provenance::Stratum(subset));
            }
            other => return Err(SystemsError::Parse(format!("unknown provenance `{other}`"))),
        };
        if words.next().is_some() {
            return Err(SystemsError::Parse(format!(
                "trailing tokens after provenance `{head}`"
            )));
        }
        Ok(tag)
    }
}

/// An ordered list of variables together with polynomial equations over them.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySystem {
    variables: Vec<String>,
    equations: Vec<LaurentPoly>,
    provenance: Provenance,
}

impl PolySystem {
    /// Builds a system, checking that every equation is a genuine polynomial
    /// mentioning only declared variables; equations are re-expressed over
    /// the full ordered list so they can be evaluated against one point.
    pub fn new(
        variables: Vec<String>,
        equations: Vec<LaurentPoly>,
        provenance: Provenance,
    ) -> Result<Self, SystemsError> {
        let names: Vec<&str> = variables.iter().map(String::as_str).collect();
        let mut aligned = Vec::with_capacity(equations.len());
        for eq in &equations {
            if !eq.is_polynomial() {
                return Err(SystemsError::NotPolynomial(eq.pretty_print()));
            }
            if let Some(v) = eq.vars().iter().find(|v| !variables.contains(v)) {
                return Err(SystemsError::UnknownVariable(v.clone()));
            }
            aligned.push(eq.with_vars(&names));
        }
        Ok(Self {
            variables,
            equations: aligned,
            provenance,
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn equations(&self) -> &[LaurentPoly] {
        &self.equations
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Text form: a `variables:` header, a `provenance:` line, then one
    /// equation per line in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!("variables: {}\n", self.variables.join(" "));
        out.push_str(&format!("provenance: {}\n", self.provenance.label()));
        for eq in &self.equations {
            out.push_str(&eq.pretty_print());
            out.push('\n');
        }
        out
    }

    /// Parses the format produced by [`Self::to_text`].
    pub fn from_text(text: &str) -> Result<Self, SystemsError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| SystemsError::Parse("empty input".into()))?;
        let vars_decl = header
            .strip_prefix("variables:")
            .ok_or_else(|| SystemsError::Parse("first line must start with `variables:`".into()))?;
        let variables: Vec<String> = vars_decl.split_whitespace().map(String::from).collect();
        if variables.is_empty() {
            return Err(SystemsError::Parse("no variables declared".into()));
        }
        let tag_line = lines
            .next()
            .ok_or_else(|| SystemsError::Parse("missing provenance line".into()))?;
        let tag_decl = tag_line.strip_prefix("provenance:").ok_or_else(|| {
            SystemsError::Parse("second line must start with `provenance:`".into())
        })?;
        let provenance = Provenance::parse(tag_decl.trim())?;

        let names: Vec<&str> = variables.iter().map(String::as_str).collect();
        let mut equations = Vec::new();
        for line in lines {
            let combo = parse_expr(line, &names)
                .map_err(|e| SystemsError::Parse(format!("`{line}`: {e}")))?;
            if !combo.denominator().is_constant() {
                return Err(SystemsError::Parse(format!(
                    "`{line}` is not polynomial"
                )));
            }
            let den = combo.denominator().constant_term();
            let eq = if den.is_one() {
                combo.numerator().clone()
            } else {
                combo.numerator().scale(&den.recip())
            };
            equations.push(eq);
        }
        Self::new(variables, equations, provenance)
    }
}

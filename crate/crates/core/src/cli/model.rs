//! TOML model files.
//!
//! ```toml
//! kind = "weierstrass"
//! beta = 1
//! lambda = [0, 0, 0, 0, 1]          # affine coefficients, low to high
//! mu = [0, 1, 0, 0, 0, 0, "1/1"]    # integers or "p/q" strings
//! m = 12                            # polarization A0 + mE, needed by analyze
//! ```
//!
//! Other kinds: `double_cover` (`l`, `m`), `hypersurface` (`a`, `m`),
//! `complete_intersection` (`a`, `b`, `m`) and `declared_summary`
//! (`beta`, `r`, `a_sq`). All but `weierstrass` accept `declared_types`, the
//! complete list of singular fiber types present.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::exactpoly::{parse_rational, UniPoly};
use crate::families::{Census, FamilySpec, SurfaceSummary, MAX_M};
use crate::weierstrass::{KodairaType, WeierstrassData, MAX_BETA};

/// Largest `r` accepted in a declared summary.
pub const MAX_R: i64 = 1000;
/// Largest `|A²|` accepted in a declared summary.
pub const MAX_A_SQ: i64 = 1_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Weierstrass,
    DoubleCover,
    Hypersurface,
    CompleteIntersection,
    DeclaredSummary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub kind: ModelKind,
    pub beta: Option<i64>,
    pub lambda: Option<Vec<Coeff>>,
    pub mu: Option<Vec<Coeff>>,
    pub m: Option<i64>,
    pub l: Option<i64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub r: Option<i64>,
    pub a_sq: Option<i64>,
    pub declared_types: Option<Vec<String>>,
}

/// A validated model.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelInput {
    Weierstrass { w: WeierstrassData, m: Option<i64> },
    Family(FamilySpec),
    Declared(SurfaceSummary),
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    fn allowed_keys(&self) -> &'static [&'static str] {
        match self.kind {
            ModelKind::Weierstrass => &["beta", "lambda", "mu", "m"],
            ModelKind::DoubleCover => &["l", "m", "declared_types"],
            ModelKind::Hypersurface => &["a", "m", "declared_types"],
            ModelKind::CompleteIntersection => &["a", "b", "m", "declared_types"],
            ModelKind::DeclaredSummary => &["beta", "r", "a_sq", "declared_types"],
        }
    }

    fn present_keys(&self) -> Vec<&'static str> {
        let mut keys = Vec::new();
        let mut push = |k, present: bool| {
            if present {
                keys.push(k);
            }
        };
        push("beta", self.beta.is_some());
        push("lambda", self.lambda.is_some());
        push("mu", self.mu.is_some());
        push("m", self.m.is_some());
        push("l", self.l.is_some());
        push("a", self.a.is_some());
        push("b", self.b.is_some());
        push("r", self.r.is_some());
        push("a_sq", self.a_sq.is_some());
        push("declared_types", self.declared_types.is_some());
        keys
    }

    /// Key/value echo of the file for reports.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        let ints = [
            ("beta", self.beta),
            ("m", self.m),
            ("l", self.l),
            ("a", self.a),
            ("b", self.b),
            ("r", self.r),
            ("a_sq", self.a_sq),
        ];
        for (k, v) in ints {
            if let Some(v) = v {
                out.insert(k.to_string(), v.to_string());
            }
        }
        for (k, v) in [("lambda", &self.lambda), ("mu", &self.mu)] {
            if let Some(cs) = v {
                let parts: Vec<String> = cs
                    .iter()
                    .map(|c| match c {
                        Coeff::Int(n) => n.to_string(),
                        Coeff::Text(s) => s.clone(),
                    })
                    .collect();
                out.insert(k.to_string(), format!("[{}]", parts.join(", ")));
            }
        }
        if let Some(ts) = &self.declared_types {
            out.insert("declared_types".into(), format!("[{}]", ts.join(", ")));
        }
        out
    }

    pub fn into_input(self) -> Result<ModelInput, CliError> {
        let allowed = self.allowed_keys();
        if let Some(k) = self
            .present_keys()
            .into_iter()
            .find(|k| !allowed.contains(k))
        {
            return Err(CliError::Parse(format!(
                "key `{k}` does not apply to kind {:?}",
                self.kind
            )));
        }
        let need = |k: &str, v: Option<i64>| {
            v.ok_or_else(|| CliError::Parse(format!("missing key `{k}`")))
        };
        let declared = match &self.declared_types {
            Some(ts) => Some(parse_types(ts)?),
            None => None,
        };
        let m = self.m.map(check_m).transpose()?;
        Ok(match self.kind {
            ModelKind::Weierstrass => {
                let beta = positive("beta", need("beta", self.beta)?)?;
                let lambda = parse_coeffs("lambda", self.lambda.as_deref())?;
                let mu = parse_coeffs("mu", self.mu.as_deref())?;
                let w = WeierstrassData::new(beta, lambda, mu)
                    .map_err(|e| CliError::Invalid(e.to_string()))?;
                ModelInput::Weierstrass { w, m }
            }
            ModelKind::DoubleCover => ModelInput::Family(FamilySpec::DoubleCover {
                l: positive("l", need("l", self.l)?)?,
                m: need("m", m)?,
                declared,
            }),
            ModelKind::Hypersurface => ModelInput::Family(FamilySpec::Hypersurface {
                a: positive("a", need("a", self.a)?)?,
                m: need("m", m)?,
                declared,
            }),
            ModelKind::CompleteIntersection => {
                ModelInput::Family(FamilySpec::CompleteIntersection {
                    a: positive("a", need("a", self.a)?)?,
                    b: positive("b", need("b", self.b)?)?,
                    m: need("m", m)?,
                    declared,
                })
            }
            ModelKind::DeclaredSummary => {
                let beta = need("beta", self.beta)?;
                if !(0..=MAX_BETA as i64).contains(&beta) {
                    return Err(CliError::Invalid(format!(
                        "beta = {beta} not in 0..={MAX_BETA}"
                    )));
                }
                let r = need("r", self.r)?;
                if !(1..=MAX_R).contains(&r) {
                    return Err(CliError::Invalid(format!("r = {r} not in 1..={MAX_R}")));
                }
                let a_sq = need("a_sq", self.a_sq)?;
                if a_sq.abs() > MAX_A_SQ {
                    return Err(CliError::Invalid(format!("|a_sq| > {MAX_A_SQ}")));
                }
                let census = match declared {
                    Some(s) => Census::Declared(s),
                    None => Census::Unknown,
                };
                ModelInput::Declared(SurfaceSummary::declared(
                    beta as u32,
                    r as u32,
                    a_sq,
                    census,
                ))
            }
        })
    }
}

fn check_m(m: i64) -> Result<i64, CliError> {
    if m.abs() > MAX_M {
        return Err(CliError::Invalid(format!("|m| > {MAX_M}")));
    }
    Ok(m)
}

fn positive(name: &str, v: i64) -> Result<u32, CliError> {
    if !(1..=MAX_BETA as i64).contains(&v) {
        return Err(CliError::Invalid(format!(
            "{name} = {v} not in 1..={MAX_BETA}"
        )));
    }
    Ok(v as u32)
}

fn parse_coeffs(name: &str, cs: Option<&[Coeff]>) -> Result<UniPoly, CliError> {
    let cs = cs.ok_or_else(|| CliError::Parse(format!("missing key `{name}`")))?;
    let vals = cs
        .iter()
        .map(|c| match c {
            Coeff::Int(n) => Ok(crate::exactpoly::rat(*n)),
            Coeff::Text(s) => {
                parse_rational(s).map_err(|e| CliError::Parse(format!("{name}: {e}")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(vals))
}

pub fn parse_types(ts: &[String]) -> Result<BTreeSet<KodairaType>, CliError> {
    ts.iter()
        .map(|s| {
            s.parse::<KodairaType>()
                .map_err(|_| CliError::Parse(format!("unknown fiber type {s:?}")))
        })
        .collect()
}

//! Deciding `H^1(X, Ω¹ ⊗ A) = 0` and Bott vanishing from a surface summary.
//!
//! Rules are tried in a fixed order: the Euler characteristic obstruction,
//! the `r = 1` characterization, the nef-and-big corollaries for `r >= 2`,
//! then the fiber-obstruction implications. Each verdict carries the rules
//! that produced it together with the inputs they consumed.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{Origin, SurfaceSummary};
use crate::weierstrass::KodairaType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("inconsistent summary: {0}")]
    InconsistentSummary(String),
    #[error("family rule {rule:?} disagrees with the general verdict: {detail}")]
    RuleDisagreement { rule: RuleId, detail: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    ChiNegative,
    R1Theorem,
    ForwardFiberObstruction,
    ConverseWithH0Gap,
    Cor12Beta,
    CorA2Threshold,
    PairBott,
    R1Family,
    R4Family,
}

impl RuleId {
    pub fn citation(self) -> &'static str {
        match self {
            RuleId::ChiNegative => "χ(Ω¹⊗A) = A² − 10β; a negative value forces h¹(Ω¹⊗A) > 0",
            RuleId::R1Theorem => {
                "A.E = 1, reduced fibers: h¹(Ω¹⊗A) ≠ 0 iff A² ≤ 21β − 3 or a type II fiber occurs"
            }
            RuleId::ForwardFiberObstruction => {
                "A − βE nef and big: a type II/III/IV fiber for r = 1/2/3 forces h¹(Ω¹⊗A) ≠ 0"
            }
            RuleId::ConverseWithH0Gap => {
                "A − βE nef and big and h⁰(L) − h⁰(L − E) = r for L = A − (11β − 1)E: \
                 h¹(Ω¹⊗A) ≠ 0 only through the obstructing fiber type"
            }
            RuleId::Cor12Beta => {
                "A − (12β − 2)E nef and big: h¹(Ω¹⊗A) ≠ 0 iff the obstructing fiber type for r occurs"
            }
            RuleId::CorA2Threshold => {
                "r ≥ 2 and A² ≥ 2r²β + 25rβ − 4r − 2β: h¹(Ω¹⊗A) ≠ 0 iff a type III (r = 2) \
                 or IV (r = 3) fiber occurs"
            }
            RuleId::PairBott => "A − (β − 2)E nef and big: Bott vanishing holds iff h¹(Ω¹⊗A) = 0",
            RuleId::R1Family => {
                "A = A0 + mE with m > 11β − 1: Bott vanishing holds iff there is no type II fiber"
            }
            RuleId::R4Family => {
                "complete intersection of (a,2) and (b,2) in P¹×P³ with m > 12(a + b) − 2: \
                 Bott vanishing holds"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub rule: RuleId,
    pub citation: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TraceEntry {
    fn new(rule: RuleId, inputs: &[(&str, String)]) -> Self {
        TraceEntry {
            rule,
            citation: rule.citation().to_string(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// How a conditional verdict depends on the listed fiber types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    /// Obstructed exactly when one of the types occurs.
    IffPresent,
    /// Obstructed when one of the types occurs; otherwise open.
    IfPresent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum H1State {
    Zero,
    Nonzero,
    Undetermined,
    Conditional {
        types: BTreeSet<KodairaType>,
        polarity: Polarity,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum BottState {
    Holds,
    Fails,
    Undetermined,
    /// Fails when one of the types occurs; with `IffPresent` it holds otherwise.
    Conditional {
        types: BTreeSet<KodairaType>,
        polarity: Polarity,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub h1: H1State,
    pub bott: BottState,
    pub trace: Vec<TraceEntry>,
}

/// `χ(X, Ω¹ ⊗ A) = A² − 10β`.
pub fn chi_omega1_twist(a_sq: i64, beta: u32) -> i64 {
    a_sq.saturating_sub(10 * beta as i64)
}

/// `2r²β + 25rβ − 4r − 2β`, saturating at the `i64` range.
pub fn a2_threshold(r: u32, beta: u32) -> i64 {
    let (r, b) = (r as i128, beta as i128);
    let v = 2 * r * r * b + 25 * r * b - 4 * r - 2 * b;
    v.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// The fiber type whose presence obstructs vanishing for `A.E = r`.
pub fn obstructing_type(r: u32) -> Option<KodairaType> {
    match r {
        1 => Some(KodairaType::II),
        2 => Some(KodairaType::III),
        3 => Some(KodairaType::IV),
        _ => None,
    }
}

/// Checks the summary against the constraints every polarized elliptic
/// surface satisfies.
pub fn validate(s: &SurfaceSummary) -> Result<(), CriteriaError> {
    let bad = |m: String| Err(CriteriaError::InconsistentSummary(m));
    if s.r == 0 {
        return bad("A.E must be positive for ample A".into());
    }
    if let crate::families::Census::Known(c) = &s.census {
        if c.beta != s.beta {
            return bad(format!(
                "census has β = {}, summary has β = {}",
                c.beta, s.beta
            ));
        }
    }
    if let Some(types) = s.census.types() {
        if s.beta == 0 && !types.is_empty() {
            return bad("β = 0 is the trivial fibration, which has no singular fibers".into());
        }
        for t in types {
            if t == KodairaType::I(0) {
                return bad("I0 is not a singular fiber".into());
            }
            // An ample A meets every fiber component positively.
            if t.component_count() > s.r {
                return bad(format!(
                    "a type {t} fiber has {} components but A.E = {}",
                    t.component_count(),
                    s.r
                ));
            }
        }
    }
    Ok(())
}

fn presence(s: &SurfaceSummary, t: KodairaType) -> Option<bool> {
    if s.beta == 0 {
        return Some(false);
    }
    s.census.presence(t)
}

fn basics(s: &SurfaceSummary) -> Vec<(&'static str, String)> {
    vec![
        ("beta", s.beta.to_string()),
        ("r", s.r.to_string()),
        ("a_sq", s.a_sq.to_string()),
    ]
}

fn census_input(s: &SurfaceSummary) -> String {
    match s.census.types() {
        Some(ts) if s.beta == 0 => format!("{} (trivial fibration)", fmt_types(&ts)),
        Some(ts) => fmt_types(&ts),
        None if s.beta == 0 => "none (trivial fibration)".into(),
        None => "unknown".into(),
    }
}

fn fmt_types(ts: &BTreeSet<KodairaType>) -> String {
    if ts.is_empty() {
        return "{}".into();
    }
    let v: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn by_presence(present: Option<bool>, t: KodairaType, polarity: Polarity) -> H1State {
    match present {
        Some(true) => H1State::Nonzero,
        Some(false) => H1State::Zero,
        None => H1State::Conditional {
            types: BTreeSet::from([t]),
            polarity,
        },
    }
}

/// The `χ < 0` obstruction.
pub fn chi_path(s: &SurfaceSummary) -> Option<(H1State, TraceEntry)> {
    let chi = chi_omega1_twist(s.a_sq, s.beta);
    (chi < 0).then(|| {
        let mut inputs = basics(s);
        inputs.push(("chi", chi.to_string()));
        (
            H1State::Nonzero,
            TraceEntry::new(RuleId::ChiNegative, &inputs),
        )
    })
}

/// The `r = 1` characterization.
pub fn r1_path(s: &SurfaceSummary) -> Option<(H1State, TraceEntry)> {
    if s.r != 1 {
        return None;
    }
    let bound = 21 * s.beta as i64 - 3;
    let mut inputs = basics(s);
    inputs.push(("21beta-3", bound.to_string()));
    inputs.push(("types", census_input(s)));
    let state = if s.a_sq <= bound {
        H1State::Nonzero
    } else {
        by_presence(
            presence(s, KodairaType::II),
            KodairaType::II,
            Polarity::IffPresent,
        )
    };
    let mut e = TraceEntry::new(RuleId::R1Theorem, &inputs);
    if s.beta == 0 {
        e = e.with_note("β = 0: the bound is unsatisfiable and no type II fiber exists");
    }
    Some((state, e))
}

/// The corollaries assuming `A − (12β − 2)E` nef and big, reached either
/// through the `A²` threshold or a certified fact.
pub fn threshold_path(s: &SurfaceSummary) -> Option<(H1State, TraceEntry)> {
    if s.r < 2 {
        return None;
    }
    let thr = a2_threshold(s.r, s.beta);
    let k = 12 * s.beta as i64 - 2;
    let by_threshold = s.a_sq >= thr;
    if !by_threshold && !s.nef_big_certified(k) {
        return None;
    }
    let rule = if by_threshold {
        RuleId::CorA2Threshold
    } else {
        RuleId::Cor12Beta
    };
    let mut inputs = basics(s);
    inputs.push(("a2_threshold", thr.to_string()));
    if !by_threshold {
        inputs.push(("nef_big", format!("A - ({k})E")));
    }
    inputs.push(("types", census_input(s)));
    Some(match obstructing_type(s.r) {
        Some(t) => (
            by_presence(presence(s, t), t, Polarity::IffPresent),
            TraceEntry::new(rule, &inputs),
        ),
        None => (
            H1State::Zero,
            TraceEntry::new(rule, &inputs)
                .with_note("no fiber type obstructs vanishing when r >= 4"),
        ),
    })
}

/// Forward obstruction and its converse under the `h⁰` gap, both assuming
/// `A − βE` nef and big.
pub fn h0_gap_path(s: &SurfaceSummary) -> Option<(H1State, TraceEntry)> {
    if s.r < 2 || !s.nef_big_certified(s.beta as i64) {
        return None;
    }
    let gap = s.has_h0_gap();
    let mut inputs = basics(s);
    inputs.push(("nef_big", format!("A - ({})E", s.beta)));
    inputs.push(("h0_gap_equals_r", gap.to_string()));
    inputs.push(("types", census_input(s)));
    match obstructing_type(s.r) {
        Some(t) => match (presence(s, t), gap) {
            (Some(true), _) => Some((
                H1State::Nonzero,
                TraceEntry::new(RuleId::ForwardFiberObstruction, &inputs),
            )),
            (Some(false), true) => Some((
                H1State::Zero,
                TraceEntry::new(RuleId::ConverseWithH0Gap, &inputs),
            )),
            (Some(false), false) => None,
            (None, true) => Some((
                by_presence(None, t, Polarity::IffPresent),
                TraceEntry::new(RuleId::ConverseWithH0Gap, &inputs),
            )),
            (None, false) => Some((
                by_presence(None, t, Polarity::IfPresent),
                TraceEntry::new(RuleId::ForwardFiberObstruction, &inputs),
            )),
        },
        None if gap => Some((
            H1State::Zero,
            TraceEntry::new(RuleId::ConverseWithH0Gap, &inputs)
                .with_note("no fiber type obstructs vanishing when r >= 4"),
        )),
        None => None,
    }
}

/// The `H¹` part of the verdict and the rule that settled it.
pub fn decide_h1(s: &SurfaceSummary) -> Result<(H1State, Vec<TraceEntry>), CriteriaError> {
    validate(s)?;
    type Path = fn(&SurfaceSummary) -> Option<(H1State, TraceEntry)>;
    let paths: [Path; 4] = [chi_path, r1_path, threshold_path, h0_gap_path];
    for p in paths {
        if let Some((state, entry)) = p(s) {
            return Ok((state, vec![entry]));
        }
    }
    Ok((H1State::Undetermined, Vec::new()))
}

pub fn decide_bott(s: &SurfaceSummary) -> Result<Verdict, CriteriaError> {
    let (h1, mut trace) = decide_h1(s)?;
    let chi_fired = trace.iter().any(|e| e.rule == RuleId::ChiNegative);
    let k = s.beta as i64 - 2;
    let bott = if chi_fired {
        BottState::Fails
    } else if s.nef_big_certified(k) {
        let mut inputs = basics(s);
        inputs.push(("nef_big", format!("A - ({k})E")));
        trace.push(TraceEntry::new(RuleId::PairBott, &inputs));
        match &h1 {
            H1State::Zero => BottState::Holds,
            H1State::Nonzero => BottState::Fails,
            H1State::Undetermined => BottState::Undetermined,
            H1State::Conditional { types, polarity } => BottState::Conditional {
                types: types.clone(),
                polarity: *polarity,
            },
        }
    } else {
        match &h1 {
            H1State::Nonzero => BottState::Fails,
            H1State::Conditional { types, .. } => BottState::Conditional {
                types: types.clone(),
                polarity: Polarity::IfPresent,
            },
            _ => BottState::Undetermined,
        }
    };
    let mut v = Verdict { h1, bott, trace };
    family_check(s, &mut v)?;
    Ok(v)
}

/// Applies the family-specific statements and insists they agree with the
/// general verdict.
fn family_check(s: &SurfaceSummary, v: &mut Verdict) -> Result<(), CriteriaError> {
    let (rule, expected, inputs) = match s.origin {
        Origin::WeierstrassSection { beta, m } if m > 11 * beta as i64 - 1 => {
            let expected = match presence(s, KodairaType::II) {
                Some(true) => BottState::Fails,
                Some(false) => BottState::Holds,
                None => BottState::Conditional {
                    types: BTreeSet::from([KodairaType::II]),
                    polarity: Polarity::IffPresent,
                },
            };
            let inputs = vec![
                ("beta", beta.to_string()),
                ("m", m.to_string()),
                ("types", census_input(s)),
            ];
            (RuleId::R1Family, expected, inputs)
        }
        Origin::CompleteIntersection { a, b, m } if m > 12 * (a as i64 + b as i64) - 2 => {
            let inputs = vec![
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("m", m.to_string()),
            ];
            (RuleId::R4Family, BottState::Holds, inputs)
        }
        _ => return Ok(()),
    };
    if v.bott != expected {
        return Err(CriteriaError::RuleDisagreement {
            rule,
            detail: format!(
                "family rule gives {:?}, general rules give {:?}",
                expected, v.bott
            ),
        });
    }
    v.trace.push(TraceEntry::new(rule, &inputs));
    Ok(())
}

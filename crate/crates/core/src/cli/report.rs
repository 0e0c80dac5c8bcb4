//! Reports emitted by the subcommands, as JSON (`--machine`) or text.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::criteria::{a2_threshold, chi_omega1_twist, BottState, H1State, Polarity, Verdict};
use crate::exactpoly::Order;
use crate::families::{Census, Fact, SurfaceSummary};
use crate::weierstrass::{FiberCensus, KodairaType, Minimality};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub source: Option<String>,
    pub kind: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub place: String,
    pub residue_degree: u32,
    pub a: Order,
    pub b: Order,
    pub delta: u32,
    pub fiber_type: KodairaType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub beta: u32,
    pub rows: Vec<CensusRow>,
    pub delta_sum: u64,
    pub euler_sum: u64,
    pub expected_sum: u64,
}

impl From<&FiberCensus> for CensusReport {
    fn from(c: &FiberCensus) -> Self {
        CensusReport {
            beta: c.beta,
            rows: c
                .fibers
                .iter()
                .map(|f| CensusRow {
                    place: f.cluster.place.to_string(),
                    residue_degree: f.count,
                    a: f.cluster.lambda,
                    b: f.cluster.mu,
                    delta: f.cluster.delta,
                    fiber_type: f.kodaira_type,
                })
                .collect(),
            delta_sum: c.delta_sum(),
            euler_sum: c.euler_sum(),
            expected_sum: 12 * c.beta as u64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub offending: Vec<String>,
}

impl From<&Minimality> for MinimalityReport {
    fn from(m: &Minimality) -> Self {
        MinimalityReport {
            minimal: m.minimal,
            offending: m.offending.iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryReport {
    pub beta: u32,
    pub r: u32,
    pub a_sq: i64,
    pub chi: i64,
    /// `21β − 3`, consulted when `r = 1`.
    pub r1_bound: Option<i64>,
    /// `2r²β + 25rβ − 4r − 2β`, consulted when `r >= 2`.
    pub a2_threshold: Option<i64>,
    pub census: String,
    pub facts: Vec<Fact>,
}

impl From<&SurfaceSummary> for SummaryReport {
    fn from(s: &SurfaceSummary) -> Self {
        SummaryReport {
            beta: s.beta,
            r: s.r,
            a_sq: s.a_sq,
            chi: chi_omega1_twist(s.a_sq, s.beta),
            r1_bound: (s.r == 1).then(|| 21 * s.beta as i64 - 3),
            a2_threshold: (s.r >= 2).then(|| a2_threshold(s.r, s.beta)),
            census: match &s.census {
                Census::Known(c) => format!("known: {}", type_list(c.types().iter())),
                Census::Declared(ts) => format!("declared: {}", type_list(ts.iter())),
                Census::Unknown => "unknown".into(),
            },
            facts: s.facts.iter().copied().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRow {
    pub check: String,
    pub fiber_type: KodairaType,
    pub degrees: Vec<u32>,
    pub expected: String,
    pub got: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub max_n: u32,
    pub max_degree: u32,
    pub rows: Vec<LemmaRow>,
    pub all_passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Option<InputEcho>,
    pub minimality: Option<MinimalityReport>,
    pub census: Option<CensusReport>,
    pub summary: Option<SummaryReport>,
    pub verdict: Option<Verdict>,
    pub lemmas: Option<LemmaReport>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            input: None,
            minimality: None,
            census: None,
            summary: None,
            verdict: None,
            lemmas: None,
            warnings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(i) = &self.input {
            let src = i.source.as_deref().unwrap_or("-");
            let _ = writeln!(out, "input: {} ({})", src, i.kind);
            for (k, v) in &i.params {
                let _ = writeln!(out, "  {k} = {v}");
            }
        }
        if let Some(m) = &self.minimality {
            if m.minimal {
                let _ = writeln!(out, "minimal: yes");
            } else {
                let _ = writeln!(out, "minimal: no, at {}", m.offending.join(", "));
            }
        }
        if let Some(c) = &self.census {
            let _ = writeln!(out, "fibers (beta = {}):", c.beta);
            let _ = writeln!(
                out,
                "  {:<28} {:>4} {:>5} {:>5} {:>5}  type",
                "place", "deg", "a", "b", "delta"
            );
            for r in &c.rows {
                let _ = writeln!(
                    out,
                    "  {:<28} {:>4} {:>5} {:>5} {:>5}  {}",
                    r.place,
                    r.residue_degree,
                    r.a.to_string(),
                    r.b.to_string(),
                    r.delta,
                    r.fiber_type
                );
            }
            let _ = writeln!(
                out,
                "  sum delta = {}, sum euler = {}, 12 beta = {}",
                c.delta_sum, c.euler_sum, c.expected_sum
            );
        }
        if let Some(s) = &self.summary {
            let _ = writeln!(
                out,
                "summary: beta = {}, r = {}, A^2 = {}, chi(Omega1 x A) = {}",
                s.beta, s.r, s.a_sq, s.chi
            );
            if let Some(b) = s.r1_bound {
                let _ = writeln!(out, "  21 beta - 3 = {b}");
            }
            if let Some(t) = s.a2_threshold {
                let _ = writeln!(out, "  A^2 threshold = {t}");
            }
            let _ = writeln!(out, "  census: {}", s.census);
            if !s.facts.is_empty() {
                let fs: Vec<String> = s.facts.iter().map(fact_text).collect();
                let _ = writeln!(out, "  facts: {}", fs.join(", "));
            }
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "h1(Omega1 x A): {}", h1_text(&v.h1));
            let _ = writeln!(out, "bott vanishing: {}", bott_text(&v.bott));
            for e in &v.trace {
                let _ = writeln!(out, "  [{:?}] {}", e.rule, e.citation);
                let ins: Vec<String> = e.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "      inputs: {}", ins.join(" "));
                if let Some(n) = &e.note {
                    let _ = writeln!(out, "      note: {n}");
                }
            }
        }
        if let Some(l) = &self.lemmas {
            for r in &l.rows {
                let _ = writeln!(
                    out,
                    "{} {:<11} {:<4} {:<12} expected {:<10} got {}",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.check,
                    r.fiber_type.to_string(),
                    format!("{:?}", r.degrees),
                    r.expected,
                    r.got
                );
            }
            let passed = l.rows.iter().filter(|r| r.passed).count();
            let _ = writeln!(out, "{passed}/{} checks passed", l.rows.len());
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

fn type_list<'a>(ts: impl Iterator<Item = &'a KodairaType>) -> String {
    let v: Vec<String> = ts.map(|t| t.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn fact_text(f: &Fact) -> String {
    match f {
        Fact::NefBig(k) => format!("A - ({k})E nef and big"),
        Fact::H0GapEqualsR => "h0(L) - h0(L - E) = r".into(),
    }
}

fn h1_text(h: &H1State) -> String {
    match h {
        H1State::Zero => "zero".into(),
        H1State::Nonzero => "nonzero".into(),
        H1State::Undetermined => "undetermined".into(),
        H1State::Conditional { types, polarity } => match polarity {
            Polarity::IffPresent => format!(
                "nonzero iff a fiber of type {} occurs",
                type_list(types.iter())
            ),
            Polarity::IfPresent => format!(
                "nonzero if a fiber of type {} occurs, otherwise undetermined",
                type_list(types.iter())
            ),
        },
    }
}

fn bott_text(b: &BottState) -> String {
    match b {
        BottState::Holds => "holds".into(),
        BottState::Fails => "fails".into(),
        BottState::Undetermined => "undetermined".into(),
        BottState::Conditional { types, polarity } => match polarity {
            Polarity::IffPresent => format!(
                "holds iff no fiber of type {} occurs",
                type_list(types.iter())
            ),
            Polarity::IfPresent => format!(
                "fails if a fiber of type {} occurs, otherwise undetermined",
                type_list(types.iter())
            ),
        },
    }
}

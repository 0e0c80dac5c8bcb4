//! Subcommand implementations behind the `ellbott` binary.
//!
//! Exit codes: 0 success, 65 malformed input, 66 invalid model, 70 internal
//! failure or oracle disagreement.

pub mod model;
pub mod report;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::criteria::{decide_bott, CriteriaError};
use crate::families::{build_summary, h0_counts, FamilyError, FamilySpec, SurfaceSummary};
use crate::localgeom::{
    jacobian_scheme_degree, restriction_rank, singular_point_count, singular_scheme_degree,
    LocalEquation, SectionSpaceModel,
};
use crate::weierstrass::{
    classify_fibers, is_minimal, KodairaType, WeierstrassData, WeierstrassError,
};

pub use model::{ModelFile, ModelInput, ModelKind};
pub use report::{InputEcho, LemmaReport, LemmaRow, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_INVALID: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid model: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<WeierstrassError> for CliError {
    fn from(e: WeierstrassError) -> Self {
        match e {
            WeierstrassError::InconsistentTable(_) => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Weierstrass(w) => w.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CriteriaError> for CliError {
    fn from(e: CriteriaError) -> Self {
        match e {
            CriteriaError::InconsistentSummary(_) => CliError::Invalid(e.to_string()),
            CriteriaError::RuleDisagreement { .. } => CliError::Internal(e.to_string()),
        }
    }
}

fn read_model(path: &Path) -> Result<ModelFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    ModelFile::parse(&text)
}

fn echo(path: Option<&Path>, file: &ModelFile) -> InputEcho {
    InputEcho {
        source: path.map(|p| p.display().to_string()),
        kind: serde_json::to_value(file.kind)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        params: file.echo(),
    }
}

/// Minimality and fiber census of a Weierstrass model file.
pub fn classify_file(path: &Path) -> Result<Report, CliError> {
    let file = read_model(path)?;
    if file.kind != ModelKind::Weierstrass {
        return Err(CliError::Parse(format!(
            "classify needs kind = \"weierstrass\", got {:?}",
            file.kind
        )));
    }
    let mut report = Report::new("classify");
    report.input = Some(echo(Some(path), &file));
    let ModelInput::Weierstrass { w, .. } = file.into_input()? else {
        return Err(CliError::Internal(
            "weierstrass file produced another model".into(),
        ));
    };
    classify_into(&w, &mut report)?;
    Ok(report)
}

fn classify_into(w: &WeierstrassData, report: &mut Report) -> Result<(), CliError> {
    let min = is_minimal(w)?;
    report.minimality = Some((&min).into());
    let census = classify_fibers(w)?;
    report.census = Some((&census).into());
    Ok(())
}

/// Full verdict for a model file of any kind.
pub fn analyze_file(path: &Path) -> Result<Report, CliError> {
    let file = read_model(path)?;
    let input = echo(Some(path), &file);
    let model = file.into_input()?;
    analyze_input(model, Some(input))
}

pub fn analyze_input(model: ModelInput, input: Option<InputEcho>) -> Result<Report, CliError> {
    let mut report = Report::new("analyze");
    report.input = input;
    let summary = match model {
        ModelInput::Weierstrass { w, m } => {
            classify_into(&w, &mut report)?;
            let m =
                m.ok_or_else(|| CliError::Parse("analyze needs the polarization key `m`".into()))?;
            build_summary(&FamilySpec::WeierstrassSection { w, m })?
        }
        ModelInput::Family(spec) => {
            family_warnings(&spec, &mut report.warnings);
            build_summary(&spec)?
        }
        ModelInput::Declared(s) => s,
    };
    finish(summary, report)
}

fn finish(summary: SurfaceSummary, mut report: Report) -> Result<Report, CliError> {
    let verdict = decide_bott(&summary)?;
    if summary.beta == 0 {
        report
            .warnings
            .push("beta = 0: trivial fibration, no singular fibers".into());
    }
    report.summary = Some((&summary).into());
    report.verdict = Some(verdict);
    Ok(report)
}

fn family_warnings(spec: &FamilySpec, out: &mut Vec<String>) {
    match spec {
        FamilySpec::Hypersurface { .. } => {
            out.push(
                "A^2 = 6m + a, with the m-dependence; the m-free value 6 + a is not used".into(),
            );
            if h0_counts(spec).is_ok() {
                out.push(
                    "h0(L - E) taken as 3(m - 11 beta + 1), giving h0(L) - h0(L - E) = 3".into(),
                );
            }
        }
        FamilySpec::CompleteIntersection { .. } => {
            out.push(
                "A^2 = 8m + 2a + 2b, with the m-dependence; the m-free value 2a + 2b + 8 is not used"
                    .into(),
            );
        }
        _ => {}
    }
    if let Err(FamilyError::OutOfValidityRange { min, .. }) = h0_counts(spec) {
        out.push(format!("h0 gap not certified: needs m >= {min}"));
    }
    let declared = match spec {
        FamilySpec::DoubleCover { declared, .. }
        | FamilySpec::Hypersurface { declared, .. }
        | FamilySpec::CompleteIntersection { declared, .. } => declared.is_some(),
        FamilySpec::WeierstrassSection { .. } => true,
    };
    if !declared {
        out.push("fiber census unknown; pass declared_types to settle conditional verdicts".into());
    }
}

/// Parameters of the `family` subcommand.
#[derive(Clone, Debug, Default)]
pub struct FamilyArgs {
    pub kind: String,
    pub beta: Option<i64>,
    pub l: Option<i64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub m: i64,
    pub declared_types: Option<Vec<String>>,
}

pub fn family(args: &FamilyArgs) -> Result<Report, CliError> {
    let kind = args.kind.replace('-', "_");
    if kind == "cusp_example" {
        let beta = args
            .beta
            .ok_or_else(|| CliError::Parse("cusp_example needs --beta".into()))?;
        if !(1..=1000).contains(&beta) {
            return Err(CliError::Invalid(format!("beta = {beta} not in 1..=1000")));
        }
        if args.declared_types.is_some() || args.l.is_some() || args.a.is_some() || args.b.is_some()
        {
            return Err(CliError::Parse(
                "cusp_example takes only --beta and --m".into(),
            ));
        }
        let w = WeierstrassData::cusp_example(beta as u32)?;
        let mut params = std::collections::BTreeMap::new();
        params.insert("beta".to_string(), beta.to_string());
        params.insert("m".to_string(), args.m.to_string());
        let input = InputEcho {
            source: None,
            kind: "cusp_example".into(),
            params,
        };
        return analyze_input(ModelInput::Weierstrass { w, m: Some(args.m) }, Some(input));
    }
    let kind: ModelKind = serde_json::from_value(serde_json::Value::String(kind.clone()))
        .map_err(|_| CliError::Parse(format!("unknown family kind {:?}", args.kind)))?;
    if matches!(kind, ModelKind::Weierstrass | ModelKind::DeclaredSummary) {
        return Err(CliError::Parse(format!(
            "family takes double_cover, hypersurface, complete_intersection or cusp_example, got {:?}",
            args.kind
        )));
    }
    let file = ModelFile {
        kind,
        beta: args.beta,
        lambda: None,
        mu: None,
        m: Some(args.m),
        l: args.l,
        a: args.a,
        b: args.b,
        r: None,
        a_sq: None,
        declared_types: args.declared_types.clone(),
    };
    let input = echo(None, &file);
    analyze_input(file.into_input()?, Some(input))
}

/// Degree splits of the components of a fiber of type `t` with entries in
/// `1..=max_degree`.
fn splits(t: KodairaType, max_degree: u32) -> Vec<Vec<u32>> {
    let k = t.component_count() as usize;
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=max_degree).map(move |d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    out
}

/// Expected `(h0_fiber, h0_s0, rank)` for a degree split.
pub fn expected_restriction(t: KodairaType, degrees: &[u32]) -> (usize, usize, usize) {
    let r: u32 = degrees.iter().sum();
    let s0 = (singular_scheme_degree(t).unwrap_or(0) * singular_point_count(t)) as usize;
    let short = matches!(
        (t, r),
        (KodairaType::II, 1) | (KodairaType::III, 2) | (KodairaType::IV, 3)
    );
    let rank = if short { r as usize } else { s0 };
    (r as usize, s0, rank)
}

/// Runs the Jacobian-degree and restriction-rank tables up to the bounds.
pub fn verify_lemmas(max_n: u32, max_degree: u32) -> Result<Report, CliError> {
    if max_n == 0 || max_degree == 0 {
        return Err(CliError::Parse(
            "--max-n and --max-degree must be at least 1".into(),
        ));
    }
    if max_n > 8 || max_degree > 8 {
        return Err(CliError::Parse(
            "--max-n and --max-degree are capped at 8".into(),
        ));
    }
    let mut types = vec![
        KodairaType::I(1),
        KodairaType::II,
        KodairaType::III,
        KodairaType::IV,
    ];
    types.extend((2..=max_n).map(KodairaType::I));
    types.retain(|t| t.component_count() <= max_n);
    types.sort();

    let mut rows = Vec::new();
    for &t in &types {
        let want = singular_scheme_degree(t).map_err(|e| CliError::Internal(e.to_string()))?;
        let got = LocalEquation::model(t).and_then(|eq| jacobian_scheme_degree(&eq, 6));
        let got_s = match &got {
            Ok(d) => d.to_string(),
            Err(e) => e.to_string(),
        };
        rows.push(LemmaRow {
            check: "jacobian".into(),
            fiber_type: t,
            degrees: Vec::new(),
            expected: want.to_string(),
            got: got_s,
            passed: got == Ok(want as usize),
        });
    }
    for &t in &types {
        for degrees in splits(t, max_degree) {
            let want = expected_restriction(t, &degrees);
            let got = SectionSpaceModel::new(t, degrees.clone()).and_then(|m| restriction_rank(&m));
            let (got_s, passed) = match &got {
                Ok(r) => (
                    format!("{:?}", (r.h0_fiber, r.h0_s0, r.rank)),
                    (r.h0_fiber, r.h0_s0, r.rank) == want,
                ),
                Err(e) => (e.to_string(), false),
            };
            rows.push(LemmaRow {
                check: "restriction".into(),
                fiber_type: t,
                degrees,
                expected: format!("{want:?}"),
                got: got_s,
                passed,
            });
        }
    }
    let all_passed = rows.iter().all(|r| r.passed);
    let mut report = Report::new("verify-lemmas");
    report.lemmas = Some(LemmaReport {
        max_n,
        max_degree,
        rows,
        all_passed,
    });
    Ok(report)
}

pub type BatchItem = (PathBuf, Result<Report, CliError>);

/// Analyzes every `*.toml` file of `dir`, in name order.
pub fn batch(dir: &Path) -> Result<Vec<BatchItem>, CliError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|p| {
            let r = analyze_file(&p);
            (p, r)
        })
        .collect())
}

//! The four families of polarized elliptic surfaces and their numerical
//! summaries.
//!
//! | family                              | β     | r = A.E | A²           |
//! |-------------------------------------|-------|---------|--------------|
//! | Weierstrass model, `A = A0 + mE`    | β     | 1       | 2m − β       |
//! | double cover of P¹×P¹, `O(m,1)`     | l     | 2       | 4m           |
//! | hypersurface `(a,3)` in P¹×P²       | a     | 3       | 6m + a       |
//! | complete intersection `(a,2),(b,2)` | a + b | 4       | 8m + 2a + 2b |

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criteria::a2_threshold;
use crate::intersect::{intersection_number, CycleClass, IntersectError, SubvarietySpec};
use crate::weierstrass::{
    classify_fibers, FiberCensus, KodairaType, WeierstrassData, WeierstrassError, MAX_BETA,
};

/// Bound on `|m|`, keeping every derived quantity inside `i64`.
pub const MAX_M: i64 = 1_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error("A is not ample: {0}")]
    AmplenessRangeViolated(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("h0 closed forms need m >= {min} for this family (m = {m})")]
    OutOfValidityRange { m: i64, min: i64 },
    #[error("h0 closed forms are only available for the double cover and the hypersurface")]
    NoClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    WeierstrassSection {
        w: WeierstrassData,
        m: i64,
    },
    DoubleCover {
        l: u32,
        m: i64,
        declared: Option<BTreeSet<KodairaType>>,
    },
    Hypersurface {
        a: u32,
        m: i64,
        declared: Option<BTreeSet<KodairaType>>,
    },
    CompleteIntersection {
        a: u32,
        b: u32,
        m: i64,
        declared: Option<BTreeSet<KodairaType>>,
    },
}

impl FamilySpec {
    pub fn m(&self) -> i64 {
        match self {
            FamilySpec::WeierstrassSection { m, .. }
            | FamilySpec::DoubleCover { m, .. }
            | FamilySpec::Hypersurface { m, .. }
            | FamilySpec::CompleteIntersection { m, .. } => *m,
        }
    }

    pub fn beta(&self) -> u32 {
        match self {
            FamilySpec::WeierstrassSection { w, .. } => w.beta(),
            FamilySpec::DoubleCover { l, .. } => *l,
            FamilySpec::Hypersurface { a, .. } => *a,
            FamilySpec::CompleteIntersection { a, b, .. } => a + b,
        }
    }

    pub fn r(&self) -> u32 {
        match self {
            FamilySpec::WeierstrassSection { .. } => 1,
            FamilySpec::DoubleCover { .. } => 2,
            FamilySpec::Hypersurface { .. } => 3,
            FamilySpec::CompleteIntersection { .. } => 4,
        }
    }

    pub fn origin(&self) -> Origin {
        let m = self.m();
        match self {
            FamilySpec::WeierstrassSection { w, .. } => {
                Origin::WeierstrassSection { beta: w.beta(), m }
            }
            FamilySpec::DoubleCover { l, .. } => Origin::DoubleCover { l: *l, m },
            FamilySpec::Hypersurface { a, .. } => Origin::Hypersurface { a: *a, m },
            FamilySpec::CompleteIntersection { a, b, .. } => {
                Origin::CompleteIntersection { a: *a, b: *b, m }
            }
        }
    }
}

/// Where a summary came from; family origins enable the family-level rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    WeierstrassSection { beta: u32, m: i64 },
    DoubleCover { l: u32, m: i64 },
    Hypersurface { a: u32, m: i64 },
    CompleteIntersection { a: u32, b: u32, m: i64 },
    Declared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Census {
    Known(FiberCensus),
    /// Exactly these singular fiber types occur.
    Declared(BTreeSet<KodairaType>),
    Unknown,
}

impl Census {
    /// Whether a fiber of type `t` occurs, if that is known.
    pub fn presence(&self, t: KodairaType) -> Option<bool> {
        match self {
            Census::Known(c) => Some(c.contains(t)),
            Census::Declared(s) => Some(s.contains(&t)),
            Census::Unknown => None,
        }
    }

    pub fn types(&self) -> Option<BTreeSet<KodairaType>> {
        match self {
            Census::Known(c) => Some(c.types()),
            Census::Declared(s) => Some(s.clone()),
            Census::Unknown => None,
        }
    }
}

/// Certified facts about the polarization. `NefBig(k)` means `A - kE` is
/// nef and big; since `E` is nef it also certifies every smaller `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fact {
    NefBig(i64),
    H0GapEqualsR,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub beta: u32,
    pub r: u32,
    pub a_sq: i64,
    pub census: Census,
    pub facts: BTreeSet<Fact>,
    pub origin: Origin,
}

impl SurfaceSummary {
    /// A summary stated directly by the user. Only facts that follow from
    /// `(β, r, A²)` alone are attached.
    pub fn declared(beta: u32, r: u32, a_sq: i64, census: Census) -> Self {
        SurfaceSummary {
            beta,
            r,
            a_sq,
            census,
            facts: numeric_facts(beta, r, a_sq),
            origin: Origin::Declared,
        }
    }

    /// Largest certified `k` with `A - kE` nef and big.
    pub fn nef_big_bound(&self) -> Option<i64> {
        self.facts
            .iter()
            .filter_map(|f| match f {
                Fact::NefBig(k) => Some(*k),
                Fact::H0GapEqualsR => None,
            })
            .max()
    }

    pub fn nef_big_certified(&self, k: i64) -> bool {
        self.nef_big_bound().is_some_and(|b| b >= k)
    }

    pub fn has_h0_gap(&self) -> bool {
        self.facts.contains(&Fact::H0GapEqualsR)
    }
}

/// Facts implied by the numbers alone: for `r = 1`, `A - βE` is nef and big
/// once `A² >= 3β`; for `r >= 2`, `A - (12β-2)E` is nef and big once `A²`
/// reaches the threshold.
pub fn numeric_facts(beta: u32, r: u32, a_sq: i64) -> BTreeSet<Fact> {
    let b = beta as i64;
    let mut out = BTreeSet::new();
    if r == 1 && a_sq >= 3 * b {
        out.insert(Fact::NefBig(b));
        out.insert(Fact::NefBig(b - 2));
    }
    if r >= 2 && a_sq >= a2_threshold(r, beta) {
        out.insert(Fact::NefBig(12 * b - 2));
    }
    out
}

fn check_params(spec: &FamilySpec) -> Result<(), FamilyError> {
    let m = spec.m();
    if m.abs() > MAX_M {
        return Err(FamilyError::ParameterOutOfRange(format!("|m| > {MAX_M}")));
    }
    let positive = |name: &str, v: u32| {
        if v == 0 || v > MAX_BETA {
            Err(FamilyError::ParameterOutOfRange(format!(
                "{name} = {v} not in 1..={MAX_BETA}"
            )))
        } else {
            Ok(())
        }
    };
    match spec {
        FamilySpec::WeierstrassSection { w, m } => {
            if *m <= w.beta() as i64 {
                return Err(FamilyError::AmplenessRangeViolated(format!(
                    "A.A0 = m - β = {} must be positive",
                    m - w.beta() as i64
                )));
            }
        }
        FamilySpec::DoubleCover { l, .. } => positive("l", *l)?,
        FamilySpec::Hypersurface { a, .. } => positive("a", *a)?,
        FamilySpec::CompleteIntersection { a, b, .. } => {
            positive("a", *a)?;
            positive("b", *b)?;
        }
    }
    if !matches!(spec, FamilySpec::WeierstrassSection { .. }) && m < 1 {
        return Err(FamilyError::AmplenessRangeViolated(format!(
            "O(m,1) needs m >= 1, got {m}"
        )));
    }
    Ok(())
}

fn ambient_spec(spec: &FamilySpec) -> Option<SubvarietySpec> {
    match spec {
        FamilySpec::WeierstrassSection { .. } => None,
        FamilySpec::DoubleCover { .. } => Some(SubvarietySpec::double_cover_p1xp1()),
        FamilySpec::Hypersurface { a, .. } => Some(SubvarietySpec::hypersurface(*a as i64)),
        FamilySpec::CompleteIntersection { a, b, .. } => {
            Some(SubvarietySpec::complete_intersection(*a as i64, *b as i64))
        }
    }
}

/// `(A.E, A²)` of the polarization.
pub fn polarization_numbers(spec: &FamilySpec) -> Result<(i64, i64), FamilyError> {
    check_params(spec)?;
    match ambient_spec(spec) {
        None => Ok((1, 2 * spec.m() - spec.beta() as i64)),
        Some(x) => {
            let a = CycleClass::divisor(spec.m(), 1);
            let e = CycleClass::d();
            Ok((
                intersection_number(&x, &a, &e)?,
                intersection_number(&x, &a, &a)?,
            ))
        }
    }
}

pub fn build_summary(spec: &FamilySpec) -> Result<SurfaceSummary, FamilyError> {
    let (r, a_sq) = polarization_numbers(spec)?;
    let census = match spec {
        FamilySpec::WeierstrassSection { w, .. } => {
            let census = classify_fibers(w)?;
            if let Some(t) = census.types().into_iter().find(|t| !t.is_irreducible()) {
                return Err(FamilyError::AmplenessRangeViolated(format!(
                    "A0 + mE has degree 0 on the components of a type {t} fiber missed by the section"
                )));
            }
            Census::Known(census)
        }
        FamilySpec::DoubleCover { declared, .. }
        | FamilySpec::Hypersurface { declared, .. }
        | FamilySpec::CompleteIntersection { declared, .. } => match declared {
            Some(s) => Census::Declared(s.clone()),
            None => Census::Unknown,
        },
    };
    let mut facts = nef_big_facts(spec)?;
    if h0_gap_fact(spec).unwrap_or(false) {
        facts.insert(Fact::H0GapEqualsR);
    }
    Ok(SurfaceSummary {
        beta: spec.beta(),
        r: r as u32,
        a_sq,
        census,
        facts,
        origin: spec.origin(),
    })
}

/// `(h0(L), h0(L - E))` for `L = A - (11β - 1)E`.
pub fn h0_counts(spec: &FamilySpec) -> Result<(i64, i64), FamilyError> {
    check_params(spec)?;
    let c = match spec {
        FamilySpec::DoubleCover { .. } => 2,
        FamilySpec::Hypersurface { .. } => 3,
        _ => return Err(FamilyError::NoClosedForm),
    };
    let beta = spec.beta() as i64;
    let m = spec.m();
    let min = 11 * beta - 1;
    if m < min {
        return Err(FamilyError::OutOfValidityRange { m, min });
    }
    Ok(h0_closed_forms(c, spec.beta(), m))
}

/// The closed forms `(c(m - (11β - 1) + 1), c(m - 11β + 1))` evaluated
/// formally; they count sections only for `m >= 11β - 1`.
pub fn h0_closed_forms(c: i64, beta: u32, m: i64) -> (i64, i64) {
    let beta = beta as i64;
    (c * (m - (11 * beta - 1) + 1), c * (m - 11 * beta + 1))
}

/// Whether `h0(L) - h0(L - E) = r` is certified by the closed forms.
pub fn h0_gap_fact(spec: &FamilySpec) -> Result<bool, FamilyError> {
    let (h, he) = h0_counts(spec)?;
    Ok(h - he == spec.r() as i64)
}

pub fn nef_big_facts(spec: &FamilySpec) -> Result<BTreeSet<Fact>, FamilyError> {
    let (r, a_sq) = polarization_numbers(spec)?;
    let beta = spec.beta() as i64;
    let mut out = numeric_facts(spec.beta(), r as u32, a_sq);
    if !matches!(spec, FamilySpec::WeierstrassSection { .. }) {
        // A - kE = O(m - k, 1) is ample once m - k > 0.
        for k in [beta - 2, beta, 12 * beta - 2] {
            if spec.m() - k > 0 {
                out.insert(Fact::NefBig(k));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::UniPoly;

    fn cusp(beta: u32, m: i64) -> FamilySpec {
        FamilySpec::WeierstrassSection {
            w: WeierstrassData::cusp_example(beta).unwrap(),
            m,
        }
    }

    #[test]
    fn weierstrass_summary() {
        let s = build_summary(&cusp(1, 12)).unwrap();
        assert_eq!((s.beta, s.r, s.a_sq), (1, 1, 23));
        assert_eq!(s.census.presence(KodairaType::II), Some(true));
        assert!(s.nef_big_certified(1));
        assert_eq!(s.origin, Origin::WeierstrassSection { beta: 1, m: 12 });
    }

    #[test]
    fn double_cover_summary() {
        let spec = FamilySpec::DoubleCover {
            l: 1,
            m: 10,
            declared: None,
        };
        let s = build_summary(&spec).unwrap();
        assert_eq!((s.beta, s.r, s.a_sq), (1, 2, 40));
        assert_eq!(s.census, Census::Unknown);
        assert!(s.facts.contains(&Fact::NefBig(1)));
        assert!(!s.facts.contains(&Fact::NefBig(10)));
        assert!(s.has_h0_gap());
        assert_eq!(h0_counts(&spec).unwrap(), (2, 0));
    }

    #[test]
    fn complete_intersection_summary() {
        let s = build_summary(&FamilySpec::CompleteIntersection {
            a: 1,
            b: 1,
            m: 23,
            declared: None,
        })
        .unwrap();
        assert_eq!((s.beta, s.r, s.a_sq), (2, 4, 188));
        assert!(s.nef_big_certified(22));
        assert!(!s.has_h0_gap());
    }

    #[test]
    fn h0_gaps() {
        let hs = FamilySpec::Hypersurface {
            a: 1,
            m: 10,
            declared: None,
        };
        assert_eq!(h0_counts(&hs).unwrap(), (3, 0));
        assert!(h0_gap_fact(&hs).unwrap());
        let (h, he) = h0_closed_forms(2, 2, 20);
        assert_eq!(h - he, 2);
        let dc = FamilySpec::DoubleCover {
            l: 2,
            m: 21,
            declared: None,
        };
        assert_eq!(h0_counts(&dc).unwrap(), (2, 0));
        let low = FamilySpec::DoubleCover {
            l: 2,
            m: 20,
            declared: None,
        };
        assert_eq!(
            h0_gap_fact(&low),
            Err(FamilyError::OutOfValidityRange { m: 20, min: 21 })
        );
        assert_eq!(
            h0_counts(&FamilySpec::CompleteIntersection {
                a: 1,
                b: 1,
                m: 30,
                declared: None
            }),
            Err(FamilyError::NoClosedForm)
        );
    }

    #[test]
    fn threshold_fact() {
        let f = numeric_facts(1, 2, 48);
        assert!(f.contains(&Fact::NefBig(10)));
        assert!(!numeric_facts(1, 2, 47).contains(&Fact::NefBig(10)));
    }

    #[test]
    fn ampleness_range() {
        assert!(matches!(
            build_summary(&FamilySpec::DoubleCover {
                l: 1,
                m: 0,
                declared: None
            }),
            Err(FamilyError::AmplenessRangeViolated(_))
        ));
        assert!(matches!(
            build_summary(&cusp(2, 2)),
            Err(FamilyError::AmplenessRangeViolated(_))
        ));
        assert!(matches!(
            build_summary(&FamilySpec::Hypersurface {
                a: 0,
                m: 5,
                declared: None
            }),
            Err(FamilyError::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn reducible_fiber_blocks_section_polarization() {
        // λ = t + t^4, μ = t^2 + t^6 has a type III fiber at t = 0.
        let w = WeierstrassData::new(
            1,
            UniPoly::from_ints(&[0, 1, 0, 0, 1]),
            UniPoly::from_ints(&[0, 0, 1, 0, 0, 0, 1]),
        )
        .unwrap();
        assert!(matches!(
            build_summary(&FamilySpec::WeierstrassSection { w, m: 20 }),
            Err(FamilyError::AmplenessRangeViolated(_))
        ));
    }

    #[test]
    fn parity_of_a_squared() {
        for m in 1..8 {
            for x in 1..5u32 {
                let dc = FamilySpec::DoubleCover {
                    l: x,
                    m,
                    declared: None,
                };
                assert_eq!(polarization_numbers(&dc).unwrap().1 % 2, 0);
                let hs = FamilySpec::Hypersurface {
                    a: x,
                    m,
                    declared: None,
                };
                assert_eq!(
                    polarization_numbers(&hs).unwrap().1.rem_euclid(2),
                    (x % 2) as i64
                );
            }
        }
    }
}

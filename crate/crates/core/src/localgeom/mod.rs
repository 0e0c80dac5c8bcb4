//! Local oracles for the singular points of Kodaira fibers.
//!
//! Two computations, both by exact linear algebra on truncated monomial
//! spaces:
//!
//! * the length of `Q[x,y]_(x,y) / (f_x, f_y)` for a local equation `f`;
//! * the rank of the restriction from sections on a fiber (modelled as
//!   tuples of polynomials on the components with gluing conditions) to the
//!   singular scheme `S0` cut out by the Jacobian ideal.
//!
//! The restriction is computed through lifts: a section on the fiber near a
//! singular point is the restriction of some plane function `h`, determined
//! modulo the local equation, which lies in the Jacobian ideal. So the image
//! in `O/J` is `h mod J`, and only `h mod m^K` matters once `m^K ⊂ J`.

mod bivariate;

pub use bivariate::{monomial_index, monomials_below, BiPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{rat, Rational, UniPoly};
use crate::linalg::{self, Echelon};
use crate::weierstrass::KodairaType;

/// Truncation cap for the stabilization loops.
pub const MAX_TRUNCATION: u32 = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalGeomError {
    #[error("{0} is not singular at the origin")]
    NotSingular(String),
    #[error("quotient dimension still changing at truncation {truncation} (last value {last})")]
    NotStabilized { truncation: u32, last: usize },
    #[error("type {fiber_type} has {expected} components, got {got} degrees")]
    UnsupportedSplit {
        fiber_type: KodairaType,
        expected: u32,
        got: usize,
    },
    #[error("component degrees must be positive")]
    ZeroDegree,
    #[error("branch weights must be nonzero")]
    ZeroWeight,
    #[error("type {0} has no singular point")]
    SmoothFiber(KodairaType),
    #[error("lift system disagrees with the gluing conditions: {0}")]
    InconsistentModel(String),
}

/// A plane curve germ at the origin modelling one singular point of a fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalEquation {
    f: BiPoly,
    label: KodairaType,
}

impl LocalEquation {
    pub fn new(f: BiPoly, label: KodairaType) -> Result<Self, LocalGeomError> {
        if !f.eval_origin().is_zero()
            || !f.dx().eval_origin().is_zero()
            || !f.dy().eval_origin().is_zero()
        {
            return Err(LocalGeomError::NotSingular(f.to_string()));
        }
        Ok(LocalEquation { f, label })
    }

    /// Standard local equation: `x^2 - y^2` for `I1`, `xy` for `I_n` with
    /// `n >= 2`, `x^2 - y^3`, `x(x - y^2)`, `x(x^2 - y^2)`.
    pub fn model(t: KodairaType) -> Result<Self, LocalGeomError> {
        let f = match t {
            KodairaType::I(0) => return Err(LocalGeomError::SmoothFiber(t)),
            KodairaType::I(1) => BiPoly::from_int_terms(&[((2, 0), 1), ((0, 2), -1)]),
            KodairaType::I(_) => BiPoly::monomial(1, 1),
            KodairaType::II => BiPoly::from_int_terms(&[((2, 0), 1), ((0, 3), -1)]),
            KodairaType::III => BiPoly::from_int_terms(&[((2, 0), 1), ((1, 2), -1)]),
            KodairaType::IV => BiPoly::from_int_terms(&[((3, 0), 1), ((1, 2), -1)]),
        };
        Self::new(f, t)
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn label(&self) -> KodairaType {
        self.label
    }

    pub fn jacobian_ideal(&self) -> Vec<BiPoly> {
        vec![self.f.dx(), self.f.dy()]
    }
}

/// Rows spanning `(gens) + m^n` modulo `m^n`, as vectors over the monomials
/// of degree `< n`.
fn ideal_span(gens: &[BiPoly], n: u32) -> Echelon {
    let mons = monomials_below(n);
    let mut e = Echelon::new();
    for g in gens {
        let Some(ord) = g.order() else { continue };
        for &(i, j) in &mons {
            if i + j + ord >= n {
                continue;
            }
            let prod = g.mul(&BiPoly::monomial(i, j)).truncate(n);
            e.insert(to_row(&prod));
        }
    }
    e
}

fn to_row(p: &BiPoly) -> linalg::SparseRow {
    let mut dense: Vec<(usize, Rational)> = p
        .terms()
        .map(|((i, j), c)| (monomial_index(*i, *j), c.clone()))
        .collect();
    dense.sort_by_key(|(k, _)| *k);
    let len = dense.last().map_or(0, |(k, _)| k + 1);
    let mut full = vec![Rational::zero(); len];
    for (k, c) in dense {
        full[k] = c;
    }
    linalg::primitive_row(&full)
}

/// `dim Q[x,y] / (gens + m^n)`.
pub fn local_quotient_dim(gens: &[BiPoly], n: u32) -> usize {
    monomials_below(n).len() - ideal_span(gens, n).rank()
}

/// Stabilized `dim Q[x,y]/(gens + m^N)`, doubling `N` from `start` until two
/// consecutive values agree. Returns the value and the truncation reached.
fn stabilized_dim(gens: &[BiPoly], start: u32) -> Result<(usize, u32), LocalGeomError> {
    let mut n = start.max(1);
    let mut prev = local_quotient_dim(gens, n);
    while n < MAX_TRUNCATION {
        let next_n = (2 * n).min(MAX_TRUNCATION);
        let next = local_quotient_dim(gens, next_n);
        if next == prev {
            return Ok((prev, n));
        }
        n = next_n;
        prev = next;
    }
    Err(LocalGeomError::NotStabilized {
        truncation: n,
        last: prev,
    })
}

/// Length of the Jacobian algebra of `eq` at the origin.
pub fn jacobian_scheme_degree(
    eq: &LocalEquation,
    truncation: u32,
) -> Result<usize, LocalGeomError> {
    stabilized_dim(&eq.jacobian_ideal(), truncation).map(|(d, _)| d)
}

/// Degree of the singular scheme at one singular point of a fiber of type `t`.
pub fn singular_scheme_degree(t: KodairaType) -> Result<u32, LocalGeomError> {
    match t {
        KodairaType::I(0) => Err(LocalGeomError::SmoothFiber(t)),
        KodairaType::I(_) => Ok(1),
        KodairaType::II => Ok(2),
        KodairaType::III => Ok(3),
        KodairaType::IV => Ok(4),
    }
}

/// Number of singular points on a fiber of type `t`.
pub fn singular_point_count(t: KodairaType) -> u32 {
    match t {
        KodairaType::I(n) => n,
        _ => 1,
    }
}

/// Smallest `K` with `m^K` inside the ideal.
pub fn nilpotency_index(gens: &[BiPoly]) -> Result<u32, LocalGeomError> {
    let mut prev = local_quotient_dim(gens, 1);
    for n in 1..MAX_TRUNCATION {
        let next = local_quotient_dim(gens, n + 1);
        if next == prev {
            return Ok(n);
        }
        prev = next;
    }
    Err(LocalGeomError::NotStabilized {
        truncation: MAX_TRUNCATION,
        last: prev,
    })
}

/// `Σ weight * f_component^(order)(at) = 0` on the component sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCondition {
    pub terms: Vec<ConditionTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionTerm {
    pub component: usize,
    pub order: u32,
    pub at: Rational,
    pub weight: Rational,
}

impl ConditionTerm {
    fn new(component: usize, order: u32, at: i64, weight: Rational) -> Self {
        ConditionTerm {
            component,
            order,
            at: rat(at),
            weight,
        }
    }
}

/// One branch through a singular point: component `component` near `s = at`
/// is mapped into the local plane by `u = s - at -> (px(u), py(u))`.
#[derive(Clone, Debug)]
struct Branch {
    component: usize,
    at: Rational,
    px: UniPoly,
    py: UniPoly,
}

#[derive(Clone, Debug)]
struct SingularPoint {
    ideal: Vec<BiPoly>,
    branches: Vec<Branch>,
}

/// Sections of a degree-`r` line bundle on a Kodaira fiber. Component `i` is
/// a line with affine coordinate `s` carrying polynomials of degree
/// `degrees[i]`; the matching conditions cut out the sections of the fiber.
#[derive(Clone, Debug)]
pub struct SectionSpaceModel {
    fiber_type: KodairaType,
    degrees: Vec<u32>,
    matching_conditions: Vec<LinearCondition>,
    points: Vec<SingularPoint>,
}

fn lin(c: Rational) -> UniPoly {
    UniPoly::monomial(c, 1)
}

impl SectionSpaceModel {
    /// Default model; type IV uses unit branch weights.
    pub fn new(fiber_type: KodairaType, degrees: Vec<u32>) -> Result<Self, LocalGeomError> {
        Self::with_weights(fiber_type, degrees, [rat(1), rat(1), rat(1)])
    }

    /// Type IV with the derivative condition `Σ e_i f_i'(0) = 0`. The weights
    /// are ignored for the other types.
    pub fn with_weights(
        fiber_type: KodairaType,
        degrees: Vec<u32>,
        weights: [Rational; 3],
    ) -> Result<Self, LocalGeomError> {
        let expected = fiber_type.component_count();
        if expected == 0 {
            return Err(LocalGeomError::SmoothFiber(fiber_type));
        }
        if degrees.len() != expected as usize {
            return Err(LocalGeomError::UnsupportedSplit {
                fiber_type,
                expected,
                got: degrees.len(),
            });
        }
        if degrees.contains(&0) {
            return Err(LocalGeomError::ZeroDegree);
        }
        if weights.iter().any(Zero::is_zero) {
            return Err(LocalGeomError::ZeroWeight);
        }
        let one = || rat(1);
        let neg = || rat(-1);
        let u = || lin(rat(1));
        let jac = |t| LocalEquation::model(t).map(|e| e.jacobian_ideal());
        let (conds, points) = match fiber_type {
            KodairaType::II => (
                vec![LinearCondition {
                    terms: vec![ConditionTerm::new(0, 1, 0, one())],
                }],
                vec![SingularPoint {
                    ideal: jac(fiber_type)?,
                    branches: vec![Branch {
                        component: 0,
                        at: rat(0),
                        px: UniPoly::monomial(rat(1), 3),
                        py: UniPoly::monomial(rat(1), 2),
                    }],
                }],
            ),
            KodairaType::III => (
                (0..2)
                    .map(|k| LinearCondition {
                        terms: vec![
                            ConditionTerm::new(0, k, 0, one()),
                            ConditionTerm::new(1, k, 0, neg()),
                        ],
                    })
                    .collect(),
                vec![SingularPoint {
                    ideal: jac(fiber_type)?,
                    branches: vec![
                        Branch {
                            component: 0,
                            at: rat(0),
                            px: UniPoly::zero(),
                            py: u(),
                        },
                        Branch {
                            component: 1,
                            at: rat(0),
                            px: UniPoly::monomial(rat(1), 2),
                            py: u(),
                        },
                    ],
                }],
            ),
            KodairaType::IV => {
                // Branch i runs along direction d_i at speed a_i. Plane
                // functions satisfy -2 D_0 + D_1 + D_2 = 0 on the directional
                // derivatives, so a_0 = -2/e_0 and a_i = 1/e_i turn that into
                // Σ e_i f_i'(0) = 0.
                let speeds = [
                    rat(-2) / &weights[0],
                    rat(1) / &weights[1],
                    rat(1) / &weights[2],
                ];
                let dirs = [(0, 1), (1, 1), (-1, 1)];
                let branches = (0..3)
                    .map(|i| Branch {
                        component: i,
                        at: rat(0),
                        px: lin(&speeds[i] * rat(dirs[i].0)),
                        py: lin(&speeds[i] * rat(dirs[i].1)),
                    })
                    .collect();
                let mut conds: Vec<LinearCondition> = (1..3)
                    .map(|i| LinearCondition {
                        terms: vec![
                            ConditionTerm::new(0, 0, 0, one()),
                            ConditionTerm::new(i, 0, 0, neg()),
                        ],
                    })
                    .collect();
                conds.push(LinearCondition {
                    terms: (0..3)
                        .map(|i| ConditionTerm::new(i, 1, 0, weights[i].clone()))
                        .collect(),
                });
                (
                    conds,
                    vec![SingularPoint {
                        ideal: jac(fiber_type)?,
                        branches,
                    }],
                )
            }
            KodairaType::I(n) => {
                // Node j joins component j at s = 1 (along the x-axis) to
                // component j+1 at s = 0 (along the y-axis).
                let n = n as usize;
                let ideal =
                    LocalEquation::new(BiPoly::monomial(1, 1), fiber_type)?.jacobian_ideal();
                let mut conds = Vec::with_capacity(n);
                let mut points = Vec::with_capacity(n);
                for j in 0..n {
                    let next = (j + 1) % n;
                    conds.push(LinearCondition {
                        terms: vec![
                            ConditionTerm::new(j, 0, 1, one()),
                            ConditionTerm::new(next, 0, 0, neg()),
                        ],
                    });
                    points.push(SingularPoint {
                        ideal: ideal.clone(),
                        branches: vec![
                            Branch {
                                component: j,
                                at: rat(1),
                                px: u(),
                                py: UniPoly::zero(),
                            },
                            Branch {
                                component: next,
                                at: rat(0),
                                px: UniPoly::zero(),
                                py: u(),
                            },
                        ],
                    });
                }
                (conds, points)
            }
        };
        Ok(SectionSpaceModel {
            fiber_type,
            degrees,
            matching_conditions: conds,
            points,
        })
    }

    pub fn fiber_type(&self) -> KodairaType {
        self.fiber_type
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }

    pub fn matching_conditions(&self) -> &[LinearCondition] {
        &self.matching_conditions
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.degrees.len() + 1);
        let mut acc = 0;
        for &d in &self.degrees {
            off.push(acc);
            acc += d as usize + 1;
        }
        off.push(acc);
        off
    }

    fn condition_rows(&self) -> Vec<Vec<Rational>> {
        let off = self.offsets();
        let nf = off[self.degrees.len()];
        self.matching_conditions
            .iter()
            .map(|c| {
                let mut row = vec![Rational::zero(); nf];
                for t in &c.terms {
                    for m in 0..=self.degrees[t.component] {
                        row[off[t.component] + m as usize] +=
                            &t.weight * taylor_coeff(m, t.order, &t.at) * factorial(t.order);
                    }
                }
                row
            })
            .collect()
    }
}

fn factorial(k: u32) -> Rational {
    Rational::from_integer((1..=k).map(BigInt::from).product())
}

fn binomial(m: u32, k: u32) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Coefficient of `u^k` in `(at + u)^m`.
fn taylor_coeff(m: u32, k: u32, at: &Rational) -> Rational {
    if k > m {
        return Rational::zero();
    }
    Rational::from_integer(binomial(m, k)) * num_traits::pow(at.clone(), (m - k) as usize)
}

/// Dimensions and rank of the restriction from fiber sections to `S0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionRank {
    pub h0_fiber: usize,
    pub h0_s0: usize,
    pub rank: usize,
}

impl RestrictionRank {
    pub fn is_surjective(&self) -> bool {
        self.rank == self.h0_s0
    }
}

pub fn restriction_rank(model: &SectionSpaceModel) -> Result<RestrictionRank, LocalGeomError> {
    let off = model.offsets();
    let nf = off[model.degrees.len()];
    let cond_rows = model.condition_rows();
    let h0_fiber = nf - linalg::rank(&cond_rows);

    // Column layout: f coefficients, then h coefficients point by point.
    let mut ks = Vec::new();
    let mut h_off = Vec::new();
    let mut ncols = nf;
    for p in &model.points {
        let k = nilpotency_index(&p.ideal)?;
        h_off.push(ncols);
        ncols += monomials_below(k).len();
        ks.push(k);
    }

    let mut system = Vec::new();
    for (pi, p) in model.points.iter().enumerate() {
        let k = ks[pi];
        let mons = monomials_below(k);
        for b in &p.branches {
            let v = b.px.coeffs().iter().position(|c| !c.is_zero());
            let w = b.py.coeffs().iter().position(|c| !c.is_zero());
            let vmin = match (v, w) {
                (Some(a), Some(c)) => a.min(c),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => {
                    return Err(LocalGeomError::InconsistentModel(
                        "degenerate branch".into(),
                    ))
                }
            };
            let jet = k as usize * vmin;
            let images: Vec<UniPoly> = mons
                .iter()
                .map(|&(i, j)| BiPoly::monomial(i, j).substitute(&b.px, &b.py, jet))
                .collect();
            for t in 0..jet {
                let mut row = vec![Rational::zero(); ncols];
                for (mi, img) in images.iter().enumerate() {
                    row[h_off[pi] + mi] = img.coeff(t);
                }
                let c = b.component;
                for m in 0..=model.degrees[c] {
                    row[off[c] + m as usize] -= taylor_coeff(m, t as u32, &b.at);
                }
                system.push(row);
            }
        }
    }

    let kernel = linalg::nullspace(&system, ncols);

    // Every lifted section satisfies the gluing conditions, and every glued
    // section lifts.
    let f_parts: Vec<Vec<Rational>> = kernel.iter().map(|v| v[..nf].to_vec()).collect();
    for fp in &f_parts {
        for c in &cond_rows {
            let dot: Rational = fp.iter().zip(c).map(|(a, b)| a * b).sum();
            if !dot.is_zero() {
                return Err(LocalGeomError::InconsistentModel(
                    "a lifted section violates the gluing conditions".into(),
                ));
            }
        }
    }
    if linalg::rank(&f_parts) != h0_fiber {
        return Err(LocalGeomError::InconsistentModel(format!(
            "lifts see {} sections, gluing conditions allow {}",
            linalg::rank(&f_parts),
            h0_fiber
        )));
    }

    let mut ideal_rows = Vec::new();
    let mut h0_s0 = 0;
    for (pi, p) in model.points.iter().enumerate() {
        let k = ks[pi];
        let nm = monomials_below(k).len();
        let span = ideal_rows_dense(&p.ideal, k);
        h0_s0 += nm - linalg::rank(&span);
        for r in span {
            let mut row = vec![Rational::zero(); ncols - nf];
            row[h_off[pi] - nf..h_off[pi] - nf + nm].clone_from_slice(&r);
            ideal_rows.push(row);
        }
    }
    let ideal_rank = linalg::rank(&ideal_rows);

    // Lifts of the zero section must vanish on S0.
    let mut with_zero_f = system.clone();
    for c in 0..nf {
        let mut row = vec![Rational::zero(); ncols];
        row[c] = rat(1);
        with_zero_f.push(row);
    }
    let ambiguity: Vec<Vec<Rational>> = linalg::nullspace(&with_zero_f, ncols)
        .into_iter()
        .map(|v| v[nf..].to_vec())
        .collect();
    let mut stacked = ideal_rows.clone();
    stacked.extend(ambiguity);
    if linalg::rank(&stacked) != ideal_rank {
        return Err(LocalGeomError::InconsistentModel(
            "lift is not well defined modulo the ideal".into(),
        ));
    }

    let mut stacked = ideal_rows;
    stacked.extend(kernel.iter().map(|v| v[nf..].to_vec()));
    let rank = linalg::rank(&stacked) - ideal_rank;
    Ok(RestrictionRank {
        h0_fiber,
        h0_s0,
        rank,
    })
}

fn ideal_rows_dense(gens: &[BiPoly], k: u32) -> Vec<Vec<Rational>> {
    let mons = monomials_below(k);
    let mut rows = Vec::new();
    for g in gens {
        for &(i, j) in &mons {
            let prod = g.mul(&BiPoly::monomial(i, j)).truncate(k);
            if prod.is_zero() {
                continue;
            }
            let mut row = vec![Rational::zero(); mons.len()];
            for ((a, b), c) in prod.terms() {
                row[monomial_index(*a, *b)] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Whether two ideals agree in the local ring, compared modulo `m^n` for
/// `n` past both nilpotency indices.
pub fn same_local_ideal(a: &[BiPoly], b: &[BiPoly]) -> Result<bool, LocalGeomError> {
    let n = nilpotency_index(a)?.max(nilpotency_index(b)?) + 1;
    let ra = ideal_rows_dense(a, n);
    let rb = ideal_rows_dense(b, n);
    let r = linalg::rank(&ra);
    if r != linalg::rank(&rb) {
        return Ok(false);
    }
    let mut both = ra;
    both.extend(rb);
    Ok(linalg::rank(&both) == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use KodairaType::*;

    fn half() -> Rational {
        Rational::new(1.into(), 2.into())
    }

    fn rr(t: KodairaType, d: &[u32]) -> (usize, usize, usize) {
        let r = restriction_rank(&SectionSpaceModel::new(t, d.to_vec()).unwrap()).unwrap();
        (r.h0_fiber, r.h0_s0, r.rank)
    }

    #[test]
    fn jacobian_degrees_of_models() {
        for (t, want) in [(I(1), 1), (II, 2), (III, 3), (IV, 4), (I(3), 1)] {
            let eq = LocalEquation::model(t).unwrap();
            assert_eq!(jacobian_scheme_degree(&eq, 6).unwrap(), want, "{t}");
            assert_eq!(singular_scheme_degree(t).unwrap() as usize, want);
        }
    }

    #[test]
    fn non_isolated_singularity_does_not_stabilize() {
        let eq = LocalEquation::new(BiPoly::monomial(2, 0), II).unwrap();
        assert!(matches!(
            jacobian_scheme_degree(&eq, 6),
            Err(LocalGeomError::NotStabilized { .. })
        ));
    }

    #[test]
    fn smooth_germ_rejected() {
        assert!(LocalEquation::new(BiPoly::x(), II).is_err());
    }

    #[test]
    fn jacobian_ideals_match_listed_generators() {
        let x = BiPoly::x;
        let y = BiPoly::y;
        let y2 = || BiPoly::monomial(0, 2);
        let y3 = BiPoly::monomial(0, 3);
        let cases = [
            (II, vec![x(), y2()]),
            (III, vec![x().sub(&y2().scale(&half())), y3]),
            (
                IV,
                vec![
                    BiPoly::monomial(2, 0).sub(&y2().scale(&Rational::new(1.into(), 3.into()))),
                    BiPoly::monomial(1, 1),
                ],
            ),
            (I(2), vec![x(), y()]),
        ];
        for (t, gens) in cases {
            let j = LocalEquation::model(t).unwrap().jacobian_ideal();
            assert!(same_local_ideal(&j, &gens).unwrap(), "{t}");
        }
    }

    #[test]
    fn nilpotency_indices() {
        let k = |t| nilpotency_index(&LocalEquation::model(t).unwrap().jacobian_ideal()).unwrap();
        assert_eq!(k(II), 2);
        assert_eq!(k(III), 3);
        assert_eq!(k(IV), 3);
        assert_eq!(k(I(4)), 1);
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(rr(II, &[2]), (2, 2, 2));
        assert_eq!(rr(II, &[1]), (1, 2, 1));
        assert_eq!(rr(III, &[1, 2]), (3, 3, 3));
        assert_eq!(rr(IV, &[1, 1, 1]), (3, 4, 3));
        assert_eq!(rr(I(2), &[1, 1]), (2, 2, 2));
    }

    #[test]
    fn restriction_boundary_cases() {
        assert_eq!(rr(III, &[1, 1]), (2, 3, 2));
        assert_eq!(rr(III, &[2, 1]), (3, 3, 3));
        assert_eq!(rr(IV, &[2, 1, 1]), (4, 4, 4));
        assert_eq!(rr(IV, &[1, 2, 1]), (4, 4, 4));
        assert_eq!(rr(I(1), &[1]), (1, 1, 1));
        assert_eq!(rr(I(3), &[1, 2, 1]), (4, 3, 3));
        assert_eq!(rr(II, &[5]), (5, 2, 2));
    }

    #[test]
    fn weights_do_not_change_ranks() {
        let m =
            SectionSpaceModel::with_weights(IV, vec![1, 1, 1], [rat(3), rat(-1), half()]).unwrap();
        let r = restriction_rank(&m).unwrap();
        assert_eq!((r.h0_fiber, r.h0_s0, r.rank), (3, 4, 3));
    }

    #[test]
    fn split_validation() {
        assert!(matches!(
            SectionSpaceModel::new(III, vec![3]),
            Err(LocalGeomError::UnsupportedSplit {
                expected: 2,
                got: 1,
                ..
            })
        ));
        assert_eq!(
            SectionSpaceModel::new(IV, vec![1, 0, 1]).unwrap_err(),
            LocalGeomError::ZeroDegree
        );
        assert!(SectionSpaceModel::new(I(0), vec![]).is_err());
        assert!(
            SectionSpaceModel::with_weights(IV, vec![1, 1, 1], [rat(0), rat(1), rat(1)]).is_err()
        );
    }

    #[test]
    fn point_counts() {
        assert_eq!(singular_point_count(I(3)), 3);
        assert_eq!(singular_point_count(IV), 1);
        assert!(singular_scheme_degree(I(0)).is_err());
    }
}

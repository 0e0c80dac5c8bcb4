//! Intersection numbers on surfaces inside `P^1 x P^n`.
//!
//! The cohomology ring of `P^1 x P^n` is `Z[D, B] / (D^2, B^(n+1))` with `D`
//! the fiber class of the first projection and `B` the hyperplane class of
//! the second factor. A surface `X` is given by the hypersurface classes
//! cutting it out (or as a double cover of `P^1 x P^1`). Products are taken
//! in the ambient ring and capped with `[X]` only at evaluation.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntersectError {
    #[error("product has codimension {got}, expected {want}")]
    DegreeMismatch { got: u32, want: u32 },
    #[error("monomial D^{0} B^{1} is outside the ring")]
    OutOfRange(u32, u32),
    #[error("invalid subvariety: {0}")]
    InvalidSpec(String),
    #[error("intersection number overflows")]
    Overflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AmbientRing {
    n: u32,
}

impl AmbientRing {
    pub fn new(n: u32) -> Result<Self, IntersectError> {
        if n == 0 {
            return Err(IntersectError::InvalidSpec("P^0 factor".into()));
        }
        Ok(AmbientRing { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Complex dimension of `P^1 x P^n`.
    pub fn dim(&self) -> u32 {
        self.n + 1
    }

    fn allows(&self, e1: u32, e2: u32) -> bool {
        e1 <= 1 && e2 <= self.n
    }

    /// `D * B^n`, the class of a point.
    pub fn point_class(&self) -> CycleClass {
        CycleClass::monomial(1, self.n)
    }
}

/// An integer combination of monomials `D^e1 B^e2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleClass {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl CycleClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e1: u32, e2: u32) -> Self {
        let mut c = Self::zero();
        c.coeffs.insert((e1, e2), 1);
        c
    }

    pub fn d() -> Self {
        Self::monomial(1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(0, 1)
    }

    /// The divisor `x D + y B`.
    pub fn divisor(x: i64, y: i64) -> Self {
        Self::d().scale(x).add(&Self::b().scale(y))
    }

    pub fn coeff(&self, e1: u32, e2: u32) -> i64 {
        self.coeffs.get(&(e1, e2)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.coeffs {
            out.push(*m, c * k);
        }
        out
    }

    pub fn add(&self, other: &CycleClass) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.push(*m, *c);
        }
        out
    }

    fn push(&mut self, m: (u32, u32), c: i64) {
        let e = self.coeffs.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&m);
        }
    }

    /// Product in the ring of `ring`; monomials killed by the relations drop.
    pub fn mul(&self, other: &CycleClass, ring: &AmbientRing) -> Result<Self, IntersectError> {
        let mut out = Self::zero();
        for ((a1, a2), c) in &self.coeffs {
            for ((b1, b2), d) in &other.coeffs {
                let (e1, e2) = (a1 + b1, a2 + b2);
                if ring.allows(e1, e2) {
                    let v = c.checked_mul(*d).ok_or(IntersectError::Overflow)?;
                    out.push((e1, e2), v);
                }
            }
        }
        Ok(out)
    }

    /// Codimension if homogeneous; `None` for zero or mixed classes.
    pub fn codim(&self) -> Option<u32> {
        let mut it = self.coeffs.keys().map(|(a, b)| a + b);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn check_in(&self, ring: &AmbientRing) -> Result<(), IntersectError> {
        match self.coeffs.keys().find(|(a, b)| !ring.allows(*a, *b)) {
            Some(&(a, b)) => Err(IntersectError::OutOfRange(a, b)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((a, b), c)| format!("{c} D^{a} B^{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubvarietySpec {
    ambient: AmbientRing,
    cutting: Vec<CycleClass>,
    cover_degree: u32,
}

impl SubvarietySpec {
    pub fn new(
        ambient: AmbientRing,
        cutting: Vec<CycleClass>,
        cover_degree: u32,
    ) -> Result<Self, IntersectError> {
        if !(1..=2).contains(&cover_degree) {
            return Err(IntersectError::InvalidSpec(format!(
                "cover degree {cover_degree}"
            )));
        }
        for c in &cutting {
            c.check_in(&ambient)?;
            if c.codim() != Some(1) {
                return Err(IntersectError::InvalidSpec(format!(
                    "{c} is not a divisor class"
                )));
            }
        }
        if cutting.len() as u32 + 2 != ambient.dim() {
            return Err(IntersectError::InvalidSpec(format!(
                "{} cutting classes in P^1 x P^{} do not give a surface",
                cutting.len(),
                ambient.n()
            )));
        }
        Ok(SubvarietySpec {
            ambient,
            cutting,
            cover_degree,
        })
    }

    /// Double cover of `P^1 x P^1`.
    pub fn double_cover_p1xp1() -> Self {
        Self::new(AmbientRing { n: 1 }, Vec::new(), 2).expect("valid spec")
    }

    /// Hypersurface of class `aD + 3B` in `P^1 x P^2`.
    pub fn hypersurface(a: i64) -> Self {
        Self::new(AmbientRing { n: 2 }, vec![CycleClass::divisor(a, 3)], 1).expect("valid spec")
    }

    /// Complete intersection of classes `aD + 2B` and `bD + 2B` in `P^1 x P^3`.
    pub fn complete_intersection(a: i64, b: i64) -> Self {
        Self::new(
            AmbientRing { n: 3 },
            vec![CycleClass::divisor(a, 2), CycleClass::divisor(b, 2)],
            1,
        )
        .expect("valid spec")
    }

    pub fn ambient(&self) -> &AmbientRing {
        &self.ambient
    }

    pub fn cover_degree(&self) -> u32 {
        self.cover_degree
    }
}

/// `(c1 . c2)_X`: the point-class coefficient of `c1 c2 [X]`, times the
/// cover degree.
pub fn intersection_number(
    spec: &SubvarietySpec,
    c1: &CycleClass,
    c2: &CycleClass,
) -> Result<i64, IntersectError> {
    let ring = &spec.ambient;
    c1.check_in(ring)?;
    c2.check_in(ring)?;
    let want = ring.dim();
    let got = c1.codim().unwrap_or(0) + c2.codim().unwrap_or(0) + spec.cutting.len() as u32;
    let homogeneous =
        (c1.is_zero() || c1.codim().is_some()) && (c2.is_zero() || c2.codim().is_some());
    if !homogeneous || (!c1.is_zero() && !c2.is_zero() && got != want) {
        return Err(IntersectError::DegreeMismatch { got, want });
    }
    let mut prod = c1.mul(c2, ring)?;
    for c in &spec.cutting {
        prod = prod.mul(c, ring)?;
    }
    prod.coeff(1, ring.n())
        .checked_mul(spec.cover_degree as i64)
        .ok_or(IntersectError::Overflow)
}

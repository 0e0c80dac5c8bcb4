//! Exact rational arithmetic, univariate polynomials, binary forms on the
//! projective line, and place bookkeeping.
//!
//! Everything here is exact. Places are discovered by gcd refinement rather
//! than irreducible factorization: a cluster may group several conjugate
//! points, but every form handed to [`coprime_refinement`] has one vanishing
//! order along the whole cluster.

mod form;
mod poly;

pub use form::{
    coprime_refinement, vanishing_order, BinaryForm, Order, Place, PlaceCluster, RefinedPlace,
};
pub use poly::{poly_arith, PolyOp, UniPoly};

use thiserror::Error;

/// Reduced fraction of big integers with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("form is identically zero")]
    IdenticallyZeroForm,
    #[error("affine part has degree {affine}, larger than the form degree {form}")]
    DegreeExceedsForm { affine: usize, form: u32 },
    #[error("forms of degree {0} and {1} cannot be added")]
    FormDegreeMismatch(u32, u32),
    #[error("{0} does not define a place (needs monic, nonconstant, squarefree)")]
    InvalidPlace(String),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

/// Parses an integer or `p/q` literal. A zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| PolyError::BadRational(s.to_string()))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

//! Homogeneous binary forms on the base line and the places where they vanish.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{PolyError, Rational, UniPoly};

/// A homogeneous form of degree `degree` on the projective line, stored
/// through its restriction to the affine chart `s = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    affine: UniPoly,
}

impl BinaryForm {
    pub fn new(degree: u32, affine: UniPoly) -> Result<Self, PolyError> {
        if let Some(d) = affine.degree() {
            if d > degree as usize {
                return Err(PolyError::DegreeExceedsForm {
                    affine: d,
                    form: degree,
                });
            }
        }
        Ok(BinaryForm { degree, affine })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn affine(&self) -> &UniPoly {
        &self.affine
    }

    pub fn is_identically_zero(&self) -> bool {
        self.affine.is_zero()
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        BinaryForm {
            degree: self.degree + other.degree,
            affine: &self.affine * &other.affine,
        }
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        BinaryForm {
            degree: self.degree * e,
            affine: self.affine.pow(e),
        }
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            affine: self.affine.scale(c),
        }
    }

    /// Sum of two forms of equal degree.
    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm, PolyError> {
        if self.degree != other.degree {
            return Err(PolyError::FormDegreeMismatch(self.degree, other.degree));
        }
        Ok(BinaryForm {
            degree: self.degree,
            affine: &self.affine + &other.affine,
        })
    }

    /// Order of vanishing at `s = 0`, the point at infinity.
    pub fn order_at_infinity(&self) -> Result<u32, PolyError> {
        match self.affine.degree() {
            None => Err(PolyError::IdenticallyZeroForm),
            Some(d) => Ok(self.degree - d as u32),
        }
    }

    /// Substitutes `t -> t + c` in the affine chart. The point at infinity
    /// is fixed, so the form degree is unchanged.
    pub fn shift(&self, c: &Rational) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            affine: self.affine.shift(c),
        }
    }
}

/// A closed point of the line over the rationals, or a cluster of
/// conjugate-like points sharing a squarefree defining polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(UniPoly),
    Infinity,
}

impl Place {
    /// Checks the defining polynomial is monic, nonconstant and squarefree.
    pub fn finite(p: UniPoly) -> Result<Place, PolyError> {
        if p.is_constant() || !p.is_monic() || !p.is_squarefree() {
            return Err(PolyError::InvalidPlace(p.to_string()));
        }
        Ok(Place::Finite(p))
    }

    /// The rational point `t = c`.
    pub fn rational_point(c: Rational) -> Place {
        Place::Finite(UniPoly::new(vec![-c, Rational::from_integer(1.into())]))
    }

    pub fn residue_degree(&self) -> u32 {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0) as u32,
            Place::Infinity => 1,
        }
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Finite(a), Place::Finite(b)) => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs().cmp(b.coeffs())),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({})", p),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Order of vanishing, with `Infinite` standing for an identically-zero form.
/// Serialized as an integer, or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_u32(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Order::Finite(n)),
            Raw::Str(s) if s == "inf" => Ok(Order::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad order {s:?}"))),
        }
    }
}

impl Order {
    pub fn is_at_least(self, k: u32) -> bool {
        match self {
            Order::Finite(n) => n >= k,
            Order::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{}", n),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// Vanishing orders of `(lambda, mu, Delta)` on a place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceCluster {
    pub place: Place,
    pub lambda: Order,
    pub mu: Order,
    pub delta: u32,
}

/// A place from [`coprime_refinement`] with one order per input form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedPlace {
    pub place: Place,
    pub orders: Vec<u32>,
}

/// Largest `k` with `p^k | f` (finite place) or the degree deficit at infinity.
pub fn vanishing_order(f: &BinaryForm, place: &Place) -> Result<u32, PolyError> {
    if f.is_identically_zero() {
        return Err(PolyError::IdenticallyZeroForm);
    }
    match place {
        Place::Infinity => f.order_at_infinity(),
        Place::Finite(p) => {
            if p.is_constant() {
                return Err(PolyError::InvalidPlace(p.to_string()));
            }
            let mut k = 0;
            let mut rest = f.affine().clone();
            loop {
                let (q, r) = rest.div_rem(p)?;
                if !r.is_zero() {
                    return Ok(k);
                }
                rest = q;
                k += 1;
            }
        }
    }
}

/// Splits the joint zero locus of `forms` into pairwise-coprime squarefree
/// loci on which every form has constant vanishing order.
///
/// Finite loci are found by gcd refinement of the squarefree layers of each
/// affine part: whenever two loci share a factor `g`, they are replaced by
/// `a/g`, `g`, `b/g`. Every original layer stays a product of current loci,
/// so each form's order is constant on each of them. The point at infinity
/// is appended when some form has a degree deficit.
pub fn coprime_refinement(forms: &[BinaryForm]) -> Result<Vec<RefinedPlace>, PolyError> {
    if forms.iter().any(BinaryForm::is_identically_zero) {
        return Err(PolyError::IdenticallyZeroForm);
    }
    let mut basis: Vec<UniPoly> = Vec::new();
    for f in forms {
        for layer in f.affine().squarefree_decomposition() {
            if !layer.is_constant() {
                basis.push(layer);
            }
        }
    }
    refine_to_coprime(&mut basis);
    let mut places: Vec<Place> = basis.into_iter().map(Place::Finite).collect();
    places.sort();
    places.dedup();
    let mut out = Vec::with_capacity(places.len() + 1);
    for place in places {
        let orders = forms
            .iter()
            .map(|f| vanishing_order(f, &place))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(RefinedPlace { place, orders });
    }
    let at_inf = forms
        .iter()
        .map(BinaryForm::order_at_infinity)
        .collect::<Result<Vec<_>, _>>()?;
    if at_inf.iter().any(|&k| k > 0) {
        out.push(RefinedPlace {
            place: Place::Infinity,
            orders: at_inf,
        });
    }
    Ok(out)
}

fn refine_to_coprime(basis: &mut Vec<UniPoly>) {
    'outer: loop {
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let g = basis[i].gcd(&basis[j]);
                if g.is_constant() {
                    continue;
                }
                let b = basis.swap_remove(j);
                let a = basis.swap_remove(i);
                for piece in [
                    a.exact_div(&g).expect("gcd divides"),
                    b.exact_div(&g).expect("gcd divides"),
                    g,
                ] {
                    if !piece.is_constant() {
                        basis.push(piece.monic());
                    }
                }
                continue 'outer;
            }
        }
        return;
    }
}

//! Weierstrass data `y^2 = x^3 + lambda(t) x + mu(t)` over the line, its
//! discriminant, the minimality test, and the singular-fiber census.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{
    coprime_refinement, rat, BinaryForm, Order, Place, PlaceCluster, PolyError, UniPoly,
};

/// Upper bound on `beta` accepted by [`WeierstrassData::new`]; keeps every
/// form degree (at most `12 beta`) well inside `u32`.
pub const MAX_BETA: u32 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeierstrassError {
    #[error("beta must lie in 1..={MAX_BETA}, got {0}")]
    BadBeta(u32),
    #[error("discriminant 4 lambda^3 + 27 mu^2 is identically zero")]
    IdenticallyZeroDiscriminant,
    #[error("model is not minimal at {0:?}")]
    NotMinimal(Vec<String>),
    #[error("non-reduced fiber (a={a}, b={b}, delta={delta}) at {place}")]
    NonReducedFiber {
        place: String,
        a: Order,
        b: Order,
        delta: u32,
    },
    #[error("classification table check failed: {0}")]
    InconsistentTable(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Sections `lambda` of `O(4 beta)` and `mu` of `O(6 beta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassData {
    beta: u32,
    lambda: BinaryForm,
    mu: BinaryForm,
}

impl WeierstrassData {
    /// Builds the data from affine-chart polynomials; the form degrees come
    /// from `beta`.
    pub fn new(beta: u32, lambda: UniPoly, mu: UniPoly) -> Result<Self, WeierstrassError> {
        if beta == 0 || beta > MAX_BETA {
            return Err(WeierstrassError::BadBeta(beta));
        }
        let w = WeierstrassData {
            beta,
            lambda: BinaryForm::new(4 * beta, lambda)?,
            mu: BinaryForm::new(6 * beta, mu)?,
        };
        if w.discriminant_form().is_identically_zero() {
            return Err(WeierstrassError::IdenticallyZeroDiscriminant);
        }
        Ok(w)
    }

    /// The model `lambda = t^(4 beta)`, `mu = t^(6 beta) + t`.
    pub fn cusp_example(beta: u32) -> Result<Self, WeierstrassError> {
        let lambda = UniPoly::monomial(rat(1), 4 * beta as usize);
        let mu = &UniPoly::monomial(rat(1), 6 * beta as usize) + &UniPoly::t();
        Self::new(beta, lambda, mu)
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn lambda(&self) -> &BinaryForm {
        &self.lambda
    }

    pub fn mu(&self) -> &BinaryForm {
        &self.mu
    }

    /// `t -> t + c`
    pub fn shift(&self, c: &crate::exactpoly::Rational) -> Self {
        WeierstrassData {
            beta: self.beta,
            lambda: self.lambda.shift(c),
            mu: self.mu.shift(c),
        }
    }

    /// `(u^4 lambda, u^6 mu)`
    pub fn rescale(&self, u: &crate::exactpoly::Rational) -> Self {
        let u2 = u * u;
        let u4 = &u2 * &u2;
        let u6 = &u4 * &u2;
        WeierstrassData {
            beta: self.beta,
            lambda: self.lambda.scale(&u4),
            mu: self.mu.scale(&u6),
        }
    }

    fn discriminant_form(&self) -> BinaryForm {
        let l3 = self.lambda.pow(3).scale(&rat(4));
        let m2 = self.mu.pow(2).scale(&rat(27));
        l3.add(&m2).expect("both have degree 12 beta")
    }
}

/// `4 lambda^3 + 27 mu^2` as a form of degree `12 beta`.
pub fn discriminant(w: &WeierstrassData) -> Result<BinaryForm, WeierstrassError> {
    let d = w.discriminant_form();
    if d.is_identically_zero() {
        return Err(WeierstrassError::IdenticallyZeroDiscriminant);
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    pub minimal: bool,
    pub offending: Vec<Place>,
}

/// Minimal iff at every zero of the discriminant, `ord(lambda) <= 3` or
/// `ord(mu) <= 5`.
pub fn is_minimal(w: &WeierstrassData) -> Result<Minimality, WeierstrassError> {
    let clusters = discriminant_clusters(w)?;
    let offending: Vec<Place> = clusters
        .into_iter()
        .filter(|c| c.lambda.is_at_least(4) && c.mu.is_at_least(6))
        .map(|c| c.place)
        .collect();
    Ok(Minimality {
        minimal: offending.is_empty(),
        offending,
    })
}

/// Places where the discriminant vanishes, with `(a, b, delta)` constant
/// on each. A form that is identically zero gets `Order::Infinite`.
pub fn discriminant_clusters(w: &WeierstrassData) -> Result<Vec<PlaceCluster>, WeierstrassError> {
    let delta = discriminant(w)?;
    let mut forms = vec![delta];
    let lambda_live = !w.lambda.is_identically_zero();
    let mu_live = !w.mu.is_identically_zero();
    if lambda_live {
        forms.push(w.lambda.clone());
    }
    if mu_live {
        forms.push(w.mu.clone());
    }
    let refined = coprime_refinement(&forms)?;
    let mut out = Vec::new();
    for r in refined {
        if r.orders[0] == 0 {
            continue;
        }
        let mut rest = r.orders[1..].iter().copied();
        let lambda = if lambda_live {
            Order::Finite(rest.next().expect("lambda order"))
        } else {
            Order::Infinite
        };
        let mu = if mu_live {
            Order::Finite(rest.next().expect("mu order"))
        } else {
            Order::Infinite
        };
        out.push(PlaceCluster {
            place: r.place,
            lambda,
            mu,
            delta: r.orders[0],
        });
    }
    Ok(out)
}

/// The reduced Kodaira types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    /// A cycle of `n` rational curves (`n = 1`: nodal cubic).
    I(u32),
    /// Cuspidal cubic.
    II,
    /// Two rational curves tangent at a point.
    III,
    /// Three concurrent rational curves.
    IV,
}

impl KodairaType {
    /// Topological Euler number of the fiber.
    pub fn euler_number(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
        }
    }

    pub fn component_count(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
        }
    }

    pub fn is_irreducible(self) -> bool {
        self.component_count() == 1
    }

    /// Discriminant order pinned by the table row, where the row pins one.
    fn pinned_delta(self) -> Option<u32> {
        match self {
            KodairaType::I(_) => None,
            KodairaType::II => Some(2),
            KodairaType::III => Some(3),
            KodairaType::IV => Some(4),
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{}", n),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
        }
    }
}

impl std::str::FromStr for KodairaType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "II" => Ok(KodairaType::II),
            "III" => Ok(KodairaType::III),
            "IV" => Ok(KodairaType::IV),
            _ => {
                let n = s
                    .strip_prefix("I_")
                    .or_else(|| s.strip_prefix('I'))
                    .and_then(|n| n.parse::<u32>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| format!("unknown fiber type {s:?}"))?;
                Ok(KodairaType::I(n))
            }
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KodairaType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Reads the Kodaira type off `(a, b, delta)` for `delta >= 1`.
///
/// Rows: `I_n` for `a = b = 0`; `II` for `a >= 1, b = 1`; `III` for
/// `a = 1, b >= 2`; `IV` for `a >= 2, b = 2`. Every remaining row of a minimal
/// model is a starred (non-reduced) fiber.
pub fn kodaira_type(cluster: &PlaceCluster) -> Result<KodairaType, WeierstrassError> {
    let (a, b, delta) = (cluster.lambda, cluster.mu, cluster.delta);
    let non_reduced = || WeierstrassError::NonReducedFiber {
        place: cluster.place.to_string(),
        a,
        b,
        delta,
    };
    if delta == 0 {
        return Err(WeierstrassError::InconsistentTable(format!(
            "{} is not a singular place",
            cluster.place
        )));
    }
    let ty = match (a, b) {
        (Order::Finite(0), Order::Finite(0)) => KodairaType::I(delta),
        (Order::Finite(0), _) | (_, Order::Finite(0)) => {
            // one unit among lambda, mu forces delta = 0
            return Err(WeierstrassError::InconsistentTable(format!(
                "a={a}, b={b} cannot give delta={delta}"
            )));
        }
        (_, Order::Finite(1)) => KodairaType::II,
        (Order::Finite(1), _) => KodairaType::III,
        (_, Order::Finite(2)) => KodairaType::IV,
        _ => return Err(non_reduced()),
    };
    if let Some(pinned) = ty.pinned_delta() {
        if pinned != delta {
            return Err(WeierstrassError::InconsistentTable(format!(
                "row {ty} pins delta={pinned} but delta={delta} at {}",
                cluster.place
            )));
        }
    }
    Ok(ty)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaFiber {
    pub cluster: PlaceCluster,
    pub kodaira_type: KodairaType,
    /// Number of geometric fibers in the cluster.
    pub count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCensus {
    pub beta: u32,
    pub fibers: Vec<KodairaFiber>,
}

impl FiberCensus {
    pub fn delta_sum(&self) -> u64 {
        self.fibers
            .iter()
            .map(|f| u64::from(f.count) * u64::from(f.cluster.delta))
            .sum()
    }

    pub fn euler_sum(&self) -> u64 {
        self.fibers
            .iter()
            .map(|f| u64::from(f.count) * u64::from(f.kodaira_type.euler_number()))
            .sum()
    }

    pub fn contains(&self, ty: KodairaType) -> bool {
        self.fibers.iter().any(|f| f.kodaira_type == ty)
    }

    pub fn types(&self) -> BTreeSet<KodairaType> {
        self.fibers.iter().map(|f| f.kodaira_type).collect()
    }

    /// `(type, delta)` pairs with multiplicity, sorted.
    pub fn multiset(&self) -> Vec<(KodairaType, u32)> {
        let mut v: Vec<(KodairaType, u32)> = self
            .fibers
            .iter()
            .flat_map(|f| std::iter::repeat_n((f.kodaira_type, f.cluster.delta), f.count as usize))
            .collect();
        v.sort();
        v
    }
}

/// Classifies every singular fiber of a minimal model with reduced fibers.
pub fn classify_fibers(w: &WeierstrassData) -> Result<FiberCensus, WeierstrassError> {
    let clusters = discriminant_clusters(w)?;
    let offending: Vec<String> = clusters
        .iter()
        .filter(|c| c.lambda.is_at_least(4) && c.mu.is_at_least(6))
        .map(|c| c.place.to_string())
        .collect();
    if !offending.is_empty() {
        return Err(WeierstrassError::NotMinimal(offending));
    }
    let mut fibers = Vec::with_capacity(clusters.len());
    for cluster in clusters {
        let kodaira_type = kodaira_type(&cluster)?;
        let count = cluster.place.residue_degree();
        fibers.push(KodairaFiber {
            cluster,
            kodaira_type,
            count,
        });
    }
    let census = FiberCensus {
        beta: w.beta,
        fibers,
    };
    let expected = 12 * u64::from(w.beta);
    if census.delta_sum() != expected || census.euler_sum() != expected {
        return Err(WeierstrassError::InconsistentTable(format!(
            "delta sum {} and Euler sum {} must both equal {}",
            census.delta_sum(),
            census.euler_sum(),
            expected
        )));
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::vanishing_order;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn worked_discriminant() {
        let w = WeierstrassData::cusp_example(1).unwrap();
        let d = discriminant(&w).unwrap();
        assert_eq!(d.degree(), 12);
        let mut want = vec![0; 13];
        want[12] = 31;
        want[7] = 54;
        want[2] = 27;
        assert_eq!(d.affine(), &p(&want));
    }

    #[test]
    fn lambda_zero_discriminant() {
        let w = WeierstrassData::new(1, UniPoly::zero(), p(&[0, 0, 0, 0, 0, 0, 1])).unwrap();
        let d = discriminant(&w).unwrap();
        assert_eq!(d.affine(), &UniPoly::monomial(rat(27), 12));
    }

    #[test]
    fn zero_discriminant_rejected() {
        assert_eq!(
            WeierstrassData::new(1, UniPoly::zero(), UniPoly::zero()).unwrap_err(),
            WeierstrassError::IdenticallyZeroDiscriminant
        );
        // lambda = -3 s^4, mu = 2 s^6 gives 4(-27) + 27*4 = 0
        assert_eq!(
            WeierstrassData::new(1, p(&[-3]), p(&[2])).unwrap_err(),
            WeierstrassError::IdenticallyZeroDiscriminant
        );
    }

    #[test]
    fn degree_overflow_rejected() {
        let err = WeierstrassData::new(1, p(&[0, 0, 0, 0, 0, 1]), p(&[1])).unwrap_err();
        assert!(matches!(
            err,
            WeierstrassError::Poly(PolyError::DegreeExceedsForm { .. })
        ));
    }

    #[test]
    fn generic_discriminant_is_squarefree() {
        let w = WeierstrassData::new(1, p(&[0, 0, 0, 0, 1]), p(&[1, -2, 3, 0, -1, 2, 1])).unwrap();
        let d = discriminant(&w).unwrap();
        assert_eq!(d.affine().degree(), Some(12));
        assert!(d.affine().is_squarefree());
    }

    #[test]
    fn minimality() {
        assert!(
            is_minimal(&WeierstrassData::cusp_example(1).unwrap())
                .unwrap()
                .minimal
        );

        let w = WeierstrassData::new(1, p(&[1]), p(&[1])).unwrap();
        let m = is_minimal(&w).unwrap();
        assert!(!m.minimal);
        assert_eq!(m.offending, vec![Place::Infinity]);

        let w = WeierstrassData::new(1, p(&[0, 0, 0, 0, 1]), p(&[0, 0, 0, 0, 0, 0, 1])).unwrap();
        let m = is_minimal(&w).unwrap();
        assert!(!m.minimal);
        assert_eq!(m.offending, vec![Place::rational_point(rat(0))]);
    }

    #[test]
    fn cusp_example_has_type_two_at_origin() {
        for beta in 1..=2 {
            let census = classify_fibers(&WeierstrassData::cusp_example(beta).unwrap()).unwrap();
            let origin = census
                .fibers
                .iter()
                .find(|f| f.cluster.place == Place::rational_point(rat(0)))
                .unwrap();
            assert_eq!(origin.kodaira_type, KodairaType::II);
            assert_eq!(origin.cluster.lambda, Order::Finite(4 * beta));
            assert_eq!(origin.cluster.mu, Order::Finite(1));
            assert_eq!(origin.cluster.delta, 2);
            assert_eq!(census.delta_sum(), 12 * u64::from(beta));
        }
    }

    #[test]
    fn generic_model_has_twelve_nodal_fibers() {
        let w = WeierstrassData::new(1, p(&[2, -1, 0, 3, 1]), p(&[1, 1, -2, 0, 4, 0, -3])).unwrap();
        let census = classify_fibers(&w).unwrap();
        assert!(census
            .fibers
            .iter()
            .all(|f| f.kodaira_type == KodairaType::I(1)));
        assert!(census
            .fibers
            .iter()
            .all(|f| f.cluster.lambda == Order::Finite(0) && f.cluster.mu == Order::Finite(0)));
        assert_eq!(census.multiset().len(), 12);
    }

    #[test]
    fn lambda_zero_sextic_is_not_minimal() {
        let w = WeierstrassData::new(1, UniPoly::zero(), p(&[0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert!(matches!(
            classify_fibers(&w),
            Err(WeierstrassError::NotMinimal(_))
        ));
    }

    #[test]
    fn table_rows() {
        let origin = Place::rational_point(rat(0));
        let row = |a: Order, b: Order, delta: u32| PlaceCluster {
            place: origin.clone(),
            lambda: a,
            mu: b,
            delta,
        };
        use Order::{Finite as F, Infinite};
        assert_eq!(
            kodaira_type(&row(F(0), F(0), 5)).unwrap(),
            KodairaType::I(5)
        );
        assert_eq!(kodaira_type(&row(F(3), F(1), 2)).unwrap(), KodairaType::II);
        assert_eq!(
            kodaira_type(&row(Infinite, F(1), 2)).unwrap(),
            KodairaType::II
        );
        assert_eq!(kodaira_type(&row(F(1), F(2), 3)).unwrap(), KodairaType::III);
        assert_eq!(
            kodaira_type(&row(F(1), Infinite, 3)).unwrap(),
            KodairaType::III
        );
        assert_eq!(kodaira_type(&row(F(2), F(2), 4)).unwrap(), KodairaType::IV);
        assert_eq!(
            kodaira_type(&row(Infinite, F(2), 4)).unwrap(),
            KodairaType::IV
        );
        for (a, b, d) in [(2, 3, 6), (2, 3, 8), (3, 4, 8), (3, 5, 9), (4, 5, 10)] {
            assert!(matches!(
                kodaira_type(&row(F(a), F(b), d)),
                Err(WeierstrassError::NonReducedFiber { .. })
            ));
        }
        assert!(matches!(
            kodaira_type(&row(F(1), F(1), 3)),
            Err(WeierstrassError::InconsistentTable(_))
        ));
    }

    #[test]
    fn types_three_and_four_from_models() {
        // lambda = t + t^4, mu = t^2 + t^6: a=1, b=2 at t=0
        let w = WeierstrassData::new(1, p(&[0, 1, 0, 0, 1]), p(&[0, 0, 1, 0, 0, 0, 1])).unwrap();
        let census = classify_fibers(&w).unwrap();
        assert!(census.contains(KodairaType::III));
        assert_eq!(census.euler_sum(), 12);

        // lambda = t^2 + t^4, mu = t^2 + 2 t^6: a=2, b=2
        let w = WeierstrassData::new(1, p(&[0, 0, 1, 0, 1]), p(&[0, 0, 1, 0, 0, 0, 2])).unwrap();
        let census = classify_fibers(&w).unwrap();
        assert!(census.contains(KodairaType::IV));
        assert_eq!(census.euler_sum(), 12);
    }

    #[test]
    fn starred_fiber_rejected() {
        // lambda = t^2, mu = t^3: I0* at the origin
        let w = WeierstrassData::new(1, p(&[0, 0, 1, 0, 1]), p(&[0, 0, 0, 1, 0, 0, 1])).unwrap();
        assert!(matches!(
            classify_fibers(&w),
            Err(WeierstrassError::NonReducedFiber { .. })
        ));
    }

    #[test]
    fn cluster_orders_match_direct_orders() {
        let w = WeierstrassData::cusp_example(1).unwrap();
        let d = discriminant(&w).unwrap();
        for c in discriminant_clusters(&w).unwrap() {
            assert_eq!(vanishing_order(&d, &c.place).unwrap(), c.delta);
            assert_eq!(
                Order::Finite(vanishing_order(w.lambda(), &c.place).unwrap()),
                c.lambda
            );
        }
    }

    #[test]
    fn kodaira_type_strings() {
        for ty in [
            KodairaType::I(1),
            KodairaType::I(7),
            KodairaType::II,
            KodairaType::III,
            KodairaType::IV,
        ] {
            assert_eq!(ty.to_string().parse::<KodairaType>().unwrap(), ty);
        }
        assert_eq!("I_3".parse::<KodairaType>().unwrap(), KodairaType::I(3));
        assert!("I0".parse::<KodairaType>().is_err());
        assert!("V".parse::<KodairaType>().is_err());
    }
}

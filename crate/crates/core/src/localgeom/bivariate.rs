//! Sparse bivariate polynomials in `(x, y)` over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactpoly::{rat, Rational, UniPoly};

/// `coeff(i, j)` is the coefficient of `x^i y^j`. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Integer coefficients, for writing down model equations.
    pub fn from_int_terms(t: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(t.iter().map(|&(m, c)| (m, rat(c))))
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        Self::from_terms([((i, j), Rational::one())])
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    fn add_term(&mut self, m: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        Self::from_terms(self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        self.add(&o.scale(&rat(-1)))
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let mut p = Self::zero();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &o.terms {
                p.add_term((i + k, j + l), a * b);
            }
        }
        p
    }

    pub fn dx(&self) -> BiPoly {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, *j), c * rat(*i as i64))),
        )
    }

    pub fn dy(&self) -> BiPoly {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((*i, j - 1), c * rat(*j as i64))),
        )
    }

    pub fn eval_origin(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Drops terms of total degree `>= n`.
    pub fn truncate(&self, n: u32) -> BiPoly {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((i, j), _)| i + j < n)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// `p(px(u), py(u))` modulo `u^n`.
    pub fn substitute(&self, px: &UniPoly, py: &UniPoly, n: usize) -> UniPoly {
        let mut acc = UniPoly::zero();
        for ((i, j), c) in &self.terms {
            let term = (&px.pow(*i) * &py.pow(*j)).truncate(n).scale(c);
            acc = &acc + &term;
        }
        acc.truncate(n)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| {
                let mut s = if c.is_one() && i + j > 0 {
                    String::new()
                } else {
                    format!("({c})")
                };
                for (v, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => s.push_str(v),
                        _ => s.push_str(&format!("{v}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Monomials `x^i y^j` with `i + j < n`, ordered by degree then by `i`.
pub fn monomials_below(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for d in 0..n {
        for i in (0..=d).rev() {
            out.push((i, d - i));
        }
    }
    out
}

/// Position of `x^i y^j` in [`monomials_below`].
pub fn monomial_index(i: u32, j: u32) -> usize {
    let d = (i + j) as usize;
    d * (d + 1) / 2 + (d - i as usize)
}

//! Exact linear algebra over the rationals.
//!
//! Ranks go through a sparse fraction-free echelon form: rational rows are
//! scaled to primitive integer rows, and each elimination step is
//! `p * row - c * pivot` followed by removal of the content, so entries stay
//! integral and small. Null spaces use a dense rational reduced row echelon
//! form; they are only needed for the small section-space models.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactpoly::Rational;

/// Sparse integer row, sorted by column, no zero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Incrementally built echelon form. Only the rank and membership are kept.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots and keeps it if a nonzero
    /// remainder survives. Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        match self.reduce(row) {
            Some(rest) => {
                self.pivots.insert(rest[0].0, rest);
                true
            }
            None => false,
        }
    }

    pub fn insert_rational(&mut self, row: &[Rational]) -> bool {
        self.insert(primitive_row(row))
    }

    /// Whether `row` lies in the span already inserted.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_none()
    }

    fn reduce(&self, mut row: SparseRow) -> Option<SparseRow> {
        make_primitive(&mut row);
        while let Some((lead, _)) = row.first() {
            let Some(pivot) = self.pivots.get(lead) else {
                return Some(row);
            };
            let a = pivot[0].1.clone();
            let b = row[0].1.clone();
            row = combine(&a, &row, &b, pivot);
            make_primitive(&mut row);
        }
        None
    }
}

/// `a * x - b * y`, merged by column.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, a * vx)
            }
            (Some((cx, _)), Some((cy, vy))) if cy < cx => {
                j += 1;
                (*cy, -(b * vy))
            }
            (Some((cx, vx)), Some((_, vy))) => {
                i += 1;
                j += 1;
                (*cx, a * vx - b * vy)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (None, Some((cy, vy))) => {
                j += 1;
                (*cy, -(b * vy))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn make_primitive(row: &mut SparseRow) {
    row.retain(|(_, v)| !v.is_zero());
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if g.is_zero() {
        return;
    }
    let flip = row[0].1.is_negative();
    for (_, v) in row.iter_mut() {
        *v /= &g;
        if flip {
            *v = -&*v;
        }
    }
}

/// Clears denominators of a dense rational row into a sparse integer row.
pub fn primitive_row(row: &[Rational]) -> SparseRow {
    let lcm = row
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: SparseRow = row
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, (c * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    make_primitive(&mut out);
    out
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert_rational(r);
    }
    e.rank()
}

/// Basis of `{v : rows * v = 0}` in a space of dimension `ncols`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, Rational::zero());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        let Some(sel) = (prow..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(prow, sel);
        let inv = m[prow][col].recip();
        for v in m[prow].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[prow].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != prow && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row[col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *v -= &f * p;
                }
            }
        }
        pivot_cols.push(col);
        prow += 1;
        if prow == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn rows(m: &[&[i64]]) -> Vec<Vec<Rational>> {
        m.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(&rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank(&rows(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&rows(&[&[2, 1, 0], &[1, 3, 0], &[0, 0, 5]])), 3);
    }

    #[test]
    fn rank_with_fractions() {
        let half = Rational::new(1.into(), 2.into());
        let m = vec![
            vec![half.clone(), rat(1)],
            vec![rat(1), rat(2)],
            vec![rat(1), half],
        ];
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = rows(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &m {
                let dot: Rational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&ns), 2);
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert_rational(&[rat(1), rat(1), rat(0)]);
        e.insert_rational(&[rat(0), rat(1), rat(1)]);
        assert!(e.contains(primitive_row(&[rat(1), rat(0), rat(-1)])));
        assert!(!e.contains(primitive_row(&[rat(0), rat(0), rat(1)])));
    }
}

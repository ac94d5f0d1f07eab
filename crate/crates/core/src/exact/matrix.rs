//! Dense matrices with basis labels, and exact determinants.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::{Monomial, Ring};
use crate::error::Error;
use crate::system::affine_var_name;

/// Basis element indexing a row or column of a resultant matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// Monomial in the original affine variables `x`.
    X(Monomial),
    /// Monomial in the substituted variables `y`.
    Y(Monomial),
    /// The polynomial `f_poly` multiplied by an `x` monomial.
    Shifted { poly: usize, monomial: Monomial },
}

impl Label {
    pub fn monomial(&self) -> &Monomial {
        match self {
            Label::X(m) | Label::Y(m) => m,
            Label::Shifted { monomial, .. } => monomial,
        }
    }

    /// Renders with variables named after their group and slot, e.g.
    /// `x1_1^2*x2_1` or `f0*x1_1`.
    pub fn render(&self, l: &[u32]) -> String {
        let xs = |i| affine_var_name("x", l, i);
        let ys = |i| affine_var_name("y", l, i);
        match self {
            Label::X(m) => m.render(&xs),
            Label::Y(m) => m.render(&ys),
            Label::Shifted { poly, monomial } if monomial.is_one() => format!("f{poly}"),
            Label::Shifted { poly, monomial } => format!("f{poly}*{}", monomial.render(&xs)),
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct LabeledMatrix<C> {
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    entries: Vec<Vec<C>>,
}

impl<C: Ring> LabeledMatrix<C> {
    pub fn new(
        row_labels: Vec<Label>,
        col_labels: Vec<Label>,
        entries: Vec<Vec<C>>,
    ) -> Result<Self, Error> {
        if entries.len() != row_labels.len()
            || entries.iter().any(|row| row.len() != col_labels.len())
        {
            return Err(Error::ShapeMismatch {
                rows: row_labels.len(),
                cols: col_labels.len(),
            });
        }
        Ok(LabeledMatrix {
            row_labels,
            col_labels,
            entries,
        })
    }

    /// Matrix with generated labels, handy for tests and oracles.
    pub fn from_rows(entries: Vec<Vec<C>>) -> Result<Self, Error> {
        let cols = entries.first().map_or(0, Vec::len);
        let row_labels = (0..entries.len())
            .map(|i| Label::X(Monomial::var_pow(0, i as u32)))
            .collect();
        let col_labels = (0..cols)
            .map(|j| Label::Y(Monomial::var_pow(0, j as u32)))
            .collect();
        Self::new(row_labels, col_labels, entries)
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn entries(&self) -> &[Vec<C>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &C {
        &self.entries[row][col]
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols())
            .map(|j| self.entries.iter().map(|row| row[j].clone()).collect())
            .collect();
        LabeledMatrix {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries,
        }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LabeledMatrix<D> {
        LabeledMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn nonzero_entries(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|c| !c.is_zero())
            .count()
    }
}

impl<C: Ring> fmt::Debug for LabeledMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledMatrix")
            .field("rows", &self.rows())
            .field("cols", &self.cols())
            .finish()
    }
}

/// Exact determinant of a square matrix.
///
/// Uses Bareiss fraction-free elimination, where every division is exact in
/// an integral domain. If an inexact division is ever reported by the
/// coefficient domain, matrices up to 6x6 fall back to memoized minor
/// expansion.
///
/// # Panics
///
/// If the matrix is not square.
pub fn det_fraction_free<C: Ring>(mat: &LabeledMatrix<C>) -> C {
    assert!(mat.is_square(), "determinant of a non-square matrix");
    det_of_rows(mat.entries.clone())
}

/// Determinant of a rational matrix.
///
/// Each row is scaled by the lcm of its denominators and Bareiss runs over
/// the integers, which keeps every intermediate an exact minor and avoids
/// gcd normalization in the inner loop.
pub fn det_rational(mat: &LabeledMatrix<BigRational>) -> BigRational {
    assert!(mat.is_square(), "determinant of a non-square matrix");
    let mut scale = BigInt::from(1);
    let rows: Vec<Vec<BigInt>> = mat
        .entries
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
            scale *= &lcm;
            row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect();
    BigRational::new(det_of_rows(rows), scale)
}

pub(crate) fn det_of_rows<C: Ring>(rows: Vec<Vec<C>>) -> C {
    let n = rows.len();
    match bareiss(rows.clone()) {
        Some(d) => d,
        None if n <= 6 => det_minor_expansion(&rows),
        None => panic!("inexact division during Bareiss elimination: coefficient domain is not an integral domain"),
    }
}

fn bareiss<C: Ring>(mut a: Vec<Vec<C>>) -> Option<C> {
    let n = a.len();
    if n == 0 {
        return Some(C::one());
    }
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Some(C::zero());
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul_ref(&a[k][k]).sub_ref(&a[i][k].mul_ref(&a[k][j]));
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = C::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if negate { det.neg_ref() } else { det })
}

/// Determinant by Laplace expansion along rows, memoized over column subsets.
///
/// Costs `O(n 2^n)` ring multiplications and never divides, so it is the
/// method of choice for small matrices over expensive domains.
pub fn det_minor_expansion<C: Ring>(a: &[Vec<C>]) -> C {
    let n = a.len();
    assert!(n <= 24, "minor expansion limited to 24x24");
    assert!(a.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    // minors[S] = det of rows 0..|S| restricted to the columns in S
    let mut minors: HashMap<u32, C> = HashMap::new();
    minors.insert(0, C::one());
    let mut layer: Vec<u32> = vec![0];
    for row in 0..n {
        let mut next: HashMap<u32, C> = HashMap::new();
        for &set in &layer {
            let minor = &minors[&set];
            if minor.is_zero() {
                continue;
            }
            for (col, entry) in a[row].iter().enumerate() {
                if set & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                let bigger = set | (1 << col);
                // sign of moving `col` to the end of the sorted subset
                let after = (set >> col).count_ones();
                let mut term = entry.mul_ref(minor);
                if after % 2 == 1 {
                    term = term.neg_ref();
                }
                let slot = next.entry(bigger).or_insert_with(C::zero);
                *slot = slot.add_ref(&term);
            }
        }
        layer = next.keys().copied().collect();
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_else(C::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn mat(rows: &[&[i64]]) -> LabeledMatrix<BigRational> {
        LabeledMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
            .unwrap()
    }

    // Plain recursive cofactor expansion along the first row.
    fn cofactor(a: &[Vec<BigRational>]) -> BigRational {
        if a.is_empty() {
            return q(1);
        }
        let mut acc = q(0);
        for j in 0..a.len() {
            let minor: Vec<Vec<BigRational>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &a[0][j] * cofactor(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn identity_has_unit_determinant() {
        let m = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(det_fraction_free(&m), q(1));
        assert_eq!(det_minor_expansion(m.entries()), q(1));
    }

    #[test]
    fn repeated_row_gives_zero() {
        let m = mat(&[&[2, 7, 1], &[3, -1, 4], &[2, 7, 1]]);
        assert_eq!(det_fraction_free(&m), q(0));
        assert_eq!(det_minor_expansion(m.entries()), q(0));
    }

    #[test]
    fn pivoting_tracks_sign() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_fraction_free(&m), q(-1));
        let m = mat(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(det_fraction_free(&m), q(-6));
        assert_eq!(det_minor_expansion(m.entries()), q(-6));
    }

    #[test]
    fn empty_matrix() {
        let m: LabeledMatrix<BigRational> = LabeledMatrix::from_rows(vec![]).unwrap();
        assert_eq!(det_fraction_free(&m), q(1));
    }

    #[test]
    fn shape_is_validated() {
        let bad = LabeledMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(3)]]);
        assert!(matches!(bad, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn polynomial_entries() {
        use crate::exact::MultiPoly;
        type P = MultiPoly<BigRational>;
        let (a, b, c, d) = (P::var(0), P::var(1), P::var(2), P::var(3));
        let m = LabeledMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])
            .unwrap();
        let expected = &(&a * &d) - &(&b * &c);
        assert_eq!(det_fraction_free(&m), expected);
        assert_eq!(det_minor_expansion(m.entries()), expected);
    }

    #[test]
    fn transpose_swaps_labels() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6]]);
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 2));
        assert_eq!(t.get(2, 1), &q(6));
        assert_eq!(t.row_labels(), m.col_labels());
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(
            n in 1usize..=5,
            vals in prop::collection::vec(-9i64..=9, 25),
        ) {
            let rows: Vec<Vec<BigRational>> =
                (0..n).map(|i| (0..n).map(|j| q(vals[i * 5 + j])).collect()).collect();
            let m = LabeledMatrix::from_rows(rows.clone()).unwrap();
            let oracle = cofactor(&rows);
            prop_assert_eq!(det_fraction_free(&m), oracle.clone());
            prop_assert_eq!(det_minor_expansion(&rows), oracle);
        }
    }
}

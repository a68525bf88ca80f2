//! Small dense matrices over the scalar rings.
//!
//! Entry `(r, c)` is the coefficient of basis vector `r` in the image of
//! basis vector `c` (column action), so matrix products compose like maps.

use std::fmt;

use crate::error::Error;
use crate::scalar::{LaurentHalf, Ring};

#[derive(Clone, PartialEq)]
pub struct DenseMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> DenseMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn column(&self, c: usize) -> impl Iterator<Item = (usize, &R)> + '_ {
        (0..self.rows).map(move |r| (r, self.get(r, c))).filter(|(_, v)| !v.is_zero())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].accumulate_product(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DenseMatrix<S> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.rows.min(self.cols) {
            acc.accumulate(self.get(i, i));
        }
        acc
    }

    /// Gauss-Jordan inverse that only ever pivots on units of the ring.
    ///
    /// All matrices in this crate have unit determinant and enough unit
    /// entries for this to succeed; anything else reports `NotInvertible`.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.rows != self.cols {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let (pivot_row, pivot_inv) = (col..n)
                .find_map(|r| a.get(r, col).unit_inverse().map(|u| (r, u)))
                .ok_or(Error::NotInvertible)?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            a.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.eliminate(r, col, &factor);
                inv.eliminate(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, by: &R) {
        for c in 0..self.cols {
            let v = self.get(i, c).times(by);
            self.set(i, c, v);
        }
    }

    /// `row_target -= factor * row_source`.
    fn eliminate(&mut self, target: usize, source: usize, factor: &R) {
        for c in 0..self.cols {
            let s = self.get(source, c);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, c).minus(&factor.times(s));
            self.set(target, c, v);
        }
    }
}

impl DenseMatrix<LaurentHalf> {
    /// Determinant by fraction-free (Bareiss) elimination with exact division.
    pub fn det(&self) -> Result<LaurentHalf, Error> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentHalf::one());
        }
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = LaurentHalf::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(LaurentHalf::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(a.get(i, j) * a.get(k, k)) - &(a.get(i, k) * a.get(k, j));
                    a.set(i, j, num.exact_divide(&prev)?);
                }
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for DenseMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A diagonal operator on one tensor site.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector<R> {
    entries: Vec<R>,
}

impl<R: Ring> WeightVector<R> {
    pub fn new(entries: Vec<R>) -> Self {
        Self { entries }
    }

    pub fn trivial(d: usize) -> Self {
        Self { entries: vec![R::one(); d] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &R {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for e in &self.entries {
            acc.accumulate(e);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> WeightVector<S> {
        WeightVector { entries: self.entries.iter().map(f).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lo: i64, c: &[i64]) -> LaurentHalf {
        LaurentHalf::from_ints(lo, c)
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = DenseMatrix::from_rows(vec![
            vec![p(0, &[1, 0, -1]), LaurentHalf::t_half(1), LaurentHalf::zero()],
            vec![LaurentHalf::t_half(-1), LaurentHalf::zero(), p(0, &[2])],
            vec![p(1, &[1]), p(0, &[1, 1]), LaurentHalf::one()],
        ]);
        let g = |r: usize, c: usize| m.get(r, c).clone();
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&g(r1, c1) * &g(r2, c2)) - &(&g(r1, c2) * &g(r2, c1));
        let cof = &(&(&g(0, 0) * &minor(1, 2, 1, 2)) - &(&g(0, 1) * &minor(1, 2, 0, 2))) + &(&g(0, 2) * &minor(1, 2, 0, 1));
        assert_eq!(m.det().unwrap(), cof);
    }

    #[test]
    fn det_needs_row_swap() {
        let m = DenseMatrix::from_rows(vec![
            vec![LaurentHalf::zero(), LaurentHalf::one()],
            vec![-LaurentHalf::one(), LaurentHalf::zero()],
        ]);
        assert_eq!(m.det().unwrap(), LaurentHalf::one());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = DenseMatrix::from_rows(vec![
            vec![p(0, &[1, 0, -1]), LaurentHalf::t_half(1)],
            vec![LaurentHalf::t_half(1), LaurentHalf::zero()],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn singular_is_reported() {
        let m = DenseMatrix::from_rows(vec![vec![LaurentHalf::one(), LaurentHalf::one()], vec![LaurentHalf::one(), LaurentHalf::one()]]);
        assert!(matches!(m.inverse(), Err(Error::NotInvertible)));
    }
}

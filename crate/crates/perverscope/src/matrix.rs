//! Dense matrices over an exact field, with deterministic Gaussian elimination.
//!
//! Pivots are chosen as the first nonzero entry in row-major scan order, never
//! by magnitude, so identical inputs produce identical echelon forms, kernels,
//! and solutions on every run. Rational rows are rescaled to primitive integer
//! vectors between elimination steps (see [`Scalar::reduce_row`]).

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<K: Scalar> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Matrix<K> {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix<K> {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Matrix<K>> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::input("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Matrix<K> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>], field: &FieldSpec) -> Matrix<K> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(r, c, |i, j| K::from_int(rows[i][j], field))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix<K> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(
            self.cols, other.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                if !self.at(i, k).is_zero() && !other.at(k, j).is_zero() {
                    acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for k in 0..self.cols {
                    if !self.at(i, k).is_zero() && !v[k].is_zero() {
                        acc = acc + self.at(i, k).clone() * v[k].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j).clone()
        })
    }

    pub fn sub(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - other.at(i, j).clone()
        })
    }

    pub fn scale(&self, c: &K) -> Matrix<K> {
        Matrix::from_fn(self.rows, self.cols, |i, j| c.clone() * self.at(i, j).clone())
    }

    pub fn neg(&self) -> Matrix<K> {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `self` to the left of `other`.
    pub fn hstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix<K> {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.at(i, cols[j]).clone())
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot columns
    /// in increasing order. Pivot choice is the first nonzero entry scanning the
    /// remaining rows top to bottom for each column left to right.
    pub fn rref(&mut self) -> Vec<usize> {
        for i in 0..self.rows {
            let row = &mut self.data[i * self.cols..(i + 1) * self.cols];
            K::reduce_row(row);
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            // Eliminate below.
            for i in (r + 1)..self.rows {
                if !self.at(i, c).is_zero() {
                    let factor = self.at(i, c).clone()
                        * self.at(r, c).inverse().expect("pivot is nonzero");
                    self.row_sub_scaled(i, r, &factor);
                    let row = &mut self.data[i * self.cols..(i + 1) * self.cols];
                    K::reduce_row(row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        // Back-substitution: normalize pivots to 1, clear above.
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = self.at(r, c).inverse().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.at(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..r {
                if !self.at(i, c).is_zero() {
                    let factor = self.at(i, c).clone();
                    self.row_sub_scaled(i, r, &factor);
                }
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[i] -= factor * row[r]
    fn row_sub_scaled(&mut self, i: usize, r: usize, factor: &K) {
        for j in 0..self.cols {
            if !self.at(r, j).is_zero() {
                let v = self.at(i, j).clone() - factor.clone() * self.at(r, j).clone();
                self.set(i, j, v);
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical basis of the right kernel `{x : M x = 0}`, one vector per free
    /// column of the reduced echelon form, in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (r, &c) in pivots.iter().enumerate() {
                if c < f {
                    v[c] = -m.at(r, f).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Solves `M x = b`. Returns the canonical particular solution (free
    /// variables zero), [`Error::NoSolution`] when `b` is outside the image,
    /// and an input error on dimension mismatch.
    pub fn solve(&self, b: &[K]) -> Result<Vec<K>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "solve dimension mismatch: matrix has {} rows, vector has {} entries",
                self.rows,
                b.len()
            )));
        }
        let rhs = Matrix {
            rows: self.rows,
            cols: 1,
            data: b.to_vec(),
        };
        let mut aug = self.hstack(&rhs);
        let pivots = aug.rref();
        if pivots.last().is_some_and(|&c| c == self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Ok(x)
    }

    /// Solves `M X = B` column by column; fails with [`Error::NoSolution`] if any
    /// column of `B` is outside the image.
    pub fn solve_matrix(&self, b: &Matrix<K>) -> Result<Matrix<K>> {
        if b.rows != self.rows {
            return Err(Error::input(format!(
                "solve dimension mismatch: {} vs {} rows",
                self.rows, b.rows
            )));
        }
        let mut aug = self.hstack(b);
        let pivots = aug.rref();
        if pivots.last().is_some_and(|&c| c >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Matrix::zero(self.cols, b.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, aug.at(r, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// Indices of a row subset forming a basis of the row space, plus the
    /// reduced form; used to extract canonical complement bases.
    pub fn row_space_basis(&self) -> Matrix<K> {
        let mut m = self.clone();
        let pivots = m.rref();
        let r = pivots.len();
        Matrix::from_fn(r, self.cols, |i, j| m.at(i, j).clone())
    }

    /// True when `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.cols);
        let rhs = Matrix {
            rows: 1,
            cols: self.cols,
            data: v.to_vec(),
        };
        let stacked = self.vstack(&rhs);
        stacked.rank() == self.rank()
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).render()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};

    fn qmat(rows: &[Vec<i64>]) -> Matrix<Rat> {
        Matrix::from_int_rows(rows, &FieldSpec::Rationals)
    }

    #[test]
    fn rank_and_kernel() {
        let m = qmat(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_transpose_agrees() {
        let m = qmat(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8], vec![9, 10, 11]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_roundtrip_and_no_solution() {
        let m = qmat(&[vec![1, 1], vec![1, -1], vec![2, 0]]);
        let b: Vec<Rat> = m.mul_vec(&[
            Rat::from_int(3, &FieldSpec::Rationals),
            Rat::from_int(-2, &FieldSpec::Rationals),
        ]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let bad = vec![
            Rat::from_int(1, &FieldSpec::Rationals),
            Rat::from_int(0, &FieldSpec::Rationals),
            Rat::from_int(0, &FieldSpec::Rationals),
        ];
        assert!(matches!(m.solve(&bad), Err(Error::NoSolution)));

        let short = vec![Rat::from_int(1, &FieldSpec::Rationals)];
        assert!(matches!(m.solve(&short), Err(Error::Input(_))));
    }

    #[test]
    fn fp_agrees_with_rationals_mod_p() {
        let rows = vec![vec![2, 5, 7], vec![3, 1, 4], vec![5, 6, 11]];
        let q = qmat(&rows);
        // Every 2x2 minor is +-13, so rank drops to 1 over F_13 but not F_7.
        let p7: Matrix<Fp> = Matrix::from_int_rows(&rows, &FieldSpec::Prime(7));
        assert_eq!(q.rank(), p7.rank());
        let p13: Matrix<Fp> = Matrix::from_int_rows(&rows, &FieldSpec::Prime(13));
        assert_eq!(p13.rank(), 1);
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = qmat(&[vec![2, 4], vec![1, 2]]);
        let mut b = qmat(&[vec![1, 2], vec![3, 6]]);
        a.rref();
        b.rref();
        assert_eq!(a.render_rows(), b.render_rows());
    }
}

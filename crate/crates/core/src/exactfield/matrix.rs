use std::fmt;

use super::{Scalar, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct RowReduction {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Subspace,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`Matrix::from_rows`] but keeps `cols` for an empty row list.
    pub fn from_rows_with_cols(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_cols(cols: Vec<Vec<Scalar>>, rows: usize) -> Self {
        Self::from_rows_with_cols(cols, rows).transpose()
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }

    /// Reduced row-echelon form by leftmost-pivot Gauss–Jordan elimination.
    ///
    /// The pivot row in each column is the first remaining row with a
    /// nonzero entry, so the output is reproducible.
    pub fn rref(&self) -> RowReduction {
        let (reduced, pivots) = self.echelon();
        let kernel = kernel_from_rref(&reduced, &pivots);
        RowReduction { rank: pivots.len(), reduced, pivots, kernel }
    }

    /// Reduced rows (zero rows dropped) and pivot columns, without the kernel.
    pub(crate) fn echelon(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = self.row_vecs();
        let ncols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for x in rows[r][c..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let pivot_row = rows[r].clone();
            let nz: Vec<usize> = (c..ncols).filter(|&k| !pivot_row[k].is_zero()).collect();
            for (k, row) in rows.iter_mut().enumerate() {
                if k == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for &j in &nz {
                    let t = &f * &pivot_row[j];
                    row[j] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(pivots.len());
        (Matrix::from_rows_with_cols(rows, ncols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn kernel(&self) -> Subspace {
        self.rref().kernel
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let red = aug.rref();
        if red.pivots.iter().take(n).enumerate().any(|(k, &p)| p != k) || red.rank < n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| red.reduced[(r, n + c)].clone()))
    }

    /// Solves `self · x = b`; returns one solution if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let n = self.cols;
        let aug = Matrix::from_fn(self.rows, n + 1, |r, c| if c < n { self[(r, c)].clone() } else { b[r].clone() });
        let red = aug.rref();
        if red.pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); n];
        for (row, &p) in red.pivots.iter().enumerate() {
            x[p] = red.reduced[(row, n)].clone();
        }
        Ok(Some(x))
    }

    /// True iff `m·v = λ·v` exactly.
    pub fn is_eigenvector(&self, v: &[Scalar], lambda: &Scalar) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        if v.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroVector);
        }
        let mv = self.apply(v)?;
        Ok(mv.iter().zip(v).all(|(a, b)| *a == lambda * b))
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut rows = self.row_vecs();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&k| !rows[k][c].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let piv = rows[c][c].clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for k in c + 1..n {
                if rows[k][c].is_zero() {
                    continue;
                }
                let f = &rows[k][c] * &inv;
                for j in c..n {
                    let t = &f * &rows[c][j];
                    rows[k][j] -= &t;
                }
            }
        }
        Ok(det)
    }
}

fn kernel_from_rref(reduced: &Matrix, pivots: &[usize]) -> Subspace {
    let n = reduced.cols();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = &reduced[(row, f)];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    Subspace::span(n, basis)
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(Scalar::to_literal).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

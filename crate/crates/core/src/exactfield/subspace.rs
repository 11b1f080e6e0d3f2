use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by the canonical RREF basis.
///
/// Two subspaces are equal iff their basis matrices are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let (basis, _) = Matrix::from_rows_with_cols(vectors, ambient_dim).echelon();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut v = self.basis_vectors();
        v.extend(other.basis_vectors());
        Ok(Subspace::span(self.ambient_dim, v))
    }

    /// Linear functionals (as row vectors) whose common zero set is `self`.
    pub fn constraints(&self) -> Matrix {
        let k = self.basis.kernel();
        k.basis.clone()
    }

    /// Intersection as the kernel of the stacked constraint matrices.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let stacked = self.constraints().vstack(&other.constraints())?;
        if stacked.rows() == 0 {
            return Ok(Subspace::full(self.ambient_dim));
        }
        Ok(stacked.kernel())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let c = self.constraints();
        (0..c.rows()).all(|r| {
            let mut acc = Scalar::zero();
            for (a, b) in c.row(r).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc.is_zero()
        })
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Vectors from `candidates`, taken greedily in order, that extend
    /// `self` to `self + span(candidates)` as a direct complement.
    pub fn complement_from(&self, candidates: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut current = self.clone();
        let mut chosen = Vec::new();
        for v in candidates {
            let next = current.sum(&Subspace::span(self.ambient_dim, vec![v.clone()])).expect("same ambient");
            if next.dim() > current.dim() {
                chosen.push(v.clone());
                current = next;
            }
        }
        chosen
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v ∉ self`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let pivots: Vec<usize> =
            (0..self.dim()).map(|r| self.basis.row(r).iter().position(|x| !x.is_zero()).expect("nonzero row")).collect();
        let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Scalar::zero(); self.ambient_dim];
        for (row, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.basis.row(row).iter().enumerate() {
                if !x.is_zero() {
                    recon[j] += &(c * x);
                }
            }
        }
        (recon.as_slice() == v).then_some(coords)
    }

    /// Image under `v ↦ f(v)` of the basis, re-spanned.
    pub fn map(&self, ambient_dim: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Subspace {
        Subspace::span(ambient_dim, (0..self.dim()).map(|r| f(self.basis.row(r))).collect())
    }
}

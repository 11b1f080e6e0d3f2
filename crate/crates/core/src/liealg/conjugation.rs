use super::{Block, LieAlgebra};
use crate::exactfield::{conjugate_vector, unit_vector, Matrix, Scalar, Subspace, Vector};

/// Compact conjugation `v ↦ M · v̄` fixing the real form `k`.
#[derive(Clone, Debug)]
pub struct Conjugation {
    pub matrix: Matrix,
    real_basis: Vec<Vector>,
}

impl Conjugation {
    /// `e_pq ↦ −e_qp`, `h ↦ −h` on each `sl(n)`, identity on the center.
    pub fn compact(alg: &LieAlgebra) -> Self {
        let dim = alg.dim();
        let mut m = Matrix::zeros(dim, dim);
        let mut real_basis = Vec::new();
        let i = Scalar::i();
        for block in alg.blocks() {
            match *block {
                Block::SlN { n, offset } => {
                    for k in 0..n - 1 {
                        m[(offset + k, offset + k)] = Scalar::from_int(-1);
                        real_basis.push(crate::exactfield::scale_vector(&i, &unit_vector(dim, offset + k)));
                    }
                    let positions = super::algebra::sl_root_positions(n);
                    let half = positions.len() / 2;
                    for t in 0..half {
                        let (a, b) = (offset + n - 1 + t, offset + n - 1 + half + t);
                        m[(b, a)] = Scalar::from_int(-1);
                        m[(a, b)] = Scalar::from_int(-1);
                        let (ea, eb) = (unit_vector(dim, a), unit_vector(dim, b));
                        real_basis.push(crate::exactfield::sub_vectors(&ea, &eb));
                        real_basis.push(crate::exactfield::scale_vector(&i, &crate::exactfield::add_vectors(&ea, &eb)));
                    }
                }
                Block::Center { offset, .. } => {
                    m[(offset, offset)] = Scalar::one();
                    real_basis.push(unit_vector(dim, offset));
                }
            }
        }
        Conjugation { matrix: m, real_basis }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(&conjugate_vector(v)).expect("dimension of g")
    }

    pub fn apply_subspace(&self, s: &Subspace) -> Subspace {
        s.map(s.ambient_dim(), |v| self.apply(v))
    }

    /// A basis of `k` over `R` (elements fixed by the conjugation).
    pub fn real_basis(&self) -> &[Vector] {
        &self.real_basis
    }

    /// True iff `s ∩ k = {0}`, i.e. `s ∩ s̄ = {0}` for a complex subspace.
    pub fn meets_real_form_trivially(&self, s: &Subspace) -> bool {
        s.intersect(&self.apply_subspace(s)).map(|x| x.dim() == 0).unwrap_or(false)
    }
}

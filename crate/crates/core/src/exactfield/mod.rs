//! Exact arithmetic over `Q(i)[√d]` and dense linear algebra on top of it.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, RowReduction};
pub use scalar::Scalar;
pub use subspace::Subspace;

/// Column vector over [`Scalar`].
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = zero_vector(n);
    v[k] = Scalar::one();
    v
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Accumulates `c·v` into `acc`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn conjugate_vector(v: &[Scalar]) -> Vector {
    v.iter().map(Scalar::conjugate).collect()
}

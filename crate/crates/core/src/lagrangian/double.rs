use crate::exactfield::{Scalar, Subspace, Vector};
use crate::liealg::{Conjugation, LieAlgebra};

/// The double `d = g ⊕ g`, pairing `κ(a′, b′) − κ(a, b)`, componentwise bracket.
///
/// Elements are stored as `(a, a′)` concatenated into one vector of length `2·dim g`.
#[derive(Clone, Debug)]
pub struct Double {
    alg: LieAlgebra,
}

impl Double {
    pub fn new(alg: &LieAlgebra) -> Self {
        Double { alg: alg.clone() }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        2 * self.alg.dim()
    }

    pub fn join(&self, a: &[Scalar], a_prime: &[Scalar]) -> Vector {
        let mut v = a.to_vec();
        v.extend_from_slice(a_prime);
        v
    }

    pub fn split<'v>(&self, v: &'v [Scalar]) -> (&'v [Scalar], &'v [Scalar]) {
        v.split_at(self.alg.dim())
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let (a, ap) = self.split(x);
        let (b, bp) = self.split(y);
        &self.alg.kappa(ap, bp) - &self.alg.kappa(a, b)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let (a, ap) = self.split(x);
        let (b, bp) = self.split(y);
        self.join(&self.alg.bracket(a, b), &self.alg.bracket(ap, bp))
    }

    /// `s1 ⊞ s2 ⊂ d`.
    pub fn boxplus(&self, s1: &Subspace, s2: &Subspace) -> Subspace {
        let n = self.alg.dim();
        let zero = vec![Scalar::zero(); n];
        let mut vecs: Vec<Vector> = s1.basis_vectors().iter().map(|a| self.join(a, &zero)).collect();
        vecs.extend(s2.basis_vectors().iter().map(|b| self.join(&zero, b)));
        Subspace::span(self.dim(), vecs)
    }

    /// `g ⊞ 0`.
    pub fn left_factor(&self) -> Subspace {
        self.boxplus(&Subspace::full(self.alg.dim()), &Subspace::zero(self.alg.dim()))
    }

    /// `0 ⊞ g`.
    pub fn right_factor(&self) -> Subspace {
        self.boxplus(&Subspace::zero(self.alg.dim()), &Subspace::full(self.alg.dim()))
    }

    /// Componentwise conjugation, fixing `k ⊞ k`.
    pub fn conjugate(&self, conj: &Conjugation, x: &[Scalar]) -> Vector {
        let (a, ap) = self.split(x);
        self.join(&conj.apply(a), &conj.apply(ap))
    }

    pub fn conjugate_subspace(&self, conj: &Conjugation, s: &Subspace) -> Subspace {
        s.map(self.dim(), |v| self.conjugate(conj, v))
    }

    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(i, a)| basis[i..].iter().all(|b| self.pairing(a, b).is_zero()))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(i, a)| basis[i + 1..].iter().all(|b| s.contains_vector(&self.bracket(a, b))))
    }

    /// True iff `s` is isotropic of half dimension and bracket-closed.
    pub fn is_lagrangian_subalgebra(&self, s: &Subspace) -> bool {
        s.dim() * 2 == self.dim() && self.is_isotropic(s) && self.is_subalgebra(s)
    }
}

/// Smallest bracket-closed subspace containing `generators`.
pub fn bracket_closure(ambient: usize, generators: Vec<Vector>, bracket: impl Fn(&[Scalar], &[Scalar]) -> Vector) -> Subspace {
    let mut span = Subspace::span(ambient, generators);
    loop {
        let basis = span.basis_vectors();
        let mut vecs = basis.clone();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                vecs.push(bracket(a, b));
            }
        }
        let next = Subspace::span(ambient, vecs);
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

use crate::error::{Error, Result};
use crate::exactfield::{unit_vector, Subspace};
use crate::liealg::{CartanFrame, Conjugation, LieAlgebra};

/// `l = n_+ ⊕ t_{1,0}` for a positive system and a κ-isotropic `t_{1,0} ⊂ h`.
#[derive(Clone, Debug)]
pub struct SamelsonSubalgebra {
    pub frame: CartanFrame,
    pub t10: Subspace,
    pub subspace: Subspace,
}

impl SamelsonSubalgebra {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// `l̄ = n_− ⊕ t_{0,1}`.
    pub fn conjugate(&self, conj: &Conjugation) -> Subspace {
        conj.apply_subspace(&self.subspace)
    }

    pub fn t01(&self, conj: &Conjugation) -> Subspace {
        conj.apply_subspace(&self.t10)
    }

    /// Recomputes every invariant from scratch.
    pub fn check(&self, alg: &LieAlgebra, conj: &Conjugation) -> Result<()> {
        let l = &self.subspace;
        if !alg.is_subalgebra(l) {
            return Err(Error::InvalidSamelson("l is not closed under the bracket".into()));
        }
        if !alg.is_isotropic(l) {
            return Err(Error::InvalidSamelson("l is not κ-isotropic".into()));
        }
        if l.dim() * 2 != alg.dim() {
            return Err(Error::InvalidSamelson(format!("dim l = {} but dim g = {}", l.dim(), alg.dim())));
        }
        if !conj.meets_real_form_trivially(l) {
            return Err(Error::InvalidSamelson("l meets the real form k".into()));
        }
        for &k in &self.frame.cartan_indices {
            let h = unit_vector(alg.dim(), k);
            for v in l.basis_vectors() {
                if !l.contains_vector(&alg.bracket(&h, &v)) {
                    return Err(Error::InvalidSamelson("[t, l] is not contained in l".into()));
                }
            }
        }
        Ok(())
    }
}

/// Builds and validates `l = n_+ ⊕ t_{1,0}`.
pub fn samelson(alg: &LieAlgebra, frame: &CartanFrame, conj: &Conjugation, t10: &Subspace) -> Result<SamelsonSubalgebra> {
    if t10.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: t10.ambient_dim() });
    }
    if !frame.cartan().contains(t10)? {
        return Err(Error::InvalidSamelson("t10 is not contained in the Cartan subalgebra".into()));
    }
    if t10.dim() * 2 != frame.rank() {
        return Err(Error::InvalidSamelson(format!("dim t10 = {} but the rank is {}", t10.dim(), frame.rank())));
    }
    if !alg.is_isotropic(t10) {
        return Err(Error::InvalidSamelson("t10 is not κ-isotropic".into()));
    }
    if !conj.meets_real_form_trivially(t10) {
        return Err(Error::InvalidSamelson("t10 meets the real Cartan t".into()));
    }
    let subspace = frame.n_plus().sum(t10)?;
    let out = SamelsonSubalgebra { frame: frame.clone(), t10: t10.clone(), subspace };
    out.check(alg, conj)?;
    Ok(out)
}

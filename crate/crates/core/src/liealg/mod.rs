//! Complexified compact Lie algebras of type A plus a center, with κ, roots
//! and the compact conjugation.

pub(crate) mod algebra;
mod conjugation;
mod frame;
mod spec;

pub use algebra::{cartan_three_form, dual_basis, dual_basis_of, Block, LieAlgebra, ThreeForm};
pub use conjugation::Conjugation;
pub use frame::{weyl_norm, CartanFrame, PositiveSystem, Root};
pub use spec::GroupSpec;

use crate::error::Result;

/// Algebra, standard frame and compact conjugation for a validated spec.
pub fn build(spec: &GroupSpec) -> Result<(LieAlgebra, CartanFrame, Conjugation)> {
    spec.validate()?;
    build_lenient(spec)
}

/// As [`build`], but accepts odd dimension or rank.
pub fn build_lenient(spec: &GroupSpec) -> Result<(LieAlgebra, CartanFrame, Conjugation)> {
    let alg = LieAlgebra::from_spec(spec)?;
    let frame = CartanFrame::new(&alg, PositiveSystem::standard(&alg))?;
    let conj = Conjugation::compact(&alg);
    Ok((alg, frame, conj))
}

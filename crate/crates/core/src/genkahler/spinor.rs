use std::fmt;

use crate::clifford::{CliffordAlgebra, CliffordElement};
use crate::error::{Error, Result};
use crate::exactfield::{unit_vector, Matrix, Scalar, Subspace, Vector};
use crate::lagrangian::GKPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

/// `u = b̄_1 · … · b̄_{n+s}` together with its annihilator in `d`.
#[derive(Clone, Debug)]
pub struct PureSpinor {
    pub side: Side,
    pub element: CliffordElement,
    /// The first `n` span the left space, the last `n` the right space and
    /// the final `s` span `p̄`.
    pub generators: Vec<Vector>,
    pub n: usize,
    pub s: usize,
    pub annihilator: Subspace,
}

/// `(W_L, W_R)`: `u` is killed by left multiplication with `W_L` and by
/// right multiplication with `W_R`, so its annihilator is `W_R ⊞ W_L`.
///
/// Plus side: `(l̄_+, l̄_−)`. Minus side: `(l̄_+, l_−)`.
pub fn spinor_spaces(pair: &GKPair, side: Side) -> (Subspace, Subspace) {
    match side {
        Side::Plus => (pair.lbar_plus.clone(), pair.lbar_minus.clone()),
        Side::Minus => (pair.lbar_plus.clone(), pair.l_minus.subspace.clone()),
    }
}

/// `𝔏̄_+ = l̄_− ⊞ l̄_+` or `𝔏̄_− = l_− ⊞ l̄_+`.
pub fn expected_annihilator(pair: &GKPair, side: Side) -> Subspace {
    match side {
        Side::Plus => pair.big_plus_bar(),
        Side::Minus => pair.big_minus_bar(),
    }
}

/// Generators `(c, I, p̄)` with `I = W_L ∩ W_R`, `c` a complement of `I` in
/// `W_L` and `p̄` a complement of `I` in `W_R`, taken inside the Cartan
/// subalgebra first.
pub fn default_generators(pair: &GKPair, side: Side) -> Result<Vec<Vector>> {
    let (wl, wr) = spinor_spaces(pair, side);
    let inter = wl.intersect(&wr)?;
    let c = inter.complement_from(&wl.basis_vectors());
    let mut candidates = wr.intersect(&pair.l_minus.frame.cartan())?.basis_vectors();
    candidates.extend(wr.basis_vectors());
    let p = inter.complement_from(&candidates);
    let mut out = c;
    out.extend(inter.basis_vectors());
    out.extend(p);
    Ok(out)
}

pub fn build_pure_spinor(cl: &CliffordAlgebra, pair: &GKPair, side: Side) -> Result<PureSpinor> {
    pure_spinor_from_generators(cl, pair, side, default_generators(pair, side)?)
}

/// Checks the basis condition on `generators` and forms their product.
pub fn pure_spinor_from_generators(cl: &CliffordAlgebra, pair: &GKPair, side: Side, generators: Vec<Vector>) -> Result<PureSpinor> {
    cl.algebra().check_same(&pair.alg)?;
    let dim = pair.alg.dim();
    let (wl, wr) = spinor_spaces(pair, side);
    let n = wl.dim();
    let total = generators.len();
    if total < n || total > 2 * n || generators.iter().any(|g| g.len() != dim) {
        return Err(Error::DegenerateGenerators);
    }
    let s = total - n;
    let span = |vs: &[Vector]| Subspace::span(dim, vs.to_vec());
    if span(&generators).dim() != total || span(&generators[..n]) != wl || span(&generators[s..]) != wr {
        return Err(Error::DegenerateGenerators);
    }
    let element = cl.product_of_vectors(&generators);
    if element.is_zero() {
        return Err(Error::DegenerateGenerators);
    }
    let annihilator = annihilator_of(cl, pair, &element);
    Ok(PureSpinor { side, element, generators, n, s, annihilator })
}

/// Kernel of `â ↦ â ∘ u` on `d`.
pub fn annihilator_of(cl: &CliffordAlgebra, pair: &GKPair, u: &CliffordElement) -> Subspace {
    let d = &pair.double;
    let cols: Vec<Vec<Scalar>> = (0..d.dim())
        .map(|k| {
            let e = unit_vector(d.dim(), k);
            let (a, ap) = d.split(&e);
            cl.spinor_action(a, ap, u).to_dense(cl.generators())
        })
        .collect();
    Matrix::from_cols(cols, cl.dim()).kernel()
}

/// Lowest degree of the form `(q ∘ ⋆)^{-1}(u)`.
pub fn type_of(cl: &CliffordAlgebra, u: &CliffordElement, mu_scale: &Scalar) -> Result<usize> {
    let form = cl.star_inv(&cl.dequantize(u), mu_scale)?;
    form.min_grade().ok_or(Error::ZeroVector)
}

/// `dim_C(W_L ∩ W_R)`, whose parity the type must share.
pub fn expected_type_parity(pair: &GKPair, side: Side) -> Result<usize> {
    let (wl, wr) = spinor_spaces(pair, side);
    Ok(wl.intersect(&wr)?.dim() % 2)
}

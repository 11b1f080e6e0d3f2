use super::double::Double;
use super::evens_lu::LagrangianSubalgebra;
use super::samelson::SamelsonSubalgebra;
use crate::error::{Error, Result};
use crate::exactfield::{Subspace, Vector};
use crate::liealg::{dual_basis, Conjugation, LieAlgebra};

/// Outcome of [`split_classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    /// `L = l_a ⊞ l_b`.
    Split {
        left: Subspace,
        right: Subspace,
    },
    NonSplit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub splitting: Splitting,
    /// `L ∩ (k ⊞ k) = {0}`.
    pub gc: bool,
}

pub fn split_classify(double: &Double, conj: &Conjugation, l: &Subspace) -> Result<Classification> {
    let left = l.intersect(&double.left_factor())?;
    let right = l.intersect(&double.right_factor())?;
    let n = double.algebra().dim();
    let splitting = if left.dim() + right.dim() == l.dim() {
        Splitting::Split { left: left.map(n, |v| double.split(v).0.to_vec()), right: right.map(n, |v| double.split(v).1.to_vec()) }
    } else {
        Splitting::NonSplit
    };
    let gc = l.intersect(&double.conjugate_subspace(conj, l))?.dim() == 0;
    Ok(Classification { splitting, gc })
}

/// `b_i ∈ l`, `b̄_i ∈ l̄` with `κ(b_i, b̄_j) = δ_ij`.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub b: Vec<Vector>,
    pub bbar: Vec<Vector>,
}

/// A pair of Samelson subalgebras and the derived Lagrangians of `d`.
#[derive(Clone, Debug)]
pub struct GKPair {
    pub alg: LieAlgebra,
    pub conj: Conjugation,
    pub double: Double,
    pub l_plus: SamelsonSubalgebra,
    pub l_minus: SamelsonSubalgebra,
    pub lbar_plus: Subspace,
    pub lbar_minus: Subspace,
    /// `𝔏_+ = l_− ⊞ l_+`.
    pub big_plus: LagrangianSubalgebra,
    /// `𝔏_− = l̄_− ⊞ l_+`.
    pub big_minus: LagrangianSubalgebra,
    /// Same Borel subalgebra on both sides.
    pub induced: bool,
    /// `l_+ = l_−`.
    pub canonical: bool,
    pub dual_plus: DualPair,
    pub dual_minus: DualPair,
    pub rho_plus: Vector,
    pub rho_minus: Vector,
}

impl GKPair {
    pub fn n(&self) -> usize {
        self.alg.dim() / 2
    }

    /// `𝔏̄_+ = l̄_− ⊞ l̄_+`.
    pub fn big_plus_bar(&self) -> Subspace {
        self.double.boxplus(&self.lbar_minus, &self.lbar_plus)
    }

    /// `𝔏̄_− = l_− ⊞ l̄_+`.
    pub fn big_minus_bar(&self) -> Subspace {
        self.double.boxplus(&self.l_minus.subspace, &self.lbar_plus)
    }

    /// The GKPair invariants, as `(name, holds)`.
    pub fn invariant_checks(&self) -> Result<Vec<(&'static str, bool)>> {
        let d = &self.double;
        let mut out = Vec::new();
        for (names, big) in [
            (["L+ lagrangian subalgebra", "L+ meets k+k trivially"], &self.big_plus),
            (["L- lagrangian subalgebra", "L- meets k+k trivially"], &self.big_minus),
        ] {
            out.push((names[0], big.is_valid(d)));
            out.push((names[1], split_classify(d, &self.conj, &big.subspace)?.gc));
        }
        let left = self.big_plus.subspace.intersect(&d.left_factor())?;
        let right = self.big_plus.subspace.intersect(&d.right_factor())?;
        let zero = Subspace::zero(self.alg.dim());
        out.push(("L+ ∩ (g ⊞ 0) = l- ⊞ 0", left == d.boxplus(&self.l_minus.subspace, &zero)));
        out.push(("L+ ∩ (0 ⊞ g) = 0 ⊞ l+", right == d.boxplus(&zero, &self.l_plus.subspace)));
        Ok(out)
    }
}

/// Assembles the pair `(l_+, l_−)` and checks the invariants.
pub fn gk_pair(alg: &LieAlgebra, conj: &Conjugation, l_plus: &SamelsonSubalgebra, l_minus: &SamelsonSubalgebra) -> Result<GKPair> {
    let dim = alg.dim();
    if l_plus.subspace.ambient_dim() != dim || l_minus.subspace.ambient_dim() != dim {
        return Err(Error::AlgebraMismatch);
    }
    l_plus.check(alg, conj)?;
    l_minus.check(alg, conj)?;
    let double = Double::new(alg);
    let lbar_plus = l_plus.conjugate(conj);
    let lbar_minus = l_minus.conjugate(conj);
    let big_plus = LagrangianSubalgebra { subspace: double.boxplus(&l_minus.subspace, &l_plus.subspace), evens_lu: None };
    let big_minus = LagrangianSubalgebra { subspace: double.boxplus(&lbar_minus, &l_plus.subspace), evens_lu: None };
    let (b, bbar) = dual_basis(alg, &l_plus.subspace, &lbar_plus)?;
    let dual_plus = DualPair { b, bbar };
    let (b, bbar) = dual_basis(alg, &l_minus.subspace, &lbar_minus)?;
    let dual_minus = DualPair { b, bbar };
    let pair = GKPair {
        alg: alg.clone(),
        conj: conj.clone(),
        induced: l_plus.frame.same_borel(&l_minus.frame),
        canonical: l_plus.subspace == l_minus.subspace,
        rho_plus: l_plus.frame.weyl.clone(),
        rho_minus: l_minus.frame.weyl.clone(),
        double,
        l_plus: l_plus.clone(),
        l_minus: l_minus.clone(),
        lbar_plus,
        lbar_minus,
        big_plus,
        big_minus,
        dual_plus,
        dual_minus,
    };
    if let Some((name, _)) = pair.invariant_checks()?.into_iter().find(|(_, ok)| !ok) {
        return Err(Error::NotLagrangian(name.to_string()));
    }
    Ok(pair)
}

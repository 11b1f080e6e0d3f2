//! Chevalley–Eilenberg cohomology with trivial coefficients, the first
//! spectral-sequence pages of `L̄` at the invariant level, and Picard
//! dimension counts.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::clifford::{grade, Form, Mask};
use crate::error::{Error, Result};
use crate::exactfield::{Matrix, Scalar, Subspace, Vector};
use crate::genkahler::Side;
use crate::lagrangian::GKPair;
use crate::liealg::LieAlgebra;

/// Structure constants `[x_i, x_j] = Σ_k c[i][j][k] x_k` of a Lie algebra
/// given by a basis.
#[derive(Clone, Debug)]
pub struct LieStructure {
    dim: usize,
    constants: Vec<Vec<Vec<Scalar>>>,
}

impl LieStructure {
    /// Reads off the structure constants of `span(basis)`; fails when the
    /// span is not closed under `bracket`.
    pub fn from_basis(basis: &[Vector], bracket: impl Fn(&[Scalar], &[Scalar]) -> Vector) -> Result<Self> {
        let dim = basis.len();
        let Some(ambient) = basis.first().map(Vec::len) else {
            return Ok(Self::abelian(0));
        };
        let m = Matrix::from_cols(basis.to_vec(), ambient);
        let mut constants = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let c = m.solve(&bracket(&basis[i], &basis[j]))?.ok_or(Error::NotSubalgebra)?;
                constants[j][i] = c.iter().map(|x| -x).collect();
                constants[i][j] = c;
            }
        }
        Ok(LieStructure { dim, constants })
    }

    pub fn abelian(dim: usize) -> Self {
        LieStructure { dim, constants: vec![vec![vec![Scalar::zero(); dim]; dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `self ⊕ other` with `[self, other] = 0`.
    pub fn direct_sum(&self, other: &LieStructure) -> LieStructure {
        let dim = self.dim + other.dim;
        let mut constants = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                constants[i][j][..self.dim].clone_from_slice(&self.constants[i][j]);
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                constants[self.dim + i][self.dim + j][self.dim..].clone_from_slice(&other.constants[i][j]);
            }
        }
        LieStructure { dim, constants }
    }

    /// `d e^k = −Σ_{i<j} c_ij^k e^i ∧ e^j`.
    fn d_generator(&self, k: usize) -> Form {
        let mut out = Form::zero();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                out.add_term((1 << i) | (1 << j), &-&self.constants[i][j][k]);
            }
        }
        out
    }

    /// CE differential on a monomial, by `d(e^m ∧ β) = de^m ∧ β − e^m ∧ dβ`.
    pub fn d_monomial(&self, mask: Mask) -> Form {
        if mask == 0 {
            return Form::zero();
        }
        let m = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << m);
        let head = Form::monomial(1 << m, Scalar::one());
        let rest_form = Form::monomial(rest, Scalar::one());
        &self.d_generator(m).wedge(&rest_form) - &head.wedge(&self.d_monomial(rest))
    }
}

/// Monomials of grade `k` on `dim` labels, in increasing order.
fn monomials(dim: usize, k: usize) -> Vec<Mask> {
    (0..(1 as Mask) << dim).filter(|m| grade(*m) == k).collect()
}

/// `d_k : ∧^k → ∧^{k+1}` for `k = 0..=dim`, as matrices over monomial bases.
#[derive(Clone, Debug)]
pub struct CEComplex {
    pub algebra: LieStructure,
    pub differentials: Vec<Matrix>,
}

impl CEComplex {
    pub fn new(algebra: LieStructure) -> Self {
        let dim = algebra.dim();
        let differentials = (0..=dim)
            .into_par_iter()
            .map(|k| {
                let source = monomials(dim, k);
                let target = monomials(dim, k + 1);
                let cols: Vec<Vec<Scalar>> = source
                    .iter()
                    .map(|&m| {
                        let img = algebra.d_monomial(m);
                        target.iter().map(|&t| img.coefficient(t)).collect()
                    })
                    .collect();
                Matrix::from_cols(cols, target.len())
            })
            .collect();
        CEComplex { algebra, differentials }
    }

    pub fn squares_to_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// Betti numbers `b_k = dim ∧^k − rank d_k − rank d_{k−1}`.
    pub fn betti(&self) -> Vec<usize> {
        let dim = self.algebra.dim();
        let ranks: Vec<usize> = self.differentials.par_iter().map(Matrix::rank).collect();
        (0..=dim).map(|k| binomial(dim, k) - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }).collect()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Betti numbers of a bracket-closed subspace of `g`.
pub fn ce_cohomology(alg: &LieAlgebra, sub: &Subspace) -> Result<Vec<usize>> {
    if sub.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: sub.ambient_dim() });
    }
    if !alg.is_subalgebra(sub) {
        return Err(Error::NotSubalgebra);
    }
    let structure = LieStructure::from_basis(&sub.basis_vectors(), |a, b| alg.bracket(a, b))?;
    Ok(CEComplex::new(structure).betti())
}

/// `E1^{p,q} = ∧^p l̄^* ⊗ ∧^q t^{0,1}` with `d1 = d_{l̄} ⊗ id`, and `E2` once
/// computed.
///
/// The plus side uses `l̄ = l̄_+` and `t^{0,1} = (t_{−,(0,1)})^*`; the minus
/// side swaps the roles of `±`.
#[derive(Clone, Debug)]
pub struct DoublePage {
    pub side: Side,
    /// `dim l̄`.
    pub n: usize,
    /// `dim t^{0,1}`, half the rank.
    pub r: usize,
    pub e1: BTreeMap<(usize, usize), usize>,
    /// `d1 : E1^{p,q} → E1^{p+1,q}`.
    pub d1: BTreeMap<(usize, usize), Matrix>,
    pub e2: Option<BTreeMap<(usize, usize), usize>>,
}

fn kron_identity(m: &Matrix, k: usize) -> Matrix {
    Matrix::from_fn(m.rows() * k, m.cols() * k, |i, j| if i % k == j % k { m[(i / k, j / k)].clone() } else { Scalar::zero() })
}

pub fn e1_page(pair: &GKPair, side: Side) -> Result<DoublePage> {
    let (lbar, t_other) = match side {
        Side::Plus => (&pair.lbar_plus, &pair.l_minus.t10),
        Side::Minus => (&pair.lbar_minus, &pair.l_plus.t10),
    };
    let alg = &pair.alg;
    let structure = LieStructure::from_basis(&lbar.basis_vectors(), |a, b| alg.bracket(a, b))?;
    let ce = CEComplex::new(structure);
    let n = lbar.dim();
    let r = t_other.dim();
    let mut e1 = BTreeMap::new();
    let mut d1 = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=r {
            e1.insert((p, q), binomial(n, p) * binomial(r, q));
            d1.insert((p, q), kron_identity(&ce.differentials[p], binomial(r, q)));
        }
    }
    Ok(DoublePage { side, n, r, e1, d1, e2: None })
}

impl DoublePage {
    pub fn d1_squares_to_zero(&self) -> bool {
        self.d1.iter().all(|(&(p, q), m)| match self.d1.get(&(p + 1, q)) {
            Some(next) => next.mul(m).map(|x| x.is_zero()).unwrap_or(false),
            None => true,
        })
    }

    pub fn e2_total(&self) -> Option<usize> {
        self.e2.as_ref().map(|e2| e2.values().sum())
    }

    /// `Σ_{p+q=k} E2^{p,q}`.
    pub fn e2_by_degree(&self) -> Option<Vec<usize>> {
        let e2 = self.e2.as_ref()?;
        let mut out = vec![0; self.n + self.r + 1];
        for (&(p, q), &v) in e2 {
            out[p + q] += v;
        }
        Some(out)
    }
}

/// Cohomology of `(E1, d1)`.
pub fn e2_page(page: &DoublePage) -> DoublePage {
    let ranks: BTreeMap<(usize, usize), usize> = page.d1.iter().map(|(k, m)| (*k, m.rank())).collect();
    let e2 = page
        .e1
        .iter()
        .map(|(&(p, q), &dim)| {
            let outgoing = ranks[&(p, q)];
            let incoming = if p > 0 { ranks[&(p - 1, q)] } else { 0 };
            ((p, q), dim - outgoing - incoming)
        })
        .collect();
    DoublePage { e2: Some(e2), ..page.clone() }
}

/// Betti numbers of `𝔏̄_+ = l̄_− ⊞ l̄_+` with the componentwise bracket of `d`.
pub fn total_cohomology(pair: &GKPair) -> Result<Vec<usize>> {
    let d = &pair.double;
    let structure = LieStructure::from_basis(&pair.big_plus_bar().basis_vectors(), |x, y| d.bracket(x, y))?;
    Ok(CEComplex::new(structure).betti())
}

/// `(a * b)_k = Σ_{i+j=k} a_i b_j`.
pub fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Dimension counts for the Picard group at the trivial class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardReport {
    /// Half the rank.
    pub r: usize,
    /// `dim H^1(l̄_+)`.
    pub h1_lbar_plus: usize,
    /// `dim H^1(𝔏̄_+)`, the tangent space of `ℙic_0` at the trivial class.
    pub tangent_dim: usize,
}

impl PicardReport {
    pub fn consistent(&self) -> bool {
        self.h1_lbar_plus == self.r && self.tangent_dim == 2 * self.r
    }
}

pub fn picard_report(pair: &GKPair) -> Result<PicardReport> {
    let r = pair.l_plus.t10.dim();
    let h1 = |b: &[usize]| b.get(1).copied().unwrap_or(0);
    Ok(PicardReport { r, h1_lbar_plus: h1(&ce_cohomology(&pair.alg, &pair.lbar_plus)?), tangent_dim: h1(&total_cohomology(pair)?) })
}

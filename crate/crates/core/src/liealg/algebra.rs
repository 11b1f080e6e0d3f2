use num_bigint::BigInt;
use num_rational::BigRational;

use super::GroupSpec;
use crate::error::{Error, Result};
use crate::exactfield::{axpy, zero_vector, Matrix, Scalar, Subspace, Vector};

/// One block of the direct-sum decomposition of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    /// `sl(n)` with `n = rank + 1`; basis `h_1..h_{n−1}`, then `e_pq` (p<q),
    /// then `e_qp` (p<q) in the same order.
    SlN { n: usize, offset: usize },
    /// A single central direction `z_j`.
    Center { index: usize, offset: usize },
}

/// Complex Lie algebra `g = k ⊗ C` with structure constants and κ.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `brackets[i][j]` = sparse expansion of `[e_i, e_j]`.
    brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
    kappa: Matrix,
    blocks: Vec<Block>,
    field_d: u32,
}

/// `(p, q)` positions of the root vectors of `sl(n)`, positives first.
pub(crate) fn sl_root_positions(n: usize) -> Vec<(usize, usize)> {
    let mut pos: Vec<(usize, usize)> = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            pos.push((p, q));
        }
    }
    let neg: Vec<(usize, usize)> = pos.iter().map(|&(p, q)| (q, p)).collect();
    pos.extend(neg);
    pos
}

type RatMat = Vec<Vec<BigRational>>;

fn rz() -> BigRational {
    BigRational::from_integer(BigInt::from(0))
}

fn sl_basis_matrices(n: usize) -> Vec<RatMat> {
    let one = BigRational::from_integer(BigInt::from(1));
    let mut out = Vec::new();
    for k in 0..n - 1 {
        let mut m = vec![vec![rz(); n]; n];
        m[k][k] = one.clone();
        m[k + 1][k + 1] = -one.clone();
        out.push(m);
    }
    for (p, q) in sl_root_positions(n) {
        let mut m = vec![vec![rz(); n]; n];
        m[p][q] = one.clone();
        out.push(m);
    }
    out
}

fn commutator(a: &RatMat, b: &RatMat) -> RatMat {
    let n = a.len();
    let mut out = vec![vec![rz(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = rz();
            for k in 0..n {
                acc += &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Coordinates of a traceless matrix in the `sl(n)` basis.
fn sl_coordinates(m: &RatMat) -> Vec<BigRational> {
    let n = m.len();
    let mut coords = Vec::new();
    // diagonal D = Σ c_k (E_kk − E_{k+1,k+1}) with c_k = Σ_{j≤k} D_jj
    let mut run = rz();
    for k in 0..n - 1 {
        run += &m[k][k];
        coords.push(run.clone());
    }
    for (p, q) in sl_root_positions(n) {
        coords.push(m[p][q].clone());
    }
    coords
}

impl LieAlgebra {
    /// Builds `g` for `spec` without the even-dimension/rank checks.
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        spec.validate_structure()?;
        let dim = spec.dim();
        let mut labels = Vec::with_capacity(dim);
        let mut blocks = Vec::new();
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        let mut offset = 0;
        let multi = spec.simple_factors.len() > 1;
        for (f, &rank) in spec.simple_factors.iter().enumerate() {
            let n = rank + 1;
            let prefix = if multi { format!("s{}.", f + 1) } else { String::new() };
            for k in 0..n - 1 {
                labels.push(format!("{prefix}h{}", k + 1));
            }
            for (p, q) in sl_root_positions(n) {
                labels.push(format!("{prefix}e{}{}", p + 1, q + 1));
            }
            let mats = sl_basis_matrices(n);
            for (i, a) in mats.iter().enumerate() {
                for (j, b) in mats.iter().enumerate() {
                    let c = sl_coordinates(&commutator(a, b));
                    brackets[offset + i][offset + j] = c
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| *x != rz())
                        .map(|(k, x)| (offset + k, Scalar::from_rational(x)))
                        .collect();
                }
            }
            blocks.push(Block::SlN { n, offset });
            offset += mats.len();
        }
        for j in 0..spec.abelian_rank {
            labels.push(format!("z{}", j + 1));
            blocks.push(Block::Center { index: j, offset });
            offset += 1;
        }
        debug_assert_eq!(offset, dim);

        let mut alg = LieAlgebra { dim, labels, brackets, kappa: Matrix::zeros(dim, dim), blocks, field_d: spec.field_d };
        alg.kappa = alg.trace_form(spec);
        Ok(alg)
    }

    /// κ = −tr(ad ∘ ad) on the semisimple part, the center Gram on `z`.
    fn trace_form(&self, spec: &GroupSpec) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        let center_start = self.dim - spec.abelian_rank;
        for i in 0..center_start {
            for j in 0..center_start {
                let prod = ads[i].mul(&ads[j]).expect("square");
                let tr: Scalar = (0..self.dim).map(|t| prod[(t, t)].clone()).sum();
                k[(i, j)] = -tr;
            }
        }
        for r in 0..spec.abelian_rank {
            for c in 0..spec.abelian_rank {
                k[(center_start + r, center_start + c)] = spec.center_gram[(r, c)].clone();
            }
        }
        k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn field_d(&self) -> u32 {
        self.field_d
    }

    pub fn kappa_matrix(&self) -> &Matrix {
        &self.kappa
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        crate::exactfield::unit_vector(self.dim, k)
    }

    /// Sparse `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn kappa(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let k = &self.kappa[(i, j)];
                if y.is_zero() || k.is_zero() {
                    continue;
                }
                acc += &(&(x * y) * k);
            }
        }
        acc
    }

    /// The covector `κ(a, ·)` in the dual basis.
    pub fn kappa_flat(&self, a: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, x) in a.iter().enumerate() {
            axpy(&mut out, x, self.kappa.row(i));
        }
        out
    }

    /// Matrix of `ad_{e_i}` (column j = `[e_i, e_j]`).
    pub fn ad(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.brackets[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|row| row.iter().all(Vec::is_empty))
    }

    /// True iff `[s, s] ⊆ s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if !s.contains_vector(&self.bracket(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(i, a)| basis[i..].iter().all(|b| self.kappa(a, b).is_zero()))
    }

    /// κ-dual basis: `dual[i]` satisfies `κ(e_j, dual[i]) = δ_ij`.
    pub fn kappa_dual_basis(&self) -> Vec<Vector> {
        let inv = self.kappa.inverse().expect("κ is nondegenerate");
        (0..self.dim).map(|i| inv.row_vec(i)).collect()
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if !(0..n).all(|t| (&(&t1[t] + &t2[t]) + &t3[t]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `κ([a,b],c) + κ(b,[a,c]) = 0` on all basis triples.
    pub fn kappa_invariant(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let s = &self.kappa(&self.bracket(&a, &b), &c) + &self.kappa(&b, &self.bracket(&a, &c));
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn check_same(&self, other: &LieAlgebra) -> Result<()> {
        if self.dim != other.dim || self.kappa != other.kappa || self.labels != other.labels {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }
}

/// Fully antisymmetric trilinear table `Λ(a,b,c) = κ(a,[b,c])`.
#[derive(Clone, Debug)]
pub struct ThreeForm {
    dim: usize,
    values: Vec<Scalar>,
}

impl ThreeForm {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// Evaluates on arbitrary vectors by trilinearity.
    pub fn eval(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, z) in c.iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        acc += &(&(&xy * z) * v);
                    }
                }
            }
        }
        acc
    }
}

pub fn cartan_three_form(alg: &LieAlgebra) -> ThreeForm {
    let n = alg.dim();
    let mut values = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = Scalar::zero();
                for (t, c) in alg.structure(j, k) {
                    let kv = &alg.kappa_matrix()[(i, *t)];
                    if !kv.is_zero() {
                        acc += &(c * kv);
                    }
                }
                values.push(acc);
            }
        }
    }
    ThreeForm { dim: n, values }
}

/// Bases `{b_i}` of `s1` and `{b̄_j}` of `s2` with `κ(b_i, b̄_j) = δ_ij`.
pub fn dual_basis(alg: &LieAlgebra, s1: &Subspace, s2: &Subspace) -> Result<(Vec<Vector>, Vec<Vector>)> {
    let b1 = s1.basis_vectors();
    let b2 = s2.basis_vectors();
    dual_basis_of(alg, b1, &b2)
}

/// Keeps `b1` as given and returns the dual basis of `span(b2)`.
pub fn dual_basis_of(alg: &LieAlgebra, b1: Vec<Vector>, b2: &[Vector]) -> Result<(Vec<Vector>, Vec<Vector>)> {
    if b1.len() != b2.len() {
        return Err(Error::DegeneratePairing(format!("dimensions {} and {} differ", b1.len(), b2.len())));
    }
    let k = b1.len();
    let pairing = Matrix::from_fn(k, k, |i, j| alg.kappa(&b1[i], &b2[j]));
    let inv = pairing.inverse().map_err(|_| Error::DegeneratePairing("κ restricted to s1 × s2 is singular".into()))?;
    // b̄_j = Σ_t inv[t][j] · b2_t, so that κ(b1_i, b̄_j) = (P · inv)_{ij} = δ_ij
    let dual: Vec<Vector> = (0..k)
        .map(|j| {
            let mut v = zero_vector(alg.dim());
            for (t, w) in b2.iter().enumerate() {
                axpy(&mut v, &inv[(t, j)], w);
            }
            v
        })
        .collect();
    Ok((b1, dual))
}

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use super::blades::{grade, indices, position, CliffordElement, Form, Mask, Multivector};
use super::cache;
use crate::error::{Error, Result};
use crate::exactfield::{Scalar, Vector};
use crate::liealg::{cartan_three_form, LieAlgebra};

/// Sparse rational expansion of a monomial product.
pub(crate) type Expansion = Arc<Vec<(Mask, BigRational)>>;

/// Largest `dim g` accepted (monomials are indexed by `u32`).
pub const MAX_GENERATORS: usize = 16;

/// `Cl(g, κ)` with `xy + yx = 2κ(x, y)`, so `x·x = κ(x, x)`.
///
/// Products of normal-ordered monomials are memoized; the table is a keyed
/// cache safe under concurrent use, optionally persisted to disk.
pub struct CliffordAlgebra {
    alg: LieAlgebra,
    dim: usize,
    gram: Vec<Vec<BigRational>>,
    digest: [u8; 32],
    generator_table: RwLock<HashMap<(usize, Mask), Expansion>>,
    product_table: RwLock<HashMap<(Mask, Mask), Expansion>>,
    antisym_table: RwLock<HashMap<Mask, Arc<CliffordElement>>>,
    theta: OnceLock<CliffordElement>,
    dual: OnceLock<Vec<Vector>>,
}

impl std::fmt::Debug for CliffordAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CliffordAlgebra").field("dim", &self.dim).finish_non_exhaustive()
    }
}

fn rational_entry(x: &Scalar) -> Result<BigRational> {
    x.as_rational().cloned().ok_or_else(|| Error::DegeneratePairing("κ Gram must be rational".into()))
}

impl CliffordAlgebra {
    pub fn new(alg: &LieAlgebra) -> Result<Self> {
        let dim = alg.dim();
        if dim > MAX_GENERATORS {
            return Err(Error::SizeBound(format!("dim g = {dim} exceeds {MAX_GENERATORS}")));
        }
        let k = alg.kappa_matrix();
        let gram =
            (0..dim).map(|i| (0..dim).map(|j| rational_entry(&k[(i, j)])).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Ok(CliffordAlgebra {
            alg: alg.clone(),
            dim,
            gram,
            digest: content_digest(alg),
            generator_table: RwLock::default(),
            product_table: RwLock::default(),
            antisym_table: RwLock::default(),
            theta: OnceLock::new(),
            dual: OnceLock::new(),
        })
    }

    /// Opens the algebra and preloads the product table from `path` if it
    /// holds a table for the same algebra.
    pub fn with_cache(alg: &LieAlgebra, path: &Path) -> Result<Self> {
        let cl = Self::new(alg)?;
        if let Some(entries) = cache::load(path, &cl.digest)? {
            let mut table = cl.product_table.write().expect("cache lock");
            for (key, value) in entries {
                table.insert(key, Arc::new(value));
            }
        }
        Ok(cl)
    }

    /// Writes the current product table to `path`.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let table = self.product_table.read().expect("cache lock");
        let mut entries: Vec<((Mask, Mask), &Vec<(Mask, BigRational)>)> = table.iter().map(|(k, v)| (*k, v.as_ref())).collect();
        entries.sort_by_key(|(k, _)| *k);
        cache::save(path, &self.digest, &entries)
    }

    pub fn cached_products(&self) -> usize {
        self.product_table.read().expect("cache lock").len()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    /// Number of generators, `dim g`.
    pub fn generators(&self) -> usize {
        self.dim
    }

    /// `dim Cl(g, κ) = 2^{dim g}`.
    pub fn dim(&self) -> usize {
        1 << self.dim
    }

    pub fn digest(&self) -> [u8; 32] {
        self.digest
    }

    /// `x_i · e_M`.
    fn generator_times(&self, i: usize, m: Mask) -> Expansion {
        if let Some(e) = self.generator_table.read().expect("cache lock").get(&(i, m)) {
            return e.clone();
        }
        let result: Vec<(Mask, BigRational)> = if m == 0 || i < m.trailing_zeros() as usize {
            vec![(m | (1 << i), BigRational::one())]
        } else {
            let j = m.trailing_zeros() as usize;
            let rest = m & !(1 << j);
            if i == j {
                vec![(rest, self.gram[i][i].clone())]
            } else {
                // x_i x_j = −x_j x_i + 2κ_ij, and x_j prepends to every term of x_i e_rest
                let mut acc: HashMap<Mask, BigRational> = HashMap::new();
                for (t, c) in self.generator_times(i, rest).iter() {
                    *acc.entry(t | (1 << j)).or_insert_with(BigRational::zero) -= c;
                }
                let two_k = &self.gram[i][j] * BigRational::from_integer(BigInt::from(2));
                if !two_k.is_zero() {
                    *acc.entry(rest).or_insert_with(BigRational::zero) += two_k;
                }
                let mut v: Vec<(Mask, BigRational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by_key(|(t, _)| *t);
                v
            }
        };
        let result = Arc::new(result);
        self.generator_table.write().expect("cache lock").insert((i, m), result.clone());
        result
    }

    /// `e_A · e_B` in normal order.
    pub(crate) fn monomial_product(&self, a: Mask, b: Mask) -> Expansion {
        if let Some(e) = self.product_table.read().expect("cache lock").get(&(a, b)) {
            return e.clone();
        }
        let mut current: HashMap<Mask, BigRational> = HashMap::from([(b, BigRational::one())]);
        let gens: Vec<usize> = indices(a).collect();
        for &i in gens.iter().rev() {
            let mut next: HashMap<Mask, BigRational> = HashMap::new();
            for (m, c) in &current {
                for (t, x) in self.generator_times(i, *m).iter() {
                    *next.entry(*t).or_insert_with(BigRational::zero) += c * x;
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        let mut v: Vec<(Mask, BigRational)> = current.into_iter().collect();
        v.sort_by_key(|(t, _)| *t);
        let result = Arc::new(v);
        self.product_table.write().expect("cache lock").insert((a, b), result.clone());
        result
    }

    /// Clifford product.
    pub fn mul(&self, u: &CliffordElement, v: &CliffordElement) -> CliffordElement {
        let mut acc: HashMap<Mask, Scalar> = HashMap::new();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                let xy = x * y;
                for (m, r) in self.monomial_product(a, b).iter() {
                    let t = xy.scale(r);
                    let e = acc.entry(*m).or_insert_with(Scalar::zero);
                    *e += &t;
                }
            }
        }
        CliffordElement::from_terms(acc)
    }

    pub fn vector(&self, v: &[Scalar]) -> CliffordElement {
        CliffordElement::from_vector(v)
    }

    /// Product of vectors `v_1 · … · v_k`.
    pub fn product_of_vectors(&self, vs: &[Vector]) -> CliffordElement {
        vs.iter().fold(CliffordElement::one(), |acc, v| self.mul(&acc, &self.vector(v)))
    }

    /// `Σ_σ sgn(σ) x_{σ(1)} ··· x_{σ(k)}` over orderings of `s`.
    fn antisymmetrized(&self, s: Mask) -> Arc<CliffordElement> {
        if let Some(e) = self.antisym_table.read().expect("cache lock").get(&s) {
            return e.clone();
        }
        let result = if s == 0 {
            CliffordElement::one()
        } else {
            let mut acc = CliffordElement::zero();
            for (p, j) in indices(s).enumerate() {
                let tail = self.antisymmetrized(s & !(1 << j));
                let term = self.mul(&CliffordElement::monomial(1 << j, Scalar::one()), &tail);
                acc = if p % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        };
        let result = Arc::new(result);
        self.antisym_table.write().expect("cache lock").insert(s, result.clone());
        result
    }

    /// Quantization `q(e_S) = (1/k!) Σ_σ sgn(σ) e_{σ(1)} ··· e_{σ(k)}`.
    pub fn quantize(&self, v: &Multivector) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (s, c) in v.terms() {
            let k = grade(s) as i64;
            let fact: i64 = (1..=k).product();
            let coeff = c * &Scalar::from_frac(1, fact);
            out = &out + &self.antisymmetrized(s).scale(&coeff);
        }
        out
    }

    /// Inverse of [`quantize`](Self::quantize), peeling off the top grade.
    pub fn dequantize(&self, u: &CliffordElement) -> Multivector {
        let mut rest = u.clone();
        let mut out = Multivector::zero();
        while let Some(top) = rest.max_grade() {
            let part = rest.grade_part(top);
            let mv = Multivector::from_terms(part.terms().map(|(m, c)| (m, c.clone())));
            rest = &rest - &self.quantize(&mv);
            out = &out + &mv;
            debug_assert!(rest.max_grade().is_none_or(|g| g < top));
        }
        out
    }

    /// `⋆(e^{j1} ∧ … ∧ e^{jk}) = ι_{e^{j1}} ··· ι_{e^{jk}} μ` with `μ = scale · e_1 ∧ … ∧ e_N`.
    pub fn star(&self, alpha: &Form, mu_scale: &Scalar) -> Multivector {
        let full: Mask = (1u32 << self.dim) - 1;
        let mut out = Multivector::zero();
        for (m, c) in alpha.terms() {
            let mut current = full;
            let mut negative = false;
            for j in indices(m).collect::<Vec<_>>().into_iter().rev() {
                negative ^= position(current, j) % 2 == 1;
                current &= !(1 << j);
            }
            let t = c * mu_scale;
            out.add_term(current, &if negative { -t } else { t });
        }
        out
    }

    pub fn star_inv(&self, v: &Multivector, mu_scale: &Scalar) -> Result<Form> {
        let full: Mask = (1u32 << self.dim) - 1;
        let inv = mu_scale.inv()?;
        let mut out = Form::zero();
        for (m, c) in v.terms() {
            let image = self.star(&Form::monomial(full & !m, Scalar::one()), &Scalar::one());
            // image = ±e_m
            let sign = image.coefficient(m);
            out.add_term(full & !m, &(&(c * &inv) * &sign));
        }
        Ok(out)
    }

    /// `κ_*(a, a′) = (a′ − a, κ(a) + κ(a′))`.
    pub fn kappa_star(&self, a: &[Scalar], a_prime: &[Scalar]) -> (Vector, Vector) {
        let x: Vector = a_prime.iter().zip(a).map(|(p, q)| p - q).collect();
        let ka = self.alg.kappa_flat(a);
        let kap = self.alg.kappa_flat(a_prime);
        (x, ka.iter().zip(&kap).map(|(p, q)| p + q).collect())
    }

    /// `⟨(x, ξ), (y, η)⟩ = ½(ξ(y) + η(x))`.
    pub fn split_pairing(&self, x: &(Vector, Vector), y: &(Vector, Vector)) -> Scalar {
        let dot = |u: &[Scalar], v: &[Scalar]| -> Scalar { u.iter().zip(v).map(|(p, q)| p * q).sum() };
        &(&dot(&x.1, &y.0) + &dot(&y.1, &x.0)) * &Scalar::from_frac(1, 2)
    }

    /// `(x, ξ) ∘ v = x ∧ v + ι_ξ v` on `∧*g`.
    pub fn exterior_action(&self, x: &(Vector, Vector), v: &Multivector) -> Multivector {
        &Multivector::from_vector(&x.0).wedge(v) + &v.interior(&x.1)
    }

    /// `(−1)^{|u|} u`, the parity automorphism.
    pub fn parity_sign(&self, u: &CliffordElement) -> CliffordElement {
        &u.parity_part(false) - &u.parity_part(true)
    }

    /// `â ∘ u = a′·u − (−1)^{|u|} u·a`.
    pub fn spinor_action(&self, a: &[Scalar], a_prime: &[Scalar], u: &CliffordElement) -> CliffordElement {
        let left = self.mul(&self.vector(a_prime), u);
        let right = self.mul(&self.parity_sign(u), &self.vector(a));
        &left - &right
    }

    /// κ-dual basis `e^i` with `κ(e_j, e^i) = δ_ij`.
    pub fn dual_basis(&self) -> &[Vector] {
        self.dual.get_or_init(|| self.alg.kappa_dual_basis())
    }

    /// `Λ^♯ = (1/6) Σ Λ(e_i, e_j, e_k) e^i ∧ e^j ∧ e^k`.
    pub fn lambda_sharp(&self) -> Multivector {
        let lam = cartan_three_form(&self.alg);
        let dual = self.dual_basis();
        let n = self.dim;
        let mut out = Multivector::zero();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut acc = Scalar::zero();
                    for (i, di) in dual.iter().enumerate() {
                        if di[a].is_zero() {
                            continue;
                        }
                        for (j, dj) in dual.iter().enumerate() {
                            if dj[b].is_zero() {
                                continue;
                            }
                            for (k, dk) in dual.iter().enumerate() {
                                let l = lam.get(i, j, k);
                                if dk[c].is_zero() || l.is_zero() {
                                    continue;
                                }
                                acc += &(&(&(&di[a] * &dj[b]) * &dk[c]) * l);
                            }
                        }
                    }
                    out.add_term((1 << a) | (1 << b) | (1 << c), &acc);
                }
            }
        }
        out
    }

    /// The cubic element `Θ = q(Λ^♯)`.
    pub fn theta(&self) -> &CliffordElement {
        self.theta.get_or_init(|| self.quantize(&self.lambda_sharp()))
    }

    /// Graded commutator `[x, u] = x·u − (−1)^{|x||u|} u·x` for homogeneous `x`.
    pub fn graded_commutator(&self, x: &CliffordElement, u: &CliffordElement) -> CliffordElement {
        let x_odd = x.parity().unwrap_or(false);
        let mut out = self.mul(x, u);
        for odd in [false, true] {
            let part = u.parity_part(odd);
            if part.is_zero() {
                continue;
            }
            let ux = self.mul(&part, x);
            out = if x_odd && odd { &out + &ux } else { &out - &ux };
        }
        out
    }

    /// `d^Cl u = ¼ [Θ, u]`.
    pub fn d_cl(&self, u: &CliffordElement) -> CliffordElement {
        self.graded_commutator(self.theta(), u).scale(&Scalar::from_frac(1, 4))
    }

    /// `τ′_a = ¼ Σ [a, e_i] · e^i`.
    pub fn tau_prime(&self, a: &[Scalar]) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (i, di) in self.dual_basis().iter().enumerate() {
            let br = self.alg.bracket(a, &self.alg.basis_vector(i));
            if br.iter().all(Scalar::is_zero) {
                continue;
            }
            out = &out + &self.mul(&self.vector(&br), &self.vector(di));
        }
        out.scale(&Scalar::from_frac(1, 4))
    }

    /// `−¼ [Θ, a]`, the second formula for `τ′_a`.
    pub fn tau_prime_from_theta(&self, a: &[Scalar]) -> CliffordElement {
        self.graded_commutator(self.theta(), &self.vector(a)).scale(&Scalar::from_frac(-1, 4))
    }

    /// Columns `L(e_M)` for every monomial, as dense coordinate vectors.
    pub fn operator_columns(&self, f: impl Fn(&CliffordElement) -> CliffordElement + Sync) -> Vec<Vec<Scalar>> {
        use rayon::prelude::*;
        (0..self.dim() as Mask).into_par_iter().map(|m| f(&CliffordElement::monomial(m, Scalar::one())).to_dense(self.dim)).collect()
    }
}

/// SHA-256 over the structure constants, the κ Gram and `d`.
pub fn content_digest(alg: &LieAlgebra) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(b"gk-clifford-v1");
    h.update((alg.dim() as u64).to_le_bytes());
    h.update(alg.field_d().to_le_bytes());
    for label in alg.labels() {
        h.update(label.as_bytes());
        h.update([0]);
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            for (k, c) in alg.structure(i, j) {
                h.update((i as u64).to_le_bytes());
                h.update((j as u64).to_le_bytes());
                h.update((*k as u64).to_le_bytes());
                h.update(c.to_literal().as_bytes());
                h.update([0]);
            }
            h.update(alg.kappa_matrix()[(i, j)].to_literal().as_bytes());
            h.update([1]);
        }
    }
    h.finalize().into()
}

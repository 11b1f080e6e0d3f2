use super::{Block, LieAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{axpy, scale_vector, unit_vector, zero_vector, Scalar, Subspace, Vector};

/// One permutation per simple factor; `R_+ = {e_{σ(a)σ(b)} : a < b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositiveSystem {
    pub permutations: Vec<Vec<usize>>,
}

impl PositiveSystem {
    pub fn standard(alg: &LieAlgebra) -> Self {
        let permutations = alg
            .blocks()
            .iter()
            .filter_map(|b| match b {
                Block::SlN { n, .. } => Some((0..*n).collect()),
                Block::Center { .. } => None,
            })
            .collect();
        PositiveSystem { permutations }
    }

    /// The opposite system, `σ` reversed in every factor.
    pub fn opposite(&self) -> Self {
        PositiveSystem { permutations: self.permutations.iter().map(|p| p.iter().rev().copied().collect()).collect() }
    }

    fn validate(&self, alg: &LieAlgebra) -> Result<()> {
        let sizes: Vec<usize> = alg
            .blocks()
            .iter()
            .filter_map(|b| match b {
                Block::SlN { n, .. } => Some(*n),
                Block::Center { .. } => None,
            })
            .collect();
        if sizes.len() != self.permutations.len() {
            return Err(Error::InvalidSamelson("one permutation per simple factor is required".into()));
        }
        for (perm, &n) in self.permutations.iter().zip(&sizes) {
            let mut seen = vec![false; n];
            if perm.len() != n || perm.iter().any(|&k| k >= n || std::mem::replace(&mut seen[k], true)) {
                return Err(Error::InvalidSamelson(format!("{perm:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(())
    }
}

/// A root `α`, identified by its matrix-unit position `(p, q)` in a factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub factor: usize,
    pub p: usize,
    pub q: usize,
    /// Basis index of `e_pq` in `g`.
    pub index: usize,
    /// `α(H_k)` on the Cartan basis of the frame.
    pub values: Vec<Scalar>,
    /// Normalized root vector `a_α`.
    pub vector: Vector,
    /// `h_α = [a_α, a_{−α}]`.
    pub coroot: Vector,
}

impl Root {
    pub fn same_root(&self, other: &Root) -> bool {
        (self.factor, self.p, self.q) == (other.factor, other.p, other.q)
    }
}

/// Cartan subalgebra, roots with a chosen positive system, and `ρ`.
#[derive(Clone, Debug)]
pub struct CartanFrame {
    pub system: PositiveSystem,
    /// Basis indices spanning `h` (the `h_k` of every factor, then every `z_j`).
    pub cartan_indices: Vec<usize>,
    pub center_indices: Vec<usize>,
    pub positive: Vec<Root>,
    /// `negative[k]` is `−positive[k]`.
    pub negative: Vec<Root>,
    /// Indices into `positive` of the simple roots, factor by factor.
    pub simple: Vec<usize>,
    pub weyl: Vector,
    dim: usize,
}

impl CartanFrame {
    pub fn new(alg: &LieAlgebra, system: PositiveSystem) -> Result<Self> {
        system.validate(alg)?;
        let dim = alg.dim();
        let mut cartan_indices = Vec::new();
        let mut center_indices = Vec::new();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        let mut simple = Vec::new();
        let mut factor = 0;
        for block in alg.blocks() {
            match *block {
                Block::SlN { n, offset } => {
                    cartan_indices.extend(offset..offset + n - 1);
                    let positions = super::algebra::sl_root_positions(n);
                    let index_of = |p: usize, q: usize| offset + n - 1 + positions.iter().position(|&x| x == (p, q)).unwrap();
                    let sigma = &system.permutations[factor];
                    for a in 0..n {
                        for b in a + 1..n {
                            let (p, q) = (sigma[a], sigma[b]);
                            let (ip, iq) = (index_of(p, q), index_of(q, p));
                            let (ep, eq) = (unit_vector(dim, ip), unit_vector(dim, iq));
                            let norm = alg.kappa(&ep, &eq).inv()?;
                            let a_neg = scale_vector(&norm, &eq);
                            let coroot = alg.bracket(&ep, &a_neg);
                            if b == a + 1 {
                                simple.push(positive.len());
                            }
                            positive.push(Root { factor, p, q, index: ip, values: Vec::new(), vector: ep, coroot: coroot.clone() });
                            negative.push(Root {
                                factor,
                                p: q,
                                q: p,
                                index: iq,
                                values: Vec::new(),
                                vector: a_neg,
                                coroot: scale_vector(&Scalar::from_int(-1), &coroot),
                            });
                        }
                    }
                    factor += 1;
                }
                Block::Center { offset, .. } => center_indices.push(offset),
            }
        }
        cartan_indices.extend(center_indices.iter().copied());
        for root in positive.iter_mut().chain(negative.iter_mut()) {
            root.values = cartan_indices
                .iter()
                .map(|&k| {
                    let br = alg.bracket(&unit_vector(dim, k), &unit_vector(dim, root.index));
                    br[root.index].clone()
                })
                .collect();
        }
        let mut weyl = zero_vector(dim);
        let half = Scalar::from_frac(1, 2);
        for r in &positive {
            axpy(&mut weyl, &half, &r.coroot);
        }
        Ok(CartanFrame { system, cartan_indices, center_indices, positive, negative, simple, weyl, dim })
    }

    pub fn rank(&self) -> usize {
        self.cartan_indices.len()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.rank() - self.center_indices.len()
    }

    pub fn cartan(&self) -> Subspace {
        Subspace::span(self.dim, self.cartan_indices.iter().map(|&k| unit_vector(self.dim, k)).collect())
    }

    pub fn center(&self) -> Subspace {
        Subspace::span(self.dim, self.center_indices.iter().map(|&k| unit_vector(self.dim, k)).collect())
    }

    pub fn n_plus(&self) -> Subspace {
        Subspace::span(self.dim, self.positive.iter().map(|r| r.vector.clone()).collect())
    }

    pub fn n_minus(&self) -> Subspace {
        Subspace::span(self.dim, self.negative.iter().map(|r| r.vector.clone()).collect())
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.positive.iter().chain(self.negative.iter())
    }

    pub fn simple_roots(&self) -> Vec<&Root> {
        self.simple.iter().map(|&k| &self.positive[k]).collect()
    }

    /// `α(h)` for `h ∈ h`, read off from `κ(h_α, h)`.
    pub fn root_value(&self, alg: &LieAlgebra, root: &Root, h: &[Scalar]) -> Scalar {
        alg.kappa(&root.coroot, h)
    }

    /// Projection of `v` onto `h` along the root spaces.
    pub fn cartan_part(&self, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for &k in &self.cartan_indices {
            out[k] = v[k].clone();
        }
        out
    }

    /// True iff both frames pick the same positive roots.
    pub fn same_borel(&self, other: &CartanFrame) -> bool {
        self.positive.len() == other.positive.len() && self.positive.iter().all(|r| other.positive.iter().any(|s| s.same_root(r)))
    }
}

/// `κ(ρ, ρ)`.
pub fn weyl_norm(alg: &LieAlgebra, frame: &CartanFrame) -> Scalar {
    alg.kappa(&frame.weyl, &frame.weyl)
}

use super::double::{bracket_closure, Double};
use crate::error::{Error, Result};
use crate::exactfield::{axpy, zero_vector, Matrix, Subspace, Vector};
use crate::liealg::{CartanFrame, LieAlgebra};

/// Largest number of simple roots accepted by [`enumerate_bd`].
pub const BD_RANK_BOUND: usize = 3;

/// `(P, P′, π)`, stored as pairs `(α, πα)` of indices into the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BDTriple {
    pub pairs: Vec<(usize, usize)>,
}

impl BDTriple {
    pub fn trivial() -> Self {
        BDTriple { pairs: Vec::new() }
    }

    pub fn source(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn target(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True iff `P` and `P′` are sets and `π` is a bijection between them.
    pub fn is_well_formed(&self, simple_count: usize) -> bool {
        let mut s = self.source();
        let mut t = self.target();
        s.sort_unstable();
        t.sort_unstable();
        let distinct = |v: &[usize]| v.windows(2).all(|w| w[0] != w[1]);
        distinct(&s) && distinct(&t) && s.iter().chain(&t).all(|&k| k < simple_count)
    }
}

/// `κ(h_α, h_β) = κ(h_πα, h_πβ)` for all `α, β ∈ P`.
pub fn is_isometry(alg: &LieAlgebra, frame: &CartanFrame, triple: &BDTriple) -> bool {
    let simple = frame.simple_roots();
    if !triple.is_well_formed(simple.len()) {
        return false;
    }
    triple.pairs.iter().all(|&(a, pa)| {
        triple
            .pairs
            .iter()
            .all(|&(b, pb)| alg.kappa(&simple[a].coroot, &simple[b].coroot) == alg.kappa(&simple[pa].coroot, &simple[pb].coroot))
    })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Every well-formed `(P, P′, π)` over the simple roots, isometric or not.
pub fn bd_candidates(frame: &CartanFrame) -> Result<Vec<BDTriple>> {
    let g = frame.simple.len();
    if g > BD_RANK_BOUND {
        return Err(Error::RankBound { rank: g, bound: BD_RANK_BOUND });
    }
    let subsets: Vec<Vec<usize>> = (0u32..1 << g).map(|m| (0..g).filter(|&k| m & (1 << k) != 0).collect()).collect();
    let mut out = Vec::new();
    for p in &subsets {
        for q in subsets.iter().filter(|q| q.len() == p.len()) {
            for image in permutations(q) {
                out.push(BDTriple { pairs: p.iter().copied().zip(image).collect() });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All generalized Belavin–Drinfeld triples, by brute force.
pub fn enumerate_bd(alg: &LieAlgebra, frame: &CartanFrame) -> Result<Vec<BDTriple>> {
    Ok(bd_candidates(frame)?.into_iter().filter(|t| is_isometry(alg, frame, t)).collect())
}

/// A Lagrangian subalgebra of `d`, optionally with its Evens–Lu data.
#[derive(Clone, Debug)]
pub struct LagrangianSubalgebra {
    pub subspace: Subspace,
    pub evens_lu: Option<(BDTriple, Subspace)>,
}

impl LagrangianSubalgebra {
    pub fn is_valid(&self, double: &Double) -> bool {
        double.is_lagrangian_subalgebra(&self.subspace)
    }
}

/// Positive roots whose functional lies in the span of `subset` (the set `[P]_+`).
fn span_roots(frame: &CartanFrame, subset: &[usize]) -> Vec<usize> {
    let simple = frame.simple_roots();
    let base: Vec<Vector> = subset.iter().map(|&k| simple[k].values.clone()).collect();
    let span = Subspace::span(frame.rank(), base);
    (0..frame.positive.len()).filter(|&k| span.contains_vector(&frame.positive[k].values)).collect()
}

/// `z_P = {h ∈ h : α(h) = 0 for α ∈ P}`.
pub fn z_p(alg: &LieAlgebra, frame: &CartanFrame, subset: &[usize]) -> Subspace {
    let simple = frame.simple_roots();
    let dim = alg.dim();
    let rows: Vec<Vector> = subset.iter().map(|&k| simple[k].values.clone()).collect();
    let kernel = if rows.is_empty() { Subspace::full(frame.rank()) } else { Matrix::from_rows_with_cols(rows, frame.rank()).kernel() };
    kernel.map(dim, |c| {
        let mut v = zero_vector(dim);
        for (x, &k) in c.iter().zip(&frame.cartan_indices) {
            v[k] = x.clone();
        }
        v
    })
}

/// `l(π, F) = F ⊕ (n_P ⊞ n⁻_{P′}) ⊕ L^π`, validated.
pub fn evens_lu(double: &Double, frame: &CartanFrame, triple: &BDTriple, f: &Subspace) -> Result<LagrangianSubalgebra> {
    let alg = double.algebra();
    let n = alg.dim();
    if f.ambient_dim() != double.dim() {
        return Err(Error::DimensionMismatch { expected: double.dim(), found: f.ambient_dim() });
    }
    if !is_isometry(alg, frame, triple) {
        return Err(Error::InvalidTriple("π is not an isometry".into()));
    }
    let (p, pp) = (triple.source(), triple.target());
    let zp = z_p(alg, frame, &p);
    let zpp = z_p(alg, frame, &pp);
    let z_block = double.boxplus(&zp, &zpp);
    if !z_block.contains(f)? {
        return Err(Error::NotLagrangian("F is not contained in z_P ⊕ z_P′".into()));
    }
    if 2 * f.dim() != z_block.dim() || !double.is_isotropic(f) {
        return Err(Error::NotLagrangian("F is not Lagrangian in z_P ⊕ z_P′".into()));
    }

    let in_p = span_roots(frame, &p);
    let in_pp = span_roots(frame, &pp);
    let zero = zero_vector(n);
    let mut vecs: Vec<Vector> = f.basis_vectors();
    for k in (0..frame.positive.len()).filter(|k| !in_p.contains(k)) {
        vecs.push(double.join(&frame.positive[k].vector, &zero));
    }
    for k in (0..frame.positive.len()).filter(|k| !in_pp.contains(k)) {
        vecs.push(double.join(&zero, &frame.negative[k].vector));
    }
    let graph = graph_of_psi(double, frame, triple)?;
    vecs.extend(graph.basis_vectors());
    let subspace = Subspace::span(double.dim(), vecs);
    if !double.is_lagrangian_subalgebra(&subspace) {
        return Err(Error::NotLagrangian("l(π, F) fails isotropy, dimension or closure".into()));
    }
    Ok(LagrangianSubalgebra { subspace, evens_lu: Some((triple.clone(), f.clone())) })
}

/// Graph of `ψ_π : g_P → g_P′`, generated by `(a_{±α}, a_{±πα})`.
pub fn graph_of_psi(double: &Double, frame: &CartanFrame, triple: &BDTriple) -> Result<Subspace> {
    let simple_pos: Vec<usize> = frame.simple.clone();
    let mut gens = Vec::new();
    for &(a, pa) in &triple.pairs {
        let (ka, kpa) = (simple_pos[a], simple_pos[pa]);
        gens.push(double.join(&frame.positive[ka].vector, &frame.positive[kpa].vector));
        gens.push(double.join(&frame.negative[ka].vector, &frame.negative[kpa].vector));
    }
    let graph = bracket_closure(double.dim(), gens, |x, y| double.bracket(x, y));
    let meets_right = graph.intersect(&double.right_factor())?.dim() > 0;
    let meets_left = graph.intersect(&double.left_factor())?.dim() > 0;
    if meets_right || meets_left {
        return Err(Error::InvalidTriple("generated subalgebra is not the graph of an isomorphism".into()));
    }
    Ok(graph)
}

/// A sample Lagrangian `F`: the graph over `z_P` of a diagram isometry of `h`
/// extending `π`, identity on the center.
pub fn sample_f(double: &Double, frame: &CartanFrame, triple: &BDTriple) -> Option<Subspace> {
    let alg = double.algebra();
    let n = alg.dim();
    let simple = frame.simple_roots();
    let all: Vec<usize> = (0..simple.len()).collect();
    let delta = permutations(&all).into_iter().find(|perm| {
        let t = BDTriple { pairs: all.iter().copied().zip(perm.iter().copied()).collect() };
        triple.pairs.iter().all(|&(a, pa)| perm[a] == pa) && is_isometry(alg, frame, &t)
    })?;
    // Matrix of δ on h in the basis (h_α simple..., z_j...).
    let mut src: Vec<Vector> = simple.iter().map(|r| r.coroot.clone()).collect();
    let mut dst: Vec<Vector> = delta.iter().map(|&k| simple[k].coroot.clone()).collect();
    for &k in &frame.center_indices {
        src.push(crate::exactfield::unit_vector(n, k));
        dst.push(crate::exactfield::unit_vector(n, k));
    }
    let src_sub = Subspace::span(n, src.clone());
    let zp = z_p(alg, frame, &triple.source());
    let coords = Matrix::from_cols(src.clone(), n);
    let vecs: Vec<Vector> = zp
        .basis_vectors()
        .iter()
        .map(|z| {
            debug_assert!(src_sub.contains_vector(z));
            let c = coords.solve(z).ok().flatten().expect("h is spanned by coroots and center");
            let mut image = zero_vector(n);
            for (x, d) in c.iter().zip(&dst) {
                axpy(&mut image, x, d);
            }
            double.join(z, &image)
        })
        .collect();
    Some(Subspace::span(double.dim(), vecs))
}

/// The diagonal `Δ = {(a, a)}`.
pub fn diagonal(double: &Double) -> Subspace {
    let n = double.algebra().dim();
    Subspace::span(
        double.dim(),
        (0..n)
            .map(|k| {
                let e = crate::exactfield::unit_vector(n, k);
                double.join(&e, &e)
            })
            .collect(),
    )
}

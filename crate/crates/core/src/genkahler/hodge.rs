use std::collections::BTreeMap;

use rayon::prelude::*;

use super::spinor::{build_pure_spinor, Side};
use crate::clifford::{CliffordAlgebra, CliffordElement, Mask};
use crate::error::Result;
use crate::exactfield::{Matrix, Scalar, Vector};
use crate::lagrangian::GKPair;

/// Clifford elements representing `J_±`.
///
/// `τ_{J+} = −ni/2 + (i/2) Σ b_{j,+} · b̄_{j,+}` and
/// `τ_{J−} = ni/2 − (i/2) Σ b̄_{j,−} · b_{j,−}`.
#[derive(Clone, Debug)]
pub struct TauJ {
    pub tau_plus: CliffordElement,
    pub tau_minus: CliffordElement,
}

impl TauJ {
    pub fn new(cl: &CliffordAlgebra, pair: &GKPair) -> Self {
        let i = Scalar::i();
        let half_i = &i * &Scalar::from_frac(1, 2);
        let n_half_i = &half_i * &Scalar::from_int(pair.n() as i64);
        let mut tau_plus = CliffordElement::scalar(-&n_half_i);
        for (b, bb) in pair.dual_plus.b.iter().zip(&pair.dual_plus.bbar) {
            tau_plus = &tau_plus + &cl.mul(&cl.vector(b), &cl.vector(bb)).scale(&half_i);
        }
        let mut tau_minus = CliffordElement::scalar(n_half_i);
        for (b, bb) in pair.dual_minus.b.iter().zip(&pair.dual_minus.bbar) {
            tau_minus = &tau_minus - &cl.mul(&cl.vector(bb), &cl.vector(b)).scale(&half_i);
        }
        TauJ { tau_plus, tau_minus }
    }

    /// `τ̂_± ∘ u = τ_{J+} · u ∓ u · τ_{J−}`.
    pub fn act(&self, cl: &CliffordAlgebra, plus: bool, u: &CliffordElement) -> CliffordElement {
        let left = cl.mul(&self.tau_plus, u);
        let right = cl.mul(u, &self.tau_minus);
        if plus {
            &left - &right
        } else {
            &left + &right
        }
    }

    /// True iff `τ̂_+ ∘ u = i r u` and `τ̂_− ∘ u = i s u`.
    pub fn is_eigen(&self, cl: &CliffordAlgebra, u: &CliffordElement, r: i64, s: i64) -> bool {
        let i = Scalar::i();
        self.act(cl, true, u) == u.scale(&(&i * &Scalar::from_int(r))) && self.act(cl, false, u) == u.scale(&(&i * &Scalar::from_int(s)))
    }
}

/// `U_{r,s} = ∧^p l_+ · u_+ · ∧^q l_−`, `r = p + q − n`, `s = p − q`.
#[derive(Clone, Debug)]
pub struct HodgeCell {
    pub p: usize,
    pub q: usize,
    pub r: i64,
    pub s: i64,
    pub basis: Vec<CliffordElement>,
}

#[derive(Clone, Debug)]
pub struct HodgeGrid {
    pub n: usize,
    pub tau: TauJ,
    pub u_plus: CliffordElement,
    pub cells: Vec<HodgeCell>,
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    (0..(1 as Mask) << n).filter(move |m| m.count_ones() as usize == k)
}

fn pick(vs: &[Vector], m: Mask) -> Vec<Vector> {
    vs.iter().enumerate().filter(|(k, _)| m & (1 << k) != 0).map(|(_, v)| v.clone()).collect()
}

pub fn hodge_grid(cl: &CliffordAlgebra, pair: &GKPair) -> Result<HodgeGrid> {
    let n = pair.n();
    let u_plus = build_pure_spinor(cl, pair, Side::Plus)?.element;
    let (bp, bm) = (&pair.dual_plus.b, &pair.dual_minus.b);
    let index: Vec<(usize, usize)> = (0..=n).flat_map(|p| (0..=n).map(move |q| (p, q))).collect();
    let cells = index
        .par_iter()
        .map(|&(p, q)| {
            let mut basis = Vec::new();
            for mp in subsets(n, p) {
                let left = cl.mul(&cl.product_of_vectors(&pick(bp, mp)), &u_plus);
                for mq in subsets(n, q) {
                    basis.push(cl.mul(&left, &cl.product_of_vectors(&pick(bm, mq))));
                }
            }
            HodgeCell { p, q, r: (p + q) as i64 - n as i64, s: p as i64 - q as i64, basis }
        })
        .collect();
    Ok(HodgeGrid { n, tau: TauJ::new(cl, pair), u_plus, cells })
}

/// `(Δr, Δs)` shifts of `d^Cl`, in the order `D̄_+, D̄_−, D_+, D_−`.
pub const DCL_SHIFTS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, -1), (-1, 1)];

impl HodgeGrid {
    pub fn cell(&self, r: i64, s: i64) -> Option<&HodgeCell> {
        self.cells.iter().find(|c| c.r == r && c.s == s)
    }

    /// Exact rank of each cell, keyed by `(r, s)`.
    pub fn cell_ranks(&self, cl: &CliffordAlgebra) -> BTreeMap<(i64, i64), usize> {
        self.cells.par_iter().map(|c| ((c.r, c.s), dense_rank(cl, &c.basis))).collect::<Vec<_>>().into_iter().collect()
    }

    /// Rank of all cells together.
    pub fn total_rank(&self, cl: &CliffordAlgebra) -> usize {
        let all: Vec<CliffordElement> = self.cells.iter().flat_map(|c| c.basis.iter().cloned()).collect();
        dense_rank(cl, &all)
    }

    /// `(r, s)` of the cells with a basis vector that is not an `i(r, s)`
    /// eigenvector of `(τ̂_+, τ̂_−)`.
    pub fn eigen_failures(&self, cl: &CliffordAlgebra) -> Vec<(i64, i64)> {
        self.cells.par_iter().filter(|c| !c.basis.iter().all(|u| self.tau.is_eigen(cl, u, c.r, c.s))).map(|c| (c.r, c.s)).collect()
    }

    /// Splits `x` into the cells `(r + Δr, s + Δs)`, `Δr, Δs = ±1`, using the
    /// eigenvalues of `τ̂_±`: with `B = Σ Δr w`, `C = Σ Δs w`, `E = Σ ΔrΔs w`,
    /// `w_{Δr,Δs} = ¼(x + Δr B + Δs C + ΔrΔs E)`. Exact only when `x` lies in
    /// those four cells, which [`HodgeGrid::shifted_parts`] certifies.
    pub fn split_shifted(&self, cl: &CliffordAlgebra, x: &CliffordElement, r: i64, s: i64) -> Vec<((i64, i64), CliffordElement)> {
        let minus_i = -&Scalar::i();
        let shift = |plus: bool, v: &CliffordElement, e: i64| -> CliffordElement {
            // (τ̂ − i e) v / i
            (&self.tau.act(cl, plus, v) - &v.scale(&(&Scalar::i() * &Scalar::from_int(e)))).scale(&minus_i)
        };
        let b = shift(true, x, r);
        let c = shift(false, x, s);
        let e = shift(true, &c, r);
        let quarter = Scalar::from_frac(1, 4);
        DCL_SHIFTS
            .iter()
            .map(|&(dr, ds)| {
                let sr = Scalar::from_int(dr);
                let ss = Scalar::from_int(ds);
                let w = &(&(x + &b.scale(&sr)) + &c.scale(&ss)) + &e.scale(&(&sr * &ss));
                ((dr, ds), w.scale(&quarter))
            })
            .collect()
    }

    /// Parts of `x` in the four shifted cells, or the residual when `x` does
    /// not lie in their sum.
    pub fn shifted_parts(
        &self,
        cl: &CliffordAlgebra,
        x: &CliffordElement,
        r: i64,
        s: i64,
    ) -> std::result::Result<Vec<((i64, i64), CliffordElement)>, CliffordElement> {
        let parts = self.split_shifted(cl, x, r, s);
        let mut residual = CliffordElement::zero();
        for ((dr, ds), w) in &parts {
            let (tr, ts) = (r + dr, s + ds);
            let ok = w.is_zero() || (self.cell(tr, ts).is_some() && self.tau.is_eigen(cl, w, tr, ts));
            if !ok {
                residual = &residual + w;
            }
        }
        if residual.is_zero() {
            Ok(parts)
        } else {
            Err(residual)
        }
    }
}

fn dense_rank(cl: &CliffordAlgebra, vs: &[CliffordElement]) -> usize {
    Matrix::from_rows_with_cols(vs.iter().map(|v| v.to_dense(cl.generators())).collect(), cl.dim()).rank()
}

/// Outcome of decomposing `d^Cl` along the Hodge grid.
#[derive(Clone, Debug, Default)]
pub struct GradedDclReport {
    /// Cells with a basis vector whose `d^Cl` leaves the four shifted cells,
    /// with the offending residual.
    pub containment_failures: Vec<((i64, i64), CliffordElement)>,
    pub dbar_plus_squared: bool,
    pub dbar_minus_squared: bool,
    pub dbar_anticommute: bool,
    /// `(cell, total shift)` where a bidegree component of `(d^Cl)²` is nonzero.
    pub bidegree_failures: Vec<((i64, i64), (i64, i64))>,
    /// Shifts `(Δr, Δs)` carrying a nonzero part of `d^Cl u_+`.
    pub u_plus_shifts: Vec<(i64, i64)>,
}

impl GradedDclReport {
    pub fn holds(&self) -> bool {
        self.containment_failures.is_empty()
            && self.dbar_plus_squared
            && self.dbar_minus_squared
            && self.dbar_anticommute
            && self.bidegree_failures.is_empty()
    }
}

struct CellOutcome {
    containment: Option<((i64, i64), CliffordElement)>,
    dbar: [bool; 3],
    bidegree: Vec<((i64, i64), (i64, i64))>,
}

/// For every basis vector `v ∈ U_{r,s}`: `d^Cl v` lies in the cells
/// `(r ± 1, s ± 1)`; the components satisfy `D̄_±² = 0`,
/// `D̄_+D̄_− + D̄_−D̄_+ = 0`, and each of the nine bidegree components of
/// `(d^Cl)²` vanishes.
pub fn graded_dcl(cl: &CliffordAlgebra, grid: &HodgeGrid) -> GradedDclReport {
    let jobs: Vec<(&HodgeCell, &CliffordElement)> = grid.cells.iter().flat_map(|c| c.basis.iter().map(move |v| (c, v))).collect();
    let outcomes: Vec<CellOutcome> = jobs
        .par_iter()
        .map(|&(cell, v)| {
            let (r, s) = (cell.r, cell.s);
            let mut out = CellOutcome { containment: None, dbar: [true; 3], bidegree: Vec::new() };
            let first = match grid.shifted_parts(cl, &cl.d_cl(v), r, s) {
                Ok(parts) => parts,
                Err(residual) => {
                    out.containment = Some(((r, s), residual));
                    return out;
                }
            };
            let mut second: BTreeMap<(i64, i64), CliffordElement> = BTreeMap::new();
            let mut comp: BTreeMap<((i64, i64), (i64, i64)), CliffordElement> = BTreeMap::new();
            for (s1, w) in &first {
                if w.is_zero() {
                    continue;
                }
                let (r1, t1) = (r + s1.0, s + s1.1);
                match grid.shifted_parts(cl, &cl.d_cl(w), r1, t1) {
                    Ok(parts) => {
                        for (s2, x) in parts {
                            let total = (s1.0 + s2.0, s1.1 + s2.1);
                            let e = second.entry(total).or_default();
                            *e = &*e + &x;
                            comp.insert((*s1, s2), x);
                        }
                    }
                    Err(residual) => {
                        out.containment = Some(((r1, t1), residual));
                        return out;
                    }
                }
            }
            let get = |a: (i64, i64), b: (i64, i64)| comp.get(&(a, b)).cloned().unwrap_or_default();
            let (bp, bm) = (DCL_SHIFTS[0], DCL_SHIFTS[1]);
            out.dbar = [get(bp, bp).is_zero(), get(bm, bm).is_zero(), (&get(bp, bm) + &get(bm, bp)).is_zero()];
            out.bidegree = second.into_iter().filter(|(_, x)| !x.is_zero()).map(|(shift, _)| ((r, s), shift)).collect();
            out
        })
        .collect();
    let mut report = GradedDclReport { dbar_plus_squared: true, dbar_minus_squared: true, dbar_anticommute: true, ..Default::default() };
    for o in outcomes {
        if let Some(c) = o.containment {
            report.containment_failures.push(c);
        }
        report.dbar_plus_squared &= o.dbar[0];
        report.dbar_minus_squared &= o.dbar[1];
        report.dbar_anticommute &= o.dbar[2];
        for b in o.bidegree {
            if !report.bidegree_failures.contains(&b) {
                report.bidegree_failures.push(b);
            }
        }
    }
    let n = grid.n as i64;
    if let Ok(parts) = grid.shifted_parts(cl, &cl.d_cl(&grid.u_plus), -n, 0) {
        report.u_plus_shifts = parts.into_iter().filter(|(_, w)| !w.is_zero()).map(|(shift, _)| shift).collect();
    }
    report
}

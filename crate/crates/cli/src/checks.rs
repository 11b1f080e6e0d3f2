//! Check registry and the shared run context.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use gk_core::clifford::{dcl_cohomology, CliffordAlgebra, CliffordElement, Mask, Multivector, COHOMOLOGY_BOUND};
use gk_core::cohomology::{binomial, ce_cohomology, convolve, e1_page, e2_page, picard_report, total_cohomology};
use gk_core::exactfield::{unit_vector, zero_vector, Scalar, Subspace, Vector};
use gk_core::genkahler::{
    build_pure_spinor, canonical_connection_eigenvalue, degree_canonical, expected_annihilator, expected_type_parity, graded_dcl,
    hodge_grid, torus_restriction_check, type_of, verify_dcl_spinor, HodgeGrid, MetricSide, Side,
};
use gk_core::lagrangian::{
    bd_candidates, enumerate_bd, evens_lu, gk_pair, is_isometry, samelson, sample_f, split_classify, Double, GKPair, Splitting,
};
use gk_core::liealg::{build, CartanFrame, Conjugation, LieAlgebra};
use gk_core::presets::preset_pair;

use crate::config::{Borel, ConfigError, RunConfig, Structure};

pub type Witness = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(Witness),
    Fail(Witness),
    Skipped(String),
}

fn outcome(ok: bool, witness: Witness) -> Outcome {
    if ok {
        Outcome::Pass(witness)
    } else {
        Outcome::Fail(witness)
    }
}

fn error_outcome(e: impl std::fmt::Display) -> Outcome {
    Outcome::Fail(Witness::from([("error".to_string(), e.to_string())]))
}

macro_rules! witness {
    ($($k:expr => $v:expr),* $(,)?) => {
        Witness::from([$(($k.to_string(), $v.to_string())),*])
    };
}

/// Whether a check depends on the group alone or on the chosen pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Group,
    Pair,
}

pub struct CheckDef {
    /// Stable registry key.
    pub name: &'static str,
    pub scope: Scope,
    /// The statement being checked.
    pub anchor: &'static str,
    pub run: fn(&Context) -> Outcome,
}

/// Everything a check needs, built once per run.
pub struct Context {
    pub alg: LieAlgebra,
    pub frame: CartanFrame,
    pub conj: Conjugation,
    pub cl: CliffordAlgebra,
    pub pair: GKPair,
    semisimple: bool,
    grid: OnceLock<Result<HodgeGrid, String>>,
}

impl Context {
    pub fn new(config: &RunConfig) -> Result<Self, ConfigError> {
        let (alg, frame, conj) = build(&config.spec)?;
        let cl = match &config.cache {
            Some(path) if path.exists() => CliffordAlgebra::with_cache(&alg, path)?,
            _ => CliffordAlgebra::new(&alg)?,
        };
        let pair = match &config.structure {
            Structure::Preset(p) => preset_pair(&alg, &frame, &conj, *p)?,
            Structure::Custom { t10_plus, t10_minus, minus_borel } => {
                let minus_frame = match minus_borel {
                    Borel::Standard => frame.clone(),
                    Borel::Opposite => CartanFrame::new(&alg, frame.system.opposite())?,
                };
                let span = |b: &[Vector]| Subspace::span(alg.dim(), b.to_vec());
                let l_plus = samelson(&alg, &frame, &conj, &span(t10_plus))?;
                let l_minus = samelson(&alg, &minus_frame, &conj, &span(t10_minus))?;
                gk_pair(&alg, &conj, &l_plus, &l_minus)?
            }
        };
        Ok(Context { alg, frame, conj, cl, pair, semisimple: config.spec.abelian_rank == 0, grid: OnceLock::new() })
    }

    pub fn grid(&self) -> Result<&HodgeGrid, String> {
        self.grid.get_or_init(|| hodge_grid(&self.cl, &self.pair).map_err(|e| e.to_string())).as_ref().map_err(Clone::clone)
    }

    fn double_basis(&self) -> Vec<(Vector, Vector)> {
        let n = self.alg.dim();
        (0..n).flat_map(|i| [(unit_vector(n, i), zero_vector(n)), (zero_vector(n), unit_vector(n, i))]).collect()
    }
}

pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}

static REGISTRY: [CheckDef; 18] = [
    CheckDef { name: "alg.structure", scope: Scope::Group, anchor: "Jacobi identity and ad-invariance of κ", run: alg_structure },
    CheckDef {
        name: "cl.dcl-cohomology",
        scope: Scope::Group,
        anchor: "dims of ker d^Cl / im d^Cl (informational)",
        run: dcl_cohomology_dims,
    },
    CheckDef { name: "cl.dcl-squared", scope: Scope::Group, anchor: "d^Cl ∘ d^Cl = 0 on Cl(g, κ)", run: dcl_squared },
    CheckDef {
        name: "cl.infinitesimal-spin",
        scope: Scope::Group,
        anchor: "τ′_[a,b] = [τ′_a, τ′_b] and [a, b] = [τ′_a, b]",
        run: infinitesimal_spin,
    },
    CheckDef { name: "cl.quantization", scope: Scope::Group, anchor: "q(κ_* â ∘ v) = â ∘ q(v)", run: quantization },
    CheckDef { name: "cor.calabi-yau", scope: Scope::Pair, anchor: "U_± is Calabi–Yau iff g is abelian", run: calabi_yau },
    CheckDef {
        name: "cor.spectral-sequence",
        scope: Scope::Pair,
        anchor: "E2^{p,q} = C(r,p)C(r,q) and H^k(𝔏̄_+) = C(2r,k)",
        run: spectral_sequence,
    },
    CheckDef {
        name: "lagrangian.bd-enumeration",
        scope: Scope::Group,
        anchor: "Belavin–Drinfeld triples are exactly the isometric candidates",
        run: bd_enumeration,
    },
    CheckDef {
        name: "lagrangian.evens-lu", scope: Scope::Group, anchor: "l(π, F) is a Lagrangian subalgebra of d", run: evens_lu_outputs
    },
    CheckDef {
        name: "lagrangian.gk-pair",
        scope: Scope::Pair,
        anchor: "𝔏_± are Lagrangian, split_classify recovers (l_−, l_+)",
        run: gk_pair_check,
    },
    CheckDef {
        name: "lemma.pure-spinor", scope: Scope::Pair, anchor: "ann(u_±) = 𝔏̄_±, type ≡ dim l̄_+ ∩ l̄_− mod 2", run: pure_spinor
    },
    CheckDef {
        name: "prop.connection",
        scope: Scope::Pair,
        anchor: "â ∘ d^Cl u_+ = (κ(a′, ρ_+) + κ(a, ρ_−)) u_+ on ann(u_+)",
        run: connection,
    },
    CheckDef { name: "prop.dcl-spinor", scope: Scope::Pair, anchor: "d^Cl u_± = ½(∓ρ_−, ρ_+) ∘ u_±", run: dcl_spinor },
    CheckDef {
        name: "prop.hodge-grid",
        scope: Scope::Pair,
        anchor: "Cl(g, κ) = ⊕ U_{r,s} with dim U_{r,s} = C(n,p)C(n,q)",
        run: hodge_grid_check,
    },
    CheckDef { name: "prop.picard", scope: Scope::Pair, anchor: "dim H^1(l̄_+) = r and dim T ℙic_0 = 2r", run: picard },
    CheckDef {
        name: "prop.torus-restriction", scope: Scope::Pair, anchor: "J_± on t ⊞ t for the canonical pair", run: torus_restriction
    },
    CheckDef { name: "thm.degree", scope: Scope::Pair, anchor: "deg_±(U_+) = −2κ(ρ, ρ)", run: degree },
    CheckDef {
        name: "thm.graded-dcl",
        scope: Scope::Pair,
        anchor: "d^Cl has bidegrees (±1, ±1) with D̄_±² = 0 and D̄_+D̄_− + D̄_−D̄_+ = 0",
        run: graded,
    },
];

fn alg_structure(c: &Context) -> Outcome {
    let (jacobi, invariant) = (c.alg.jacobi_holds(), c.alg.kappa_invariant());
    outcome(jacobi && invariant, witness! { "dim" => c.alg.dim(), "jacobi" => jacobi, "kappa_invariant" => invariant })
}

fn dcl_squared(c: &Context) -> Outcome {
    use rayon::prelude::*;
    let failures: Vec<Mask> = (0..c.cl.dim() as Mask)
        .into_par_iter()
        .filter(|&m| !c.cl.d_cl(&c.cl.d_cl(&CliffordElement::monomial(m, Scalar::one()))).is_zero())
        .collect();
    let mut w = witness! { "monomials" => c.cl.dim(), "failures" => failures.len() };
    if let Some(m) = failures.first() {
        w.insert("first_failure".into(), format!("{m:#b}"));
    }
    outcome(failures.is_empty(), w)
}

/// Reports dims only; vanishing for semisimple g is recorded, not required.
fn dcl_cohomology_dims(c: &Context) -> Outcome {
    if c.cl.dim() > COHOMOLOGY_BOUND {
        return Outcome::Skipped(format!("Cl dimension {} exceeds {COHOMOLOGY_BOUND}", c.cl.dim()));
    }
    match dcl_cohomology(&c.cl) {
        Ok(h) => {
            let mut w = witness! { "even" => h.even, "odd" => h.odd, "total" => h.total() };
            if c.semisimple {
                w.insert("consistent_with_vanishing".into(), (h.total() == 0).to_string());
            }
            Outcome::Pass(w)
        }
        Err(e) => error_outcome(e),
    }
}

fn infinitesimal_spin(c: &Context) -> Outcome {
    let n = c.alg.dim();
    let cl = &c.cl;
    let taus: Vec<CliffordElement> = (0..n).map(|i| cl.tau_prime(&unit_vector(n, i))).collect();
    let mut failures = 0;
    for i in 0..n {
        for j in 0..n {
            let b = unit_vector(n, j);
            let br = c.alg.bracket(&unit_vector(n, i), &b);
            let comm = &cl.mul(&taus[i], &cl.vector(&b)) - &cl.mul(&cl.vector(&b), &taus[i]);
            let tt = &cl.mul(&taus[i], &taus[j]) - &cl.mul(&taus[j], &taus[i]);
            failures += usize::from(comm != cl.vector(&br)) + usize::from(cl.tau_prime(&br) != tt);
        }
    }
    outcome(failures == 0, witness! { "pairs" => n * n, "failures" => failures })
}

fn quantization(c: &Context) -> Outcome {
    use rayon::prelude::*;
    let cl = &c.cl;
    let n = c.alg.dim();
    let basis = c.double_basis();
    let failures: usize = basis
        .par_iter()
        .map(|(a, ap)| {
            let ks = cl.kappa_star(a, ap);
            (0..(1 as Mask) << n)
                .filter(|&m| {
                    let v = Multivector::monomial(m, Scalar::one());
                    cl.quantize(&cl.exterior_action(&ks, &v)) != cl.spinor_action(a, ap, &cl.quantize(&v))
                })
                .count()
        })
        .sum();
    outcome(failures == 0, witness! { "cases" => basis.len() << n, "failures" => failures })
}

fn dcl_spinor(c: &Context) -> Outcome {
    match verify_dcl_spinor(&c.cl, &c.pair) {
        Ok(report) => {
            let mut w: Witness = report
                .checks
                .iter()
                .map(|chk| (chk.name.clone(), if chk.holds { "holds".to_string() } else { format!("residual {}", chk.residual) }))
                .collect();
            w.insert("calabi_yau".into(), report.calabi_yau.to_string());
            outcome(report.all_hold(), w)
        }
        Err(e) => error_outcome(e),
    }
}

fn calabi_yau(c: &Context) -> Outcome {
    let report = match verify_dcl_spinor(&c.cl, &c.pair) {
        Ok(r) => r,
        Err(e) => return error_outcome(e),
    };
    let degree = match degree_canonical(&c.pair, MetricSide::Plus) {
        Ok(r) => r.degree,
        Err(e) => return error_outcome(e),
    };
    let abelian = c.alg.is_abelian();
    let ok = report.calabi_yau == abelian && degree.is_zero() == abelian;
    outcome(ok, witness! { "abelian" => abelian, "calabi_yau" => report.calabi_yau, "degree" => degree })
}

fn degree(c: &Context) -> Outcome {
    let mut w = Witness::new();
    let mut ok = true;
    for side in [MetricSide::Plus, MetricSide::Minus] {
        match degree_canonical(&c.pair, side) {
            Ok(r) => {
                ok &= r.holds();
                w.insert(format!("{side}.degree"), r.degree.to_string());
                w.insert(format!("{side}.wedge_ratio"), r.wedge_ratio.to_string());
                w.insert(format!("{side}.numerator_matches"), r.numerator_matches.to_string());
                w.insert(format!("{side}.denominator_matches"), r.denominator_matches.to_string());
                w.insert("kappa_rho_rho".into(), r.kappa_rho_rho.to_string());
                w.insert("minus_kappa_rho_rho".into(), (-&r.kappa_rho_rho).to_string());
            }
            Err(e) => {
                ok = false;
                w.insert(format!("{side}.error"), e.to_string());
            }
        }
    }
    w.insert(
        "convention".into(),
        "κ = −tr(ad∘ad); degree = (i/2)·n·coeff(F∧ω^{n−1})/coeff(ω^n), the literal wedge ratio carries (n−1)! for n!".into(),
    );
    outcome(ok, w)
}

fn pure_spinor(c: &Context) -> Outcome {
    let mut w = Witness::new();
    let mut ok = true;
    for side in [Side::Plus, Side::Minus] {
        let u = match build_pure_spinor(&c.cl, &c.pair, side) {
            Ok(u) => u,
            Err(e) => return error_outcome(e),
        };
        let ann_ok = u.annihilator.dim() == 2 * c.pair.n() && u.annihilator == expected_annihilator(&c.pair, side);
        let ty = type_of(&c.cl, &u.element, &Scalar::one());
        let parity = expected_type_parity(&c.pair, side);
        let parity_ok = matches!((&ty, &parity), (Ok(t), Ok(p)) if t % 2 == *p);
        ok &= ann_ok && parity_ok;
        w.insert(format!("{side}.annihilator"), if ann_ok { "matches".into() } else { format!("dim {}", u.annihilator.dim()) });
        w.insert(format!("{side}.type"), ty.map(|t| t.to_string()).unwrap_or_else(|e| e.to_string()));
    }
    outcome(ok, w)
}

fn connection(c: &Context) -> Outcome {
    let u = match build_pure_spinor(&c.cl, &c.pair, Side::Plus) {
        Ok(u) => u,
        Err(e) => return error_outcome(e),
    };
    let mut values = Vec::new();
    for x in u.annihilator.basis_vectors() {
        let (a, ap) = c.pair.double.split(&x);
        match canonical_connection_eigenvalue(&c.cl, &c.pair, &u, a, ap) {
            Ok(v) => values.push(v.to_string()),
            Err(e) => return error_outcome(e),
        }
    }
    Outcome::Pass(witness! { "eigenvalues" => values.join(", ") })
}

fn hodge_grid_check(c: &Context) -> Outcome {
    let grid = match c.grid() {
        Ok(g) => g,
        Err(e) => return error_outcome(e),
    };
    let n = c.pair.n();
    let mut dims_ok = true;
    for ((r, s), rank) in grid.cell_ranks(&c.cl) {
        let p = ((r + s + n as i64) / 2) as usize;
        let q = ((r - s + n as i64) / 2) as usize;
        dims_ok &= rank == binomial(n, p) * binomial(n, q);
    }
    let total = grid.total_rank(&c.cl);
    let eigen_failures = grid.eigen_failures(&c.cl).len();
    let u = &grid.u_plus;
    let u_plus_ok = grid.tau.act(&c.cl, true, u) == u.scale(&(&Scalar::i() * &Scalar::from_int(-(n as i64))))
        && grid.tau.act(&c.cl, false, u).is_zero();
    outcome(
        dims_ok && total == 1 << (2 * n) && eigen_failures == 0 && u_plus_ok,
        witness! {
            "cells" => grid.cells.len(),
            "cell_dims" => if dims_ok { "C(n,p)C(n,q)" } else { "mismatch" },
            "total_rank" => total,
            "eigen_failures" => eigen_failures,
            "u_plus_eigenvalues" => if u_plus_ok { format!("(-{n}i, 0)") } else { "mismatch".into() },
        },
    )
}

fn graded(c: &Context) -> Outcome {
    let grid = match c.grid() {
        Ok(g) => g,
        Err(e) => return error_outcome(e),
    };
    let r = graded_dcl(&c.cl, grid);
    let pairs = |v: &[(i64, i64)]| v.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
    let mut w = witness! {
        "containment_failures" => r.containment_failures.len(),
        "dbar_plus_squared_zero" => r.dbar_plus_squared,
        "dbar_minus_squared_zero" => r.dbar_minus_squared,
        "dbar_anticommute" => r.dbar_anticommute,
        "bidegree_failures" => r.bidegree_failures.len(),
        "u_plus_shifts" => pairs(&r.u_plus_shifts),
    };
    if let Some(((cr, cs), residual)) = r.containment_failures.first() {
        w.insert("first_containment_failure".into(), format!("cell ({cr},{cs}): residual {residual}"));
    }
    if let Some((cell, shift)) = r.bidegree_failures.first() {
        w.insert("first_bidegree_failure".into(), format!("cell {} shift {}", pairs(&[*cell]), pairs(&[*shift])));
    }
    outcome(r.holds(), w)
}

fn torus_restriction(c: &Context) -> Outcome {
    if !c.pair.canonical {
        return Outcome::Skipped("defined for canonical pairs".into());
    }
    match torus_restriction_check(&c.pair) {
        Ok(ok) => outcome(ok, witness! { "rank" => c.frame.rank() }),
        Err(e) => error_outcome(e),
    }
}

fn spectral_sequence(c: &Context) -> Outcome {
    let run = || -> gk_core::Result<Outcome> {
        let pair = &c.pair;
        let r = pair.l_plus.t10.dim();
        let total = total_cohomology(pair)?;
        let expected: Vec<usize> = (0..total.len()).map(|k| binomial(2 * r, k)).collect();
        let kunneth = convolve(&ce_cohomology(&pair.alg, &pair.lbar_minus)?, &ce_cohomology(&pair.alg, &pair.lbar_plus)?);
        let mut ok = total == expected && kunneth == total;
        let mut w = witness! { "r" => r, "total" => fmt_dims(&total) };
        for side in [Side::Plus, Side::Minus] {
            let e1 = e1_page(pair, side)?;
            let e2 = e2_page(&e1);
            let cells = e2.e2.as_ref().expect("E2 computed");
            let cells_ok = cells.iter().all(|(&(p, q), &d)| d == binomial(r, p) * binomial(r, q));
            let total_ok = e2.e2_total() == Some(total.iter().sum());
            ok &= e1.d1_squares_to_zero() && cells_ok && total_ok;
            w.insert(format!("{side}.e2_by_degree"), fmt_dims(&e2.e2_by_degree().unwrap_or_default()));
        }
        Ok(outcome(ok, w))
    };
    run().unwrap_or_else(error_outcome)
}

fn fmt_dims(v: &[usize]) -> String {
    let len = v.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
    v[..len].iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn picard(c: &Context) -> Outcome {
    match picard_report(&c.pair) {
        Ok(r) => outcome(r.consistent(), witness! { "r" => r.r, "h1_lbar_plus" => r.h1_lbar_plus, "tangent_dim" => r.tangent_dim }),
        Err(e) => error_outcome(e),
    }
}

fn bd_enumeration(c: &Context) -> Outcome {
    let run = || -> gk_core::Result<Outcome> {
        let triples = enumerate_bd(&c.alg, &c.frame)?;
        let candidates = bd_candidates(&c.frame)?;
        let mismatches = candidates.iter().filter(|t| triples.contains(t) != is_isometry(&c.alg, &c.frame, t)).count();
        Ok(outcome(mismatches == 0, witness! { "triples" => triples.len(), "candidates" => candidates.len(), "mismatches" => mismatches }))
    };
    run().unwrap_or_else(error_outcome)
}

fn evens_lu_outputs(c: &Context) -> Outcome {
    let run = || -> gk_core::Result<Outcome> {
        let double = Double::new(&c.alg);
        let triples = enumerate_bd(&c.alg, &c.frame)?;
        let mut valid = 0;
        let mut missing_f = 0;
        for triple in &triples {
            match sample_f(&double, &c.frame, triple) {
                Some(f) => {
                    let l = evens_lu(&double, &c.frame, triple, &f)?;
                    valid += usize::from(l.is_valid(&double) && l.subspace.dim() == c.alg.dim());
                }
                None => missing_f += 1,
            }
        }
        Ok(outcome(valid == triples.len(), witness! { "triples" => triples.len(), "lagrangian" => valid, "without_sample_f" => missing_f }))
    };
    run().unwrap_or_else(error_outcome)
}

fn gk_pair_check(c: &Context) -> Outcome {
    let run = || -> gk_core::Result<Outcome> {
        let pair = &c.pair;
        let invariants = pair.invariant_checks()?;
        let failed: Vec<&str> = invariants.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
        let class = split_classify(&pair.double, &c.conj, &pair.big_plus.subspace)?;
        let round_trip =
            class.gc && class.splitting == Splitting::Split { left: pair.l_minus.subspace.clone(), right: pair.l_plus.subspace.clone() };
        let mut w = witness! { "induced" => pair.induced, "canonical" => pair.canonical, "round_trip" => round_trip };
        if !failed.is_empty() {
            w.insert("failed".into(), failed.join(", "));
        }
        Ok(outcome(failed.is_empty() && round_trip, w))
    };
    run().unwrap_or_else(error_outcome)
}

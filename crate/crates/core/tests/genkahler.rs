use gk_core::clifford::CliffordAlgebra;
use gk_core::exactfield::{add_vectors, scale_vector, unit_vector, zero_vector, Scalar, Vector};
use gk_core::genkahler::*;
use gk_core::lagrangian::GKPair;
use gk_core::liealg::{build, CartanFrame, Conjugation, GroupSpec, LieAlgebra};
use gk_core::presets::{preset_pair, Preset};
use gk_core::Error;

const GROUPS: [(&str, u32); 4] = [("T2", 1), ("A1,U1", 1), ("A1,A1", 1), ("A2", 3)];
const SMALL: [(&str, u32); 3] = [("T2", 1), ("A1,U1", 1), ("A1,A1", 1)];

fn group(text: &str, d: u32) -> (LieAlgebra, CartanFrame, Conjugation) {
    build(&GroupSpec::parse(text, None, d).unwrap()).unwrap()
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn pairs(text: &str, d: u32) -> (CliffordAlgebra, Vec<(Preset, GKPair)>) {
    let (alg, frame, conj) = group(text, d);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let ps = Preset::ALL.iter().map(|&p| (p, preset_pair(&alg, &frame, &conj, p).unwrap())).collect();
    (cl, ps)
}

/// `κ(ρ, ρ)` from `κ(X, Y) = −2n tr(XY)` on each `sl(n)`, with `ρ` the
/// diagonal matrix `−(1/2n) diag((n−1)/2, (n−3)/2, …)` (the κ-dual of the
/// half sum of positive roots).
fn weyl_norm_by_trace(factors: &[i64]) -> Scalar {
    let mut total = Scalar::zero();
    for &n in factors {
        let mut tr = Scalar::zero();
        for k in 0..n {
            let entry = &Scalar::from_frac(n - 1 - 2 * k, 2) * &Scalar::from_frac(-1, 2 * n);
            tr += &(&entry * &entry);
        }
        total += &(&s(-2 * n) * &tr);
    }
    total
}

#[test]
fn pure_spinor_annihilators_and_types() {
    for (text, d) in GROUPS {
        let (cl, ps) = pairs(text, d);
        for (preset, pair) in &ps {
            for side in [Side::Plus, Side::Minus] {
                let u = build_pure_spinor(&cl, pair, side).unwrap();
                assert_eq!(u.annihilator.dim(), 2 * pair.n(), "{text} {preset} {side}");
                assert_eq!(u.annihilator, expected_annihilator(pair, side));
                assert!(pair.double.is_subalgebra(&u.annihilator) && pair.double.is_isotropic(&u.annihilator));
                assert_eq!(u.generators.len(), u.n + u.s);
                let ty = type_of(&cl, &u.element, &Scalar::one()).unwrap();
                assert_eq!(ty % 2, expected_type_parity(pair, side).unwrap(), "{text} {preset} {side}");
                assert_eq!(type_of(&cl, &u.element, &Scalar::from_frac(-7, 3)).unwrap(), ty);
            }
        }
    }
}

#[test]
fn pure_spinor_examples() {
    let (cl, ps) = pairs("T2", 1);
    let u = build_pure_spinor(&cl, &ps[0].1, Side::Plus).unwrap();
    assert_eq!((u.n, u.s), (1, 0));
    assert_eq!(type_of(&cl, &u.element, &Scalar::one()).unwrap(), 1);

    let (cl, ps) = pairs("A1,U1", 1);
    let canonical = &ps[0].1;
    let u = build_pure_spinor(&cl, canonical, Side::Plus).unwrap();
    assert_eq!((u.n, u.s, u.generators.len()), (2, 0, 2));
    assert_eq!(u.annihilator.dim(), 4);
    assert_eq!(type_of(&cl, &u.element, &Scalar::one()).unwrap() % 2, 0);
}

#[test]
fn p_bar_sits_in_the_cartan_for_induced_pairs() {
    for (text, d) in GROUPS {
        let (alg, frame, conj) = group(text, d);
        let pair = preset_pair(&alg, &frame, &conj, Preset::InducedPair1).unwrap();
        let u = default_generators(&pair, Side::Plus).unwrap();
        let n = pair.n();
        for g in &u[n..] {
            assert!(frame.cartan().contains_vector(g), "{text}");
        }
    }
}

/// Two admissible choices of `p̄` give the same line `⟨u⟩`.
#[test]
fn spinor_line_is_independent_of_p_bar() {
    for (text, d) in SMALL {
        let (cl, ps) = pairs(text, d);
        for (preset, pair) in &ps {
            for side in [Side::Plus, Side::Minus] {
                let u = build_pure_spinor(&cl, pair, side).unwrap();
                if u.s == 0 || u.n == u.s {
                    continue;
                }
                let mut gens = u.generators.clone();
                // shift p̄_1 by an element of I and rescale c_1
                let shifted = add_vectors(&gens[u.n], &gens[u.s]);
                gens[u.n] = shifted;
                gens[0] = scale_vector(&s(3), &gens[0]);
                let v = pure_spinor_from_generators(&cl, pair, side, gens).unwrap();
                assert_eq!(v.annihilator, u.annihilator, "{text} {preset}");
                let (m, c) = u.element.terms().next().unwrap();
                let ratio = &v.element.coefficient(m) * &c.inv().unwrap();
                assert_eq!(v.element, u.element.scale(&ratio));
                assert_eq!(ratio, s(3));
            }
        }
    }
}

#[test]
fn degenerate_generators_are_rejected() {
    let (cl, ps) = pairs("A1,U1", 1);
    let pair = &ps[1].1;
    let mut gens = default_generators(pair, Side::Plus).unwrap();
    let last = gens.len() - 1;
    gens[last] = gens[0].clone();
    assert_eq!(pure_spinor_from_generators(&cl, pair, Side::Plus, gens).unwrap_err(), Error::DegenerateGenerators);
    let gens = vec![unit_vector(4, 0); 2];
    assert_eq!(pure_spinor_from_generators(&cl, pair, Side::Plus, gens).unwrap_err(), Error::DegenerateGenerators);
}

#[test]
fn dcl_spinor_identities() {
    for (text, d) in GROUPS {
        let (cl, ps) = pairs(text, d);
        for (preset, pair) in &ps {
            let report = verify_dcl_spinor(&cl, pair).unwrap();
            for c in &report.checks {
                assert!(c.holds, "{text} {preset}: {} residual {}", c.name, c.residual);
            }
            // Calabi–Yau iff abelian
            assert_eq!(report.calabi_yau, pair.alg.is_abelian(), "{text} {preset}");
        }
    }
}

#[test]
fn weyl_vector_of_a1_u1() {
    let (_, ps) = pairs("A1,U1", 1);
    let pair = &ps[0].1;
    // ρ = −h/8 with h the first basis vector
    let mut rho = zero_vector(4);
    rho[0] = Scalar::from_frac(-1, 8);
    assert_eq!(pair.rho_plus, rho);
}

#[test]
fn connection_eigenvalues() {
    let (cl, ps) = pairs("A1,U1", 1);
    let pair = &ps[0].1;
    let u = build_pure_spinor(&cl, pair, Side::Plus).unwrap();
    let z = zero_vector(4);
    // root vectors: the f direction lies in l̄_± and is κ-orthogonal to ρ
    let f = unit_vector(4, 2);
    assert_eq!(canonical_connection_eigenvalue(&cl, pair, &u, &f, &z).unwrap(), s(0));
    assert_eq!(canonical_connection_eigenvalue(&cl, pair, &u, &z, &f).unwrap(), s(0));
    // Cartan direction t01 = span(−h + z): κ(−h + z, −h/8) = κ(h, h)/8 = −1
    let t01: Vector = vec![s(-1), s(0), s(0), s(1)];
    assert_eq!(canonical_connection_eigenvalue(&cl, pair, &u, &t01, &t01).unwrap(), s(-2));
    assert_eq!(canonical_connection_eigenvalue(&cl, pair, &u, &z, &t01).unwrap(), s(-1));
    // e is not in l̄_+
    let e = unit_vector(4, 1);
    assert_eq!(canonical_connection_eigenvalue(&cl, pair, &u, &z, &e).unwrap_err(), Error::NotInAnnihilator);
}

#[test]
fn connection_eigenvalue_is_linear() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(5);
    for (text, d) in SMALL {
        let (cl, ps) = pairs(text, d);
        for (_, pair) in &ps {
            let u = build_pure_spinor(&cl, pair, Side::Plus).unwrap();
            let basis = u.annihilator.basis_vectors();
            let values: Vec<Scalar> = basis
                .iter()
                .map(|v| {
                    let (a, ap) = pair.double.split(v);
                    canonical_connection_eigenvalue(&cl, pair, &u, a, ap).unwrap()
                })
                .collect();
            for _ in 0..5 {
                let coeffs: Vec<Scalar> = basis.iter().map(|_| s(rng.gen_range(-3..4))).collect();
                let mut v = zero_vector(pair.double.dim());
                let mut expected = Scalar::zero();
                for ((c, b), val) in coeffs.iter().zip(&basis).zip(&values) {
                    v = add_vectors(&v, &scale_vector(c, b));
                    expected += &(c * val);
                }
                let (a, ap) = pair.double.split(&v);
                assert_eq!(canonical_connection_eigenvalue(&cl, pair, &u, a, ap).unwrap(), expected);
            }
        }
    }
}

#[test]
fn degree_is_minus_twice_weyl_norm() {
    for ((text, d), factors) in GROUPS.into_iter().zip([vec![], vec![2], vec![2, 2], vec![3]]) {
        let oracle = weyl_norm_by_trace(&factors);
        let (_, ps) = pairs(text, d);
        for (preset, pair) in &ps {
            for side in [MetricSide::Plus, MetricSide::Minus] {
                let r = degree_canonical(pair, side).unwrap();
                assert_eq!(r.kappa_rho_rho, oracle, "{text}");
                assert!(r.numerator_matches && r.denominator_matches, "{text} {preset} {side}");
                assert_eq!(r.degree, &s(-2) * &oracle);
                assert!(r.holds());
                // the wedge computed with ω^{n−1} carries (n − 1)! instead of n!
                assert_eq!(&r.wedge_ratio * &s(pair.n() as i64), r.degree);
                assert_eq!(r.omega_top.len(), 1);
                let top = if pair.alg.is_abelian() { None } else { Some(2 * pair.n()) };
                assert_eq!(r.curvature_top.max_grade(), top);
            }
        }
    }
    let (_, ps) = pairs("A1,U1", 1);
    assert_eq!(degree_canonical(&ps[0].1, MetricSide::Plus).unwrap().degree, Scalar::from_frac(1, 4));
    let (_, ps) = pairs("A2", 3);
    assert_eq!(degree_canonical(&ps[0].1, MetricSide::Minus).unwrap().degree, Scalar::from_frac(2, 3));
}

#[test]
fn connection_forms() {
    let (_, ps) = pairs("A1,U1", 1);
    let pair = &ps[0].1;
    let r = degree_canonical(pair, MetricSide::Plus).unwrap();
    // ρ = −h/8 = −(1/16)(h + z) + (1/16)(−h + z), so ρ^{1,0} = −(h + z)/16
    let rho10 = rho_10(pair, MetricSide::Plus).unwrap();
    assert_eq!(rho10, vec![Scalar::from_frac(-1, 16), s(0), s(0), Scalar::from_frac(-1, 16)]);
    // φ_+ = κ(·, ρ^{1,0}) = (−8·(−1/16), 0, 0, 8·(−1/16))
    assert_eq!(r.phi_plus.coefficient(0b0001), Scalar::from_frac(1, 2));
    assert_eq!(r.phi_plus.coefficient(0b1000), Scalar::from_frac(-1, 2));
    assert_eq!(r.phi_minus, -r.phi_plus.clone());
}

#[test]
fn hodge_grid_cells() {
    for (text, d) in GROUPS {
        let (cl, ps) = pairs(text, d);
        let presets: &[(Preset, GKPair)] = if text == "A2" { &ps[..1] } else { &ps };
        for (preset, pair) in presets {
            let grid = hodge_grid(&cl, pair).unwrap();
            let n = pair.n();
            let binom = |k: usize| (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1));
            for ((r, s_), rank) in grid.cell_ranks(&cl) {
                let p = ((r + s_ + n as i64) / 2) as usize;
                let q = ((r - s_ + n as i64) / 2) as usize;
                assert_eq!(rank, binom(p) * binom(q), "{text} {preset} ({r}, {s_})");
            }
            assert_eq!(grid.total_rank(&cl), 1 << (2 * n));
            assert!(grid.eigen_failures(&cl).is_empty(), "{text} {preset}");
            let u = &grid.u_plus;
            let i = Scalar::i();
            assert_eq!(grid.tau.act(&cl, true, u), u.scale(&(&i * &s(-(n as i64)))));
            assert!(grid.tau.act(&cl, false, u).is_zero());
        }
    }
}

#[test]
fn graded_dcl_double_complex() {
    for (text, d) in SMALL {
        let (cl, ps) = pairs(text, d);
        for (preset, pair) in &ps {
            let grid = hodge_grid(&cl, pair).unwrap();
            let report = graded_dcl(&cl, &grid);
            assert!(report.holds(), "{text} {preset}: {report:?}");
            if pair.alg.is_abelian() {
                assert!(report.u_plus_shifts.is_empty());
            } else {
                assert!(!report.u_plus_shifts.is_empty());
                assert!(report.u_plus_shifts.iter().all(|&(dr, _)| dr == 1));
            }
        }
    }
}

#[test]
fn split_shifted_detects_foreign_components() {
    let (cl, ps) = pairs("A1,U1", 1);
    let grid = hodge_grid(&cl, &ps[0].1).unwrap();
    // u_+ itself sits in (−n, 0), not in any cell shifted from (0, 0)
    assert!(grid.shifted_parts(&cl, &grid.u_plus, 0, 0).is_err());
    let inside = grid.cell(-1, 1).unwrap().basis[0].clone();
    let parts = grid.shifted_parts(&cl, &inside, -2, 0).unwrap();
    assert_eq!(parts.iter().filter(|(_, w)| !w.is_zero()).count(), 1);
}

#[test]
fn torus_restriction() {
    for (text, d) in GROUPS {
        let (_, ps) = pairs(text, d);
        for (preset, pair) in &ps {
            match torus_restriction_check(pair) {
                Ok(ok) => assert!(pair.canonical && ok, "{text} {preset}"),
                Err(e) => assert!(!pair.canonical && e == Error::NotCanonical),
            }
        }
    }
}

#[test]
fn rescaling_changes_no_invariant() {
    let (cl, ps) = pairs("A1,U1", 1);
    let pair = &ps[1].1;
    let u = build_pure_spinor(&cl, pair, Side::Plus).unwrap();
    let c = &Scalar::from_frac(2, 5) * &Scalar::i();
    let scaled = u.element.scale(&c);
    assert_eq!(annihilator_of(&cl, pair, &scaled), u.annihilator);
    assert_eq!(type_of(&cl, &scaled, &Scalar::one()).unwrap(), type_of(&cl, &u.element, &Scalar::one()).unwrap());
    let mut v = u.clone();
    v.element = scaled;
    let a: Vector = pair.lbar_plus.basis_vectors()[0].clone();
    let z = zero_vector(4);
    assert_eq!(
        canonical_connection_eigenvalue(&cl, pair, &v, &z, &a).unwrap(),
        canonical_connection_eigenvalue(&cl, pair, &u, &z, &a).unwrap()
    );
    let grid = hodge_grid(&cl, pair).unwrap();
    assert!(grid.tau.is_eigen(&cl, &v.element, -2, 0));
}

use gk_core::clifford::{dcl_cohomology, CliffordAlgebra, CliffordElement, Form, Mask, Multivector};
use gk_core::exactfield::{scale_vector, unit_vector, zero_vector, Matrix, Scalar, Vector};
use gk_core::liealg::{build, build_lenient, GroupSpec, LieAlgebra};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn algebra(text: &str, d: u32) -> LieAlgebra {
    build(&GroupSpec::parse(text, None, d).unwrap()).unwrap().0
}

fn mono(m: Mask) -> CliffordElement {
    CliffordElement::monomial(m, Scalar::one())
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn defining_relations() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    for i in 0..4 {
        let x = mono(1 << i);
        let k = alg.kappa(&unit_vector(4, i), &unit_vector(4, i));
        assert_eq!(cl.mul(&x, &x), CliffordElement::scalar(k));
    }
    // e1·e2 and e2·e1 with κ(e, f) = −4
    let (e, f) = (mono(0b0010), mono(0b0100));
    assert_eq!(cl.mul(&e, &f), mono(0b0110));
    assert_eq!(cl.mul(&f, &e), &(-&mono(0b0110)) + &CliffordElement::scalar(s(-8)));
}

#[test]
fn associativity_on_random_triples() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let (a, b, c) = (rng.gen_range(0..16), rng.gen_range(0..16), rng.gen_range(0..16));
        let (u, v, w) = (mono(a), mono(b), mono(c));
        let left = cl.mul(&cl.mul(&u, &v), &w);
        let right = cl.mul(&u, &cl.mul(&v, &w));
        assert_eq!(left, right);
        let top = left.max_grade().unwrap_or(0);
        assert!(top <= (a.count_ones() + b.count_ones() + c.count_ones()) as usize);
    }
}

#[test]
fn quantization_basics() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    assert_eq!(cl.quantize(&Multivector::one()), CliffordElement::one());
    let v: Vector = vec![s(1), Scalar::i(), s(-2), Scalar::from_frac(1, 3)];
    assert_eq!(cl.quantize(&Multivector::from_vector(&v)), CliffordElement::from_vector(&v));
    // q(e1 ∧ e2) = e1·e2 − κ(e1, e2) for e1 = e, e2 = f
    let q = cl.quantize(&Multivector::monomial(0b0110, Scalar::one()));
    assert_eq!(q, &mono(0b0110) - &CliffordElement::scalar(s(-4)));
    // q is bijective: dequantize inverts it on every monomial
    for m in 0..16 {
        let v = Multivector::monomial(m, Scalar::one());
        assert_eq!(cl.dequantize(&cl.quantize(&v)), v);
    }
}

/// All 2N basis elements `(e_i, 0)` and `(0, e_i)` of the double.
fn double_basis(n: usize) -> Vec<(Vector, Vector)> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push((unit_vector(n, i), zero_vector(n)));
        out.push((zero_vector(n), unit_vector(n, i)));
    }
    out
}

#[test]
fn quantization_module_property() {
    for text in ["A1,U1", "A1,A1"] {
        let alg = algebra(text, 1);
        let cl = CliffordAlgebra::new(&alg).unwrap();
        let n = alg.dim();
        for (a, ap) in double_basis(n) {
            let ks = cl.kappa_star(&a, &ap);
            for m in 0..(1 << n) as Mask {
                let v = Multivector::monomial(m, Scalar::one());
                let lhs = cl.quantize(&cl.exterior_action(&ks, &v));
                let rhs = cl.spinor_action(&a, &ap, &cl.quantize(&v));
                assert_eq!(lhs, rhs, "{text}");
            }
        }
    }
}

#[test]
fn left_and_right_multiplication() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    for i in 0..4 {
        let a = unit_vector(4, i);
        let ka = alg.kappa_flat(&a);
        let av = Multivector::from_vector(&a);
        for m in 0..16 {
            let v = Multivector::monomial(m, Scalar::one());
            let qv = cl.quantize(&v);
            // a·q(v) = q(a ∧ v + ι_{κ(a)} v)
            assert_eq!(cl.mul(&cl.vector(&a), &qv), cl.quantize(&(&av.wedge(&v) + &v.interior(&ka))));
            // (−1)^{|v|} q(v)·a = q(a ∧ v − ι_{κ(a)} v)
            let sign = if m.count_ones() % 2 == 0 { s(1) } else { s(-1) };
            assert_eq!(cl.mul(&qv, &cl.vector(&a)).scale(&sign), cl.quantize(&(&av.wedge(&v) - &v.interior(&ka))));
        }
    }
}

#[test]
fn star_map() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let one = Scalar::one();
    let mu = Multivector::monomial(0b1111, one.clone());
    assert_eq!(cl.star(&Form::one(), &one), mu);
    // ⋆(e^1 ∧ e^2 ∧ e^3 ∧ e^4) = ι_{e^1} ι_{e^2} ι_{e^3} ι_{e^4} μ = 1
    assert_eq!(cl.star(&Form::monomial(0b1111, one.clone()), &one), Multivector::one());
    let mut rng = StdRng::seed_from_u64(11);
    for scale in [s(1), Scalar::from_frac(-3, 2) * Scalar::i()] {
        for _ in 0..60 {
            let a: Vector = (0..4).map(|_| s(rng.gen_range(-3..4))).collect();
            let xi: Vector = (0..4).map(|_| s(rng.gen_range(-3..4))).collect();
            let alpha = Form::monomial(rng.gen_range(0..16), s(rng.gen_range(1..5)));
            // ⋆(ι_a α + ξ ∧ α) = a ∧ ⋆α + ι_ξ(⋆α)
            let lhs = cl.star(&(&alpha.interior(&a) + &Form::from_vector(&xi).wedge(&alpha)), &scale);
            let sa = cl.star(&alpha, &scale);
            let rhs = &Multivector::from_vector(&a).wedge(&sa) + &sa.interior(&xi);
            assert_eq!(lhs, rhs);
            assert_eq!(cl.star_inv(&sa, &scale).unwrap(), alpha);
        }
        // ⋆ is linear in μ
        let alpha = Form::monomial(0b0101, one.clone());
        assert_eq!(cl.star(&alpha, &scale), cl.star(&alpha, &one).scale(&scale));
    }
}

#[test]
fn spinor_action_and_kappa_star() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let z = zero_vector(4);
    let a: Vector = vec![s(1), s(2), Scalar::i(), s(-1)];
    assert_eq!(cl.spinor_action(&z, &a, &CliffordElement::one()), cl.vector(&a));
    assert_eq!(cl.spinor_action(&a, &z, &CliffordElement::one()), -&cl.vector(&a));
    let ap: Vector = vec![s(0), s(-1), s(3), Scalar::from_frac(1, 2)];
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let u = CliffordElement::from_terms((0..3).map(|_| (rng.gen_range(0..16), s(rng.gen_range(-4..5)))));
        let twice = cl.spinor_action(&a, &ap, &cl.spinor_action(&a, &ap, &u));
        let norm = &alg.kappa(&ap, &ap) - &alg.kappa(&a, &a);
        assert_eq!(twice, u.scale(&norm));
    }
    // κ_*(a, a) = (0, 2κ(a)) and κ_*(a, −a) = (−2a, 0)
    let (x, xi) = cl.kappa_star(&a, &a);
    assert!(x.iter().all(Scalar::is_zero));
    assert_eq!(xi, scale_vector(&s(2), &alg.kappa_flat(&a)));
    let (x, xi) = cl.kappa_star(&a, &scale_vector(&s(-1), &a));
    assert_eq!(x, scale_vector(&s(-2), &a));
    assert!(xi.iter().all(Scalar::is_zero));
    // κ_* is an isometry onto (g ⊕ g*, ½(ξ(y) + η(x)))
    for (b, bp) in double_basis(4) {
        for (c, cp) in double_basis(4) {
            let lhs = cl.split_pairing(&cl.kappa_star(&b, &bp), &cl.kappa_star(&c, &cp));
            assert_eq!(lhs, &alg.kappa(&bp, &cp) - &alg.kappa(&b, &c));
        }
    }
}

#[test]
fn theta_and_differential_basics() {
    let alg = algebra("T2", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    assert!(cl.theta().is_zero());
    for m in 0..4 {
        assert!(cl.d_cl(&mono(m)).is_zero());
    }
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    assert!(!cl.theta().is_zero());
    assert_eq!(cl.theta().parity(), Some(true));
    assert!(cl.d_cl(&CliffordElement::one()).is_zero());
}

#[test]
fn d_cl_squares_to_zero() {
    for (text, d) in [("T2", 1), ("A1,U1", 1), ("A1,A1", 1), ("A2", 3)] {
        let alg = algebra(text, d);
        let cl = CliffordAlgebra::new(&alg).unwrap();
        for m in 0..cl.dim() as Mask {
            assert!(cl.d_cl(&cl.d_cl(&mono(m))).is_zero(), "{text} monomial {m}");
        }
    }
}

#[test]
fn infinitesimal_spin() {
    for (text, d) in [("T2", 1), ("A1,U1", 1), ("A1,A1", 1), ("A2", 3)] {
        let alg = algebra(text, d);
        let cl = CliffordAlgebra::new(&alg).unwrap();
        let n = alg.dim();
        let taus: Vec<CliffordElement> = (0..n).map(|i| cl.tau_prime(&unit_vector(n, i))).collect();
        for i in 0..n {
            let a = unit_vector(n, i);
            assert_eq!(taus[i], cl.tau_prime_from_theta(&a), "{text}");
            assert_eq!(taus[i].parity().unwrap_or(false), false);
            for j in 0..n {
                let b = unit_vector(n, j);
                let br = alg.bracket(&a, &b);
                let comm = &cl.mul(&taus[i], &cl.vector(&b)) - &cl.mul(&cl.vector(&b), &taus[i]);
                assert_eq!(comm, cl.vector(&br));
                let tt = &cl.mul(&taus[i], &taus[j]) - &cl.mul(&taus[j], &taus[i]);
                assert_eq!(cl.tau_prime(&br), tt);
            }
        }
    }
}

#[test]
fn cartan_anticommutation() {
    let alg = algebra("A1,U1", 1);
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let n = alg.dim();
    for (a, ap) in double_basis(n) {
        let (ta, tap) = (cl.tau_prime(&a), cl.tau_prime(&ap));
        for m in 0..cl.dim() as Mask {
            let u = mono(m);
            let lhs = &cl.mul(&tap, &u) - &cl.mul(&u, &ta);
            let rhs = -&(&cl.spinor_action(&a, &ap, &cl.d_cl(&u)) + &cl.d_cl(&cl.spinor_action(&a, &ap, &u)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn dcl_cohomology_dims() {
    let cl = CliffordAlgebra::new(&algebra("T2", 1)).unwrap();
    let h = dcl_cohomology(&cl).unwrap();
    assert_eq!(h.total(), 4);

    // sl2 alone: Θ² is a nonzero scalar, so 1 = d^Cl(2Θ/Θ²) is exact.
    let spec = GroupSpec { simple_factors: vec![1], abelian_rank: 0, center_gram: Matrix::zeros(0, 0), field_d: 1 };
    let alg = build_lenient(&spec).unwrap().0;
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let theta_sq = cl.mul(cl.theta(), cl.theta());
    assert_eq!(theta_sq.max_grade(), Some(0));
    let c = theta_sq.coefficient(0);
    let primitive = cl.theta().scale(&(&s(2) * &c.inv().unwrap()));
    assert_eq!(cl.d_cl(&primitive), CliffordElement::one());
    assert_eq!(dcl_cohomology(&cl).unwrap().total(), 0);

    let cl = CliffordAlgebra::new(&algebra("A1,U1", 1)).unwrap();
    assert_eq!(dcl_cohomology(&cl).unwrap().total(), 0);
}

#[test]
fn disk_cache_round_trip() {
    let alg = algebra("A1,U1", 1);
    let dir = std::env::temp_dir().join(format!("gk-cache-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.bin");
    let cl = CliffordAlgebra::new(&alg).unwrap();
    let theta = cl.theta().clone();
    let d_theta = cl.d_cl(&theta);
    cl.save_cache(&path).unwrap();
    let warm = CliffordAlgebra::with_cache(&alg, &path).unwrap();
    assert_eq!(warm.cached_products(), cl.cached_products());
    assert_eq!(warm.theta(), &theta);
    assert_eq!(warm.d_cl(&theta), d_theta);
    // a table for another algebra is ignored
    let other = CliffordAlgebra::with_cache(&algebra("T2", 1), &path).unwrap();
    assert_eq!(other.cached_products(), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

use gk_core::exactfield::{unit_vector, zero_vector, Scalar, Subspace, Vector};
use gk_core::lagrangian::{
    bd_candidates, diagonal, enumerate_bd, evens_lu, is_isometry, samelson, sample_f, split_classify, BDTriple, Double, Splitting,
};
use gk_core::liealg::{build, CartanFrame, Conjugation, GroupSpec, LieAlgebra};
use gk_core::presets::{isotropic_lines, preset_pair, Preset};

const GROUPS: [(&str, u32); 4] = [("T2", 1), ("A1,U1", 1), ("A1,A1", 1), ("A2", 3)];

fn group(text: &str, d: u32) -> (LieAlgebra, CartanFrame, Conjugation) {
    build(&GroupSpec::parse(text, None, d).unwrap()).unwrap()
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn samelson_examples() {
    let i = Scalar::i();
    let (alg, frame, conj) = group("T2", 1);
    let t10 = Subspace::span(2, vec![vec![s(1), i.clone()]]);
    let l = samelson(&alg, &frame, &conj, &t10).unwrap();
    assert_eq!(l.dim(), 1);

    let (alg, frame, conj) = group("A1,U1", 1);
    let t10 = Subspace::span(4, vec![vec![i.clone(), s(0), s(0), -i.clone()]]);
    let l = samelson(&alg, &frame, &conj, &t10).unwrap();
    assert_eq!(l.dim(), 2);
    assert!(l.subspace.contains_vector(&unit_vector(4, 1)));

    // x/y = (1 + i√3)/2 in coroot coordinates
    let (alg, frame, conj) = group("A2", 3);
    let r = Scalar::sqrt_d(3);
    let x = &(&s(1) + &(&i * &r)) * &Scalar::from_frac(1, 2);
    let (ha1, ha2) = (&frame.positive[frame.simple[0]].coroot, &frame.positive[frame.simple[1]].coroot);
    let v: Vector = ha1.iter().zip(ha2).map(|(a, b)| &(&x * a) + b).collect();
    let t10 = Subspace::span(8, vec![v]);
    let l = samelson(&alg, &frame, &conj, &t10).unwrap();
    assert_eq!(l.dim(), 4);
}

#[test]
fn samelson_rejections() {
    let (alg, frame, conj) = group("A1,U1", 1);
    // not isotropic: κ(h, h) = −8
    assert!(samelson(&alg, &frame, &conj, &Subspace::span(4, vec![unit_vector(4, 0)])).is_err());
    // outside the Cartan subalgebra
    assert!(samelson(&alg, &frame, &conj, &Subspace::span(4, vec![unit_vector(4, 1)])).is_err());
    // wrong dimension
    assert!(samelson(&alg, &frame, &conj, &frame.cartan()).is_err());
    assert!(samelson(&alg, &frame, &conj, &Subspace::zero(4)).is_err());
}

#[test]
fn isotropic_lines_are_conjugate() {
    for (text, d) in GROUPS {
        let (alg, frame, conj) = group(text, d);
        let [w1, w2] = isotropic_lines(&alg, &frame).unwrap();
        assert_ne!(w1, w2);
        assert_eq!(conj.apply_subspace(&w1), w2, "{text}");
    }
}

#[test]
fn bd_counts() {
    for ((text, d), expected) in GROUPS.into_iter().zip([1, 2, 7, 7]) {
        let (alg, frame, _) = group(text, d);
        let triples = enumerate_bd(&alg, &frame).unwrap();
        assert_eq!(triples.len(), expected, "{text}");
        let candidates = bd_candidates(&frame).unwrap();
        for c in &candidates {
            assert_eq!(triples.contains(c), is_isometry(&alg, &frame, c));
        }
    }
    // A2: π(α1) = α2 is an isometry because the coroot norms agree
    let (alg, frame, _) = group("A2", 3);
    let (h1, h2) = (&frame.positive[frame.simple[0]].coroot, &frame.positive[frame.simple[1]].coroot);
    assert_eq!(alg.kappa(h1, h1), alg.kappa(h2, h2));
    assert!(is_isometry(&alg, &frame, &BDTriple { pairs: vec![(0, 1)] }));
    assert!(is_isometry(&alg, &frame, &BDTriple { pairs: vec![(0, 1), (1, 0)] }));
    assert!(!is_isometry(&alg, &frame, &BDTriple { pairs: vec![(0, 1), (1, 1)] }));
}

#[test]
fn evens_lu_outputs_are_lagrangian() {
    for (text, d) in GROUPS {
        let (alg, frame, _) = group(text, d);
        let double = Double::new(&alg);
        for triple in enumerate_bd(&alg, &frame).unwrap() {
            let f = sample_f(&double, &frame, &triple).expect("sample F");
            let l = evens_lu(&double, &frame, &triple, &f).unwrap();
            assert!(l.is_valid(&double), "{text} {triple:?}");
            assert_eq!(l.subspace.dim(), alg.dim());
        }
    }
}

#[test]
fn evens_lu_examples() {
    // A1+U1 with P = P′ = {α}, π = id and F the diagonal of the center gives Δ.
    let (alg, frame, conj) = group("A1,U1", 1);
    let double = Double::new(&alg);
    let triple = BDTriple { pairs: vec![(0, 0)] };
    let f = sample_f(&double, &frame, &triple).unwrap();
    let l = evens_lu(&double, &frame, &triple, &f).unwrap();
    assert_eq!(l.subspace, diagonal(&double));
    let class = split_classify(&double, &conj, &l.subspace).unwrap();
    assert_eq!(class.splitting, Splitting::NonSplit);
    assert!(!class.gc);

    // Trivial triple with F = w ⊞ w for an isotropic line w of h: split.
    let [w, _] = isotropic_lines(&alg, &frame).unwrap();
    let f = double.boxplus(&w, &w);
    let l = evens_lu(&double, &frame, &BDTriple::trivial(), &f).unwrap();
    let class = split_classify(&double, &conj, &l.subspace).unwrap();
    assert!(matches!(class.splitting, Splitting::Split { .. }));

    // F that is not Lagrangian is rejected.
    let bad = double.boxplus(&Subspace::span(4, vec![unit_vector(4, 3)]), &Subspace::zero(4));
    assert!(evens_lu(&double, &frame, &BDTriple::trivial(), &bad).is_err());

    // A2 with π(α1) = α2.
    let (alg, frame, _) = group("A2", 3);
    let double = Double::new(&alg);
    let triple = BDTriple { pairs: vec![(0, 1)] };
    let f = sample_f(&double, &frame, &triple).unwrap();
    let l = evens_lu(&double, &frame, &triple, &f).unwrap();
    assert!(l.is_valid(&double));
}

#[test]
fn pairs_round_trip_and_flags() {
    for (text, d) in GROUPS {
        let (alg, frame, conj) = group(text, d);
        for preset in Preset::ALL {
            let pair = preset_pair(&alg, &frame, &conj, preset).unwrap();
            for (name, ok) in pair.invariant_checks().unwrap() {
                assert!(ok, "{text} {preset}: {name}");
            }
            let class = split_classify(&pair.double, &conj, &pair.big_plus.subspace).unwrap();
            assert!(class.gc);
            assert_eq!(class.splitting, Splitting::Split { left: pair.l_minus.subspace.clone(), right: pair.l_plus.subspace.clone() });
            let abelian = frame.positive.is_empty();
            match preset {
                Preset::Canonical => assert!(pair.canonical && pair.induced),
                Preset::InducedPair1 | Preset::InducedPair2 => assert!(pair.induced && !pair.canonical),
                Preset::OppositeBorel => assert_eq!(pair.induced, abelian),
            }
        }
    }
}

#[test]
fn mixed_factors_commute() {
    for (text, d) in GROUPS {
        let (alg, _, _) = group(text, d);
        let double = Double::new(&alg);
        let n = alg.dim();
        for a in 0..n {
            for b in 0..n {
                let x = double.join(&unit_vector(n, a), &zero_vector(n));
                let y = double.join(&zero_vector(n), &unit_vector(n, b));
                assert!(double.bracket(&x, &y).iter().all(Scalar::is_zero));
            }
        }
    }
}

#[test]
fn double_pairing_is_split_and_invariant() {
    let (alg, _, _) = group("A1,U1", 1);
    let double = Double::new(&alg);
    let m = gk_core::Matrix::from_fn(8, 8, |i, j| double.pairing(&unit_vector(8, i), &unit_vector(8, j)));
    assert_ne!(m.determinant().unwrap(), s(0));
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let (x, y, z) = (unit_vector(8, i), unit_vector(8, j), unit_vector(8, k));
                let lhs = &double.pairing(&double.bracket(&x, &y), &z) + &double.pairing(&y, &double.bracket(&x, &z));
                assert!(lhs.is_zero());
            }
        }
    }
    // signature: Δ and the antidiagonal are both Lagrangian
    assert!(double.is_isotropic(&diagonal(&double)));
}

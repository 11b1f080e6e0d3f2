use gk_core::exactfield::{Matrix, Scalar, Subspace};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const D: u32 = 3;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, e)| Scalar::new(a, b, c, e, D))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    // Small integer entries keep rank deficiencies frequent.
    proptest::collection::vec(-2i64..=2, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| Scalar::from_int(v[r * cols + c])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn inverses(a in scalar()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn conjugation_is_a_field_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn literals_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_literal(), D).unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in matrix(3, 5)) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), 5);
        for v in kernel.basis_vectors() {
            prop_assert!(m.apply(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(2, 4), b in matrix(2, 4)) {
        let (sa, sb) = (Subspace::span(4, a.row_vecs()), Subspace::span(4, b.row_vecs()));
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(sum.contains(&sa).unwrap() && sa.contains(&meet).unwrap());
    }
}

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use supermin::algebra::{AlgScalar, BiPoly, Conjugate, Poly, Ring};

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar() -> impl Strategy<Value = AlgScalar> {
    proptest::collection::vec(rational(), 16).prop_map(|v| {
        // sparsify so that products stay cheap and zero coordinates occur
        let coords: [BigRational; 16] = std::array::from_fn(|k| {
            if k % 3 == 0 || k == 5 {
                v[k].clone()
            } else {
                BigRational::from_integer(BigInt::from(0))
            }
        });
        AlgScalar::from_coords(&coords)
    })
}

fn dense_scalar() -> impl Strategy<Value = AlgScalar> {
    proptest::collection::vec(rational(), 16).prop_map(|v| {
        let coords: [BigRational; 16] = std::array::from_fn(|k| v[k].clone());
        AlgScalar::from_coords(&coords)
    })
}

fn unit_magnitude() -> impl Strategy<Value = AlgScalar> {
    dense_scalar().prop_filter_map("zero", |x| {
        let m = x.to_c64().norm();
        if m < 1e-3 {
            return None;
        }
        let q = BigRational::from_float(1.0 / m)?;
        Some(x.scale_rational(&q))
    })
}

fn poly() -> impl Strategy<Value = Poly<AlgScalar>> {
    proptest::collection::vec((0u32..9, scalar()), 1..5)
        .prop_map(Poly::from_terms)
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn bipoly() -> impl Strategy<Value = BiPoly<AlgScalar>> {
    proptest::collection::vec(((0u32..5, 0u32..5), scalar()), 0..6).prop_map(BiPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(x in dense_scalar(), y in dense_scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), AlgScalar::one());
        }
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn float_image_is_multiplicative(x in unit_magnitude(), y in unit_magnitude()) {
        let lhs = (&x * &y).to_c64();
        let rhs = x.to_c64() * y.to_c64();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
    }

    #[test]
    fn degree_and_order_are_additive(p in poly(), q in poly()) {
        let pq = &p * &q;
        prop_assert_eq!(pq.degree().unwrap(), p.degree().unwrap() + q.degree().unwrap());
        prop_assert_eq!(pq.ord0().unwrap(), p.ord0().unwrap() + q.ord0().unwrap());
    }

    #[test]
    fn product_rule(p in poly(), q in poly()) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conj_intertwines_derivatives(b in bipoly()) {
        prop_assert_eq!(b.d_z().conj(), b.conj().d_zbar());
        prop_assert_eq!(b.conj().conj(), b.clone());
    }

    #[test]
    fn self_conjugate_bipoly_is_real_valued(b in bipoly(), re in -1.5f64..1.5, im in -1.5f64..1.5) {
        let h = b.add_ref(&b.conj());
        let v = h.eval(Complex64::new(re, im));
        prop_assert!(v.im.abs() <= 1e-9 * v.norm().max(1.0));
    }

    #[test]
    fn evaluation_is_termwise(p in poly(), re in -1.2f64..1.2, im in -1.2f64..1.2) {
        let z = Complex64::new(re, im);
        let direct: Complex64 = p.terms().map(|(e, c)| c.to_c64() * z.powu(e)).sum();
        prop_assert!((p.eval(z) - direct).norm() <= 1e-10 * direct.norm().max(1.0));
    }
}

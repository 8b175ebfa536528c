use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use supermin::algebra::{AlgScalar, Poly, Ring};
use supermin::catalog::example_family;
use supermin::g2::{random_g2, Vec7};
use supermin::harmonic::{build_sequence, check_norm_products, check_reality, check_structure};
use supermin::plucker::degrees_exact;
use supermin::twistor::{superhorizontal_residual, CurveC7};
use supermin::Error;

fn moment_curve(coeffs: [i64; 7]) -> CurveC7 {
    Vec7(std::array::from_fn(|j| Poly::monomial(AlgScalar::from_int(coeffs[j]), j as u32)))
}

#[test]
fn generic_curve_has_structure_but_no_reality() {
    for coeffs in [[1, 1, 1, 1, 1, 1, 1], [2, -1, 3, 1, -2, 5, 1]] {
        let seq = build_sequence(&moment_curve(coeffs)).unwrap();
        assert!(check_structure(&seq).all_pass());
        assert!(!check_reality(&seq).all_pass());
    }
}

#[test]
fn ratios_survive_a_holomorphic_gauge_change() {
    let f = example_family(1, 1).unwrap();
    let lambda = Poly::from_int_terms(&[(0, 1), (1, 1)]);
    let g = f.map(|p| p.mul_ref(&lambda));
    let a = build_sequence(&f).unwrap();
    let b = build_sequence(&g).unwrap();
    assert!(check_structure(&b).all_pass());
    assert!(check_reality(&b).all_pass());
    let (ra, rb) = (check_norm_products(&a), check_norm_products(&b));
    assert!(rb.all_pass());
    let consts = |r: &supermin::harmonic::NormProductReport| r.ratios.iter().map(|c| c.constant.clone()).collect::<Vec<_>>();
    assert_eq!(consts(&ra), consts(&rb));
    // a common zero at z = −1 is an interior singularity of every wedge
    assert!(matches!(degrees_exact(&g), Err(Error::InteriorSingularity { .. })));
}

#[test]
fn g2_images_stay_superhorizontal() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = example_family(2, 1).unwrap().map(Poly::to_float);
    let pts: Vec<Complex64> = (0..12).map(|k| Complex64::from_polar(0.3 + 0.1 * k as f64, k as f64)).collect();
    for _ in 0..5 {
        let g = random_g2(&mut rng);
        let h = g.apply_curve(&f);
        assert!(superhorizontal_residual(&h, &pts) < 1e-9);
    }
}

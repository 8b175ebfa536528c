//! Normalizing a circle-symmetric curve onto the catalog form.

use supermin::algebra::AlgScalar;
use supermin::catalog::{example_family, normalize_r_family, normalize_r_family_float, Normalizer, SingularityTypeSpec};
use num_complex::Complex64;

fn main() {
    let spec = SingularityTypeSpec::almost_complex(1, 1).unwrap();
    let (r1, r8) = (AlgScalar::from_int(3), AlgScalar::sqrt_int(10).unwrap());
    let (norm, g) = normalize_r_family(&spec, &r1, &r8).unwrap();
    if let Normalizer::Exact { r, a } = &norm {
        println!("r = {r}");
        println!("A in G2(C): {}", a.g2c_membership(0.0).member);
    }
    println!("A f(rz) equals the catalog curve: {}", g == example_family(1, 1).unwrap());

    // parameters without an exact root go through the float path
    let h = normalize_r_family_float(&spec, Complex64::new(2.0, 0.5), Complex64::new(1.0, 0.0)).unwrap();
    let target = example_family(1, 1).unwrap().map(|p| p.to_float());
    let dev = (0..7).map(|j| h.0[j].eval(Complex64::new(0.7, 0.2)) - target.0[j].eval(Complex64::new(0.7, 0.2))).map(|d| d.norm()).fold(0.0, f64::max);
    println!("float path deviation at z = 0.7+0.2i: {dev:.1e}");
}

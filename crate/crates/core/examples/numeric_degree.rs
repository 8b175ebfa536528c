//! Degrees of the osculating curves by integrating γ_p over the sphere.

use supermin::catalog::example_family;
use supermin::plucker::{degrees_exact, degrees_numeric};
use supermin::quadrature::QuadratureParams;

fn main() {
    let f = example_family(1, 2).unwrap();
    let exact = degrees_exact(&f).unwrap();
    let params = QuadratureParams { tol: 1e-6, ..Default::default() };
    for p in 0..6 {
        let r = degrees_numeric(&f, p, &params).unwrap();
        println!("p {p}: exact {} numeric {:.10} (error estimate {:.1e}, {} intervals)", exact[p], r.estimate, r.error, r.intervals);
    }
}

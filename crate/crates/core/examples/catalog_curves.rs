//! Directrix curves of the catalog and their normal-form data.

use supermin::catalog::{example_family, lambda_weights, lowest_curve, reality_check, NormalFormCurve, SingularityTypeSpec};
use supermin::twistor::is_superhorizontal;

fn main() {
    for (k1, k2) in [(1, 1), (1, 2), (2, 3)] {
        let spec = SingularityTypeSpec::almost_complex(k1, k2).unwrap();
        let f = example_family(k1, k2).unwrap();
        let sh = is_superhorizontal(&f).unwrap().superhorizontal;
        let nf = NormalFormCurve::from_curve(&f, spec).unwrap();
        let mu = reality_check(&nf, 0.0).mu.map(|m| m.to_string()).unwrap_or_default();
        let lambdas: Vec<String> = lambda_weights(&spec).iter().map(|l| l.to_string()).collect();
        println!("({k1},{k2}) ladder {:?} superhorizontal {sh} mu {mu}", spec.ladder());
        println!("  lambda {}", lambdas.join(", "));
    }
    println!("lowest curve:");
    for (j, p) in lowest_curve().0.iter().enumerate() {
        println!("  e{}: {:?}", j + 1, p);
    }
}

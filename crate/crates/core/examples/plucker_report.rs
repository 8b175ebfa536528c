//! Singularity types, degrees and areas for a few curves.

use supermin::catalog::example_family;
use supermin::plucker::{enumerate_symmetric_types, singularity_report};

fn main() {
    for (k1, k2) in [(1, 1), (1, 2), (3, 2)] {
        let r = singularity_report(&example_family(k1, k2).unwrap(), None).unwrap();
        println!(
            "({k1},{k2}) type at 0 {:?}, totals {:?}, delta {:?}, area {}π, plücker {}",
            r.type_at_zero, r.totals, r.delta, r.area_pi, r.plucker
        );
    }
    for d in 6..=9 {
        println!("area 4π·{d}: {:?}", enumerate_symmetric_types(d));
    }
}

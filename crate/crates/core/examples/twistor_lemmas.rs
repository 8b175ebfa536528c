//! Metric and complex-linearity properties of the twistor projection.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supermin::twistor::{lemma_checks, random_quadric_point};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..3 {
        let p = random_quadric_point(&mut rng);
        let r = lemma_checks(&p).unwrap();
        println!("pi[x] = {:?}", p.project().re());
        println!(
            "  |pi_* v|/|v| on H': {:?}, on D: {:.12} (1/√2 = {:.12}), max deviation {:.1e}",
            r.h_length_ratios,
            r.d_length_ratio,
            std::f64::consts::FRAC_1_SQRT_2,
            r.max_deviation()
        );
    }
}

//! Exact harmonic sequence of the simplest curve and its identities.

use supermin::catalog::example_family;
use supermin::harmonic::{build_sequence, check_cross_table, check_norm_products, check_reality, check_structure, summarize};

fn main() {
    let f = example_family(1, 1).unwrap();
    let seq = build_sequence(&f).unwrap();
    println!("bidegrees of a_p: {:?}", summarize(&seq).norm_degrees);
    let s = check_structure(&seq);
    println!("structure: {} checks, all pass {}", s.checks.len(), s.all_pass());
    println!("reality: {}", check_reality(&seq).all_pass());
    for r in check_norm_products(&seq).ratios {
        println!("{} = {} (expected {})", r.name, r.constant.unwrap_or_default(), r.expected);
    }
    let t = check_cross_table(&seq, 5);
    println!("table-f: {} entries hold, unit gauge deviation {:.1e}", t.entries.iter().filter(|e| e.holds).count(), t.gauge_deviation);
}

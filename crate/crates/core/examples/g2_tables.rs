//! The octonionic cross product on the standard basis and the u-basis.

use supermin::g2::{random_g2, u_basis, Vec7, TABLE};
use supermin::algebra::AlgScalar;

fn main() {
    println!("e_i x e_j:");
    for row in TABLE {
        let cells: Vec<String> = row
            .iter()
            .map(|&(s, k)| match s {
                0 => "  0".into(),
                1 => format!(" e{}", k + 1),
                _ => format!("-e{}", k + 1),
            })
            .collect();
        println!("  {}", cells.join(" "));
    }
    let u = u_basis();
    let x: Vec7<AlgScalar> = u[0].cross(&u[4]);
    println!("u0 x u4 = {:?}", x);
    println!("u1 = {:?}", u[1]);
    let g = random_g2(&mut rand::thread_rng());
    println!("random G2 element is a member: {}", g.g2c_membership(1e-9).member);
}

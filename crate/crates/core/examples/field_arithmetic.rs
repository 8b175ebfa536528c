//! Exact arithmetic in Q(i, √2, √3, √5).

use supermin::algebra::AlgScalar;

fn main() {
    let r2 = AlgScalar::sqrt_int(2).unwrap();
    let r5 = AlgScalar::sqrt_int(5).unwrap();
    let x = AlgScalar::from_ratio(3, 4) + AlgScalar::i() * r2.clone() * r5.clone();
    println!("x       = {x}");
    println!("conj(x) = {}", x.conj());
    println!("|x|^2   = {}", x.norm_sqr());
    println!("1/x     = {}", x.inv().unwrap());
    println!("x*(1/x) = {}", x.clone() * x.inv().unwrap());
    println!("sqrt(-30) = {}", AlgScalar::sqrt_int(-30).unwrap());
    println!("sqrt(7) in the field: {}", AlgScalar::sqrt_int(7).is_some());
    println!("x ≈ {}", x.to_c64());
}

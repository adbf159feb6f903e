//! Fields too small for the probability bounds: lift to F_(q^s), factor
//! there, and recombine Frobenius orbits.
//!
//! cargo run --example small_field_lift -- 3 "x^6+x^5+2*x^3+x+2"

use drinfeld_factor::factor::lift_degree;
use drinfeld_factor::{baseline, lift_factor_small_q, Field, Poly};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let p: u64 = args.get(1).map_or(3, |s| s.parse().expect("prime"));
    let text = args.get(2).map_or("x^6+x^5+2*x^3+x+2", String::as_str);
    let field = Field::prime(p).unwrap();
    let f = Poly::parse(&field, text).unwrap().squarefree_part().unwrap().0;
    let n = f.degree().unwrap();
    println!("lift degree for q={p}, n={n}: {}", lift_degree(p, n));
    let fs = lift_factor_small_q(&f, 0).unwrap();
    assert_eq!(fs, baseline::factor_full(&f, 0).unwrap());
    print!("{fs}");
}

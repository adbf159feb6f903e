//! Deterministic equal-degree splitting: sweep a = 0, 1, ... until the Hasse
//! lift separates the factors.
//!
//! cargo run --example deterministic_edf -- 11 "x^4+x^3+5*x^2+x+4" 2

use drinfeld_factor::factor::first_split_index;
use drinfeld_factor::{factor_edf_deterministic, lift_at, CmModule, Field, Poly};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let q: u64 = args.get(1).map_or(11, |s| s.parse().expect("prime q"));
    let text = args.get(2).map_or("x^4+x^3+5*x^2+x+4", String::as_str);
    let k: usize = args.get(3).map_or(2, |s| s.parse().expect("k"));
    let field = Field::prime(q).unwrap();
    let f = Poly::parse(&field, text).unwrap();

    let index = first_split_index(&f, k).unwrap();
    println!("first splitting index: {index:?}");
    for a in 0..=index.unwrap_or(0) {
        let r = lift_at(&CmModule::new(field.element(a)), &f, k).unwrap();
        println!("a={a}: r_{k} mod f = {}, gcd = {}", r.value(), r.gcd_with_modulus());
    }
    print!("{}", factor_edf_deterministic(&f, k).unwrap());
}

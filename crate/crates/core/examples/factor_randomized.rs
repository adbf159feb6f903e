//! Factor a polynomial with the CM splitter and show one splitting pass.
//!
//! cargo run --example factor_randomized -- 5 "x^4+x^3+3*x^2+2*x+2"

use drinfeld_factor::factor::split_once;
use drinfeld_factor::{factor_randomized, verify_factorization, CmModule, Field, Poly};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let q: u64 = args.get(1).map_or(5, |s| s.parse().expect("prime q"));
    let text = args.get(2).map_or("x^4+x^3+3*x^2+2*x+2", String::as_str);
    let field = Field::prime(q).unwrap();
    let f = Poly::parse(&field, text).unwrap().monic().unwrap();
    let n = f.degree().unwrap();

    for a in 0..q.min(4) {
        let phi = CmModule::new(field.element(a));
        match split_once(&f, n, &phi) {
            Ok(so) => {
                let outs: Vec<String> = so.outputs.iter().map(Poly::to_string).collect();
                println!(
                    "a={a}: irreducible [{}], supersingular part {}, ordinary part {}",
                    outs.join(", "),
                    so.f_ss,
                    so.f_or
                );
            }
            Err(e) => println!("a={a}: {e}"),
        }
    }

    let fs = factor_randomized(&f, n, 1).unwrap();
    assert!(verify_factorization(&f, &fs));
    print!("{fs}");
}

//! Random squarefree inputs over several fields, factored by the CM splitter
//! and by Cantor-Zassenhaus, with timings.

use std::time::Instant;

use drinfeld_factor::{baseline, factor, Algorithm, Field, FieldElem, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fields = [Field::prime(7).unwrap(), Field::prime(101).unwrap(), Field::extension(5, 2).unwrap()];
    println!("q,n,factors,drinfeld_ms,cz_ms");
    for field in &fields {
        for _ in 0..4 {
            let n = rng.gen_range(8..=64);
            let f = loop {
                let mut c: Vec<FieldElem> = (0..n).map(|_| field.random(&mut rng)).collect();
                c.push(field.one());
                let f = Poly::from_elems(field, &c).unwrap();
                if f.is_squarefree() {
                    break f;
                }
            };
            let t = Instant::now();
            let a = factor(&f, Algorithm::DrinfeldRandom, 0).unwrap();
            let ta = t.elapsed().as_secs_f64() * 1e3;
            let t = Instant::now();
            let b = baseline::factor_full(&f, 0).unwrap();
            let tb = t.elapsed().as_secs_f64() * 1e3;
            assert_eq!(a, b);
            println!("{},{n},{},{ta:.2},{tb:.2}", field.q(), a.len());
        }
    }
}

//! Median factorization time against degree at a fixed field, for the CM
//! splitter and the Cantor-Zassenhaus baseline.
//!
//! cargo run --release --example scaling -- 101 128,256,512 3

use std::time::Instant;

use drinfeld_factor::{baseline, factor_randomized, Field, FieldElem, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_squarefree(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let mut c: Vec<FieldElem> = (0..n).map(|_| field.random(rng)).collect();
        c.push(field.one());
        let f = Poly::from_elems(field, &c).unwrap();
        if f.is_squarefree() {
            return f;
        }
    }
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[v.len() / 2]
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let q: u64 = args.get(1).map_or(101, |s| s.parse().unwrap());
    let sizes: Vec<usize> =
        args.get(2).map_or(vec![128, 256, 512], |s| s.split(',').map(|x| x.parse().unwrap()).collect());
    let trials: usize = args.get(3).map_or(3, |s| s.parse().unwrap());
    let field = Field::prime(q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut prev: Option<f64> = None;
    println!("n,drinfeld_s,cz_s,ratio_prev");
    for &n in &sizes {
        let (mut dr, mut cz) = (Vec::new(), Vec::new());
        for t in 0..trials {
            let f = random_squarefree(&field, n, &mut rng);
            let start = Instant::now();
            let a = factor_randomized(&f, n, t as u64).unwrap();
            dr.push(start.elapsed().as_secs_f64());
            let start = Instant::now();
            let b = baseline::factor_full(&f, t as u64).unwrap();
            cz.push(start.elapsed().as_secs_f64());
            assert_eq!(a, b);
        }
        let (d, c) = (median(dr), median(cz));
        let ratio = prev.map_or(String::new(), |p| format!("{:.2}", d / p));
        println!("{n},{d:.4},{c:.4},{ratio}");
        prev = Some(d);
    }
}

//! For pairs of random irreducibles, the number N of a in F_q for which
//! exactly one is supersingular, against q/2 and 2(k-1)sqrt(q).
//!
//! cargo run --release --example supersingular_density -- 101 2 10

use drinfeld_factor::baseline::random_equal_degree;
use drinfeld_factor::{lift_at, CmModule, Field};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let q: u64 = args.get(1).map_or(101, |s| s.parse().expect("q"));
    let k: usize = args.get(2).map_or(2, |s| s.parse().expect("k"));
    let pairs: usize = args.get(3).map_or(10, |s| s.parse().expect("pairs"));
    let field = Field::prime(q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let bound = 2.0 * (k as f64 - 1.0) * (q as f64).sqrt();
    println!("p1,p2,N,deviation,bound");
    for _ in 0..pairs {
        let v = random_equal_degree(&field, k, 2, &mut rng);
        let n = field
            .elements()
            .filter(|a| {
                let phi = CmModule::new(a.clone());
                lift_at(&phi, &v[0], k).unwrap().is_zero() != lift_at(&phi, &v[1], k).unwrap().is_zero()
            })
            .count();
        println!("{},{},{n},{:.1},{bound:.2}", v[0], v[1], n as f64 - q as f64 / 2.0);
    }
}

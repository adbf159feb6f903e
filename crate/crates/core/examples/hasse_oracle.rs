//! The recurrence lift r_k against the Hasse invariant read off the skew
//! polynomial image of p, and the run of r_j mod p past j = deg p.

use drinfeld_factor::baseline::random_irreducible;
use drinfeld_factor::{hasse_direct, CmModule, Field, FrobTables, HasseSeq};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for q in [5u64, 7, 13] {
        let field = Field::prime(q).unwrap();
        for k in 2..=4 {
            let p = random_irreducible(&field, k, &mut rng);
            let phi = CmModule::new(field.random(&mut rng));
            let tables = FrobTables::build(&phi, &p, k + 4).unwrap();
            let mut seq = HasseSeq::new(&tables);
            let mut run = Vec::new();
            while seq.index() < k + 5 {
                run.push(seq.step().unwrap().value().to_string());
            }
            let direct = hasse_direct(&phi, &p).unwrap();
            let lifted = &run[k - 2];
            let state = if direct.is_zero() { "supersingular" } else { "ordinary" };
            println!("q={q} a={} p={p}: h = {} ({state}), r_{k} = {lifted}", phi.a(), direct.value());
            println!("    r_2..r_{}: {}", k + 5, run.join(" | "));
        }
    }
}

use std::io::Write;
use std::time::Instant;

use clap::Args;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{usage, Algo, Failure, FieldArgs};
use crate::baseline::{self, random_equal_degree, random_factored};
use crate::error::Result;
use crate::factor::{factor_edf_deterministic, factor_randomized};
use crate::field::Field;
use crate::poly::Poly;

#[derive(Args, Debug)]
pub(crate) struct BenchArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Comma-separated degrees.
    #[arg(long, value_delimiter = ',', default_values_t = [64usize, 128, 256])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Single algorithm; default runs drinfeld-random and cz.
    #[arg(long, value_enum)]
    algo: Option<Algo>,
    /// Factor degree of the equal-degree inputs used for drinfeld-edf.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Product of the parts and the parts themselves.
pub(crate) fn bench_input(field: &Field, n: usize, seed: u64) -> (Poly, Vec<Poly>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = random_factored(field, n, &mut rng);
    (parts.iter().fold(Poly::one(field), |a, b| &a * b), parts)
}

fn time_one(algo: Algo, field: &Field, n: usize, k: usize, seed: u64) -> Result<f64> {
    let (f, expected) = match algo {
        Algo::DrinfeldEdf => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let parts = random_equal_degree(field, k, n / k, &mut rng);
            (parts.iter().fold(Poly::one(field), |a, b| &a * b), parts)
        }
        _ => bench_input(field, n, seed),
    };
    let start = Instant::now();
    let fs = match algo {
        Algo::DrinfeldRandom => factor_randomized(&f, n, seed)?,
        Algo::Cz => baseline::factor_full(&f, seed)?,
        Algo::DrinfeldEdf => factor_edf_deterministic(&f, k)?,
    };
    let t = start.elapsed().as_secs_f64();
    if fs.len() != expected.len() {
        return Err(crate::Error::Integrity(format!(
            "{} returned {} factors, expected {}",
            algo.name(),
            fs.len(),
            expected.len()
        )));
    }
    Ok(t)
}

pub(crate) fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

pub(crate) fn run(a: &BenchArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let field = a.field.field()?;
    if a.trials == 0 {
        return Err(usage("--trials must be positive"));
    }
    let algos = match a.algo {
        Some(x) => vec![x],
        None => vec![Algo::DrinfeldRandom, Algo::Cz],
    };
    if algos.contains(&Algo::DrinfeldEdf) {
        if !field.is_prime_field() {
            return Err(usage("drinfeld-edf requires prime q"));
        }
        if a.k < 2 || a.sizes.iter().any(|n| n % a.k != 0) {
            return Err(usage("drinfeld-edf needs k >= 2 dividing every size"));
        }
    }
    writeln!(out, "algo,q,n,trials,median_s,min_s,max_s")?;
    for &n in &a.sizes {
        if n == 0 {
            return Err(usage("sizes must be positive"));
        }
        for &algo in &algos {
            let times = (0..a.trials)
                .map(|t| time_one(algo, &field, n, a.k, a.seed.wrapping_add(t as u64)))
                .collect::<Result<Vec<f64>>>()?;
            let (lo, hi) = times.iter().fold((f64::MAX, 0f64), |(l, h), &t| (l.min(t), h.max(t)));
            writeln!(out, "{},{},{n},{},{:.6},{lo:.6},{hi:.6}", algo.name(), field.q(), a.trials, median(times))?;
        }
    }
    Ok(())
}

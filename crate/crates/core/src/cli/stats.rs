use std::io::Write;

use clap::{Args, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{csv_field, usage, Failure, FieldArgs};
use crate::baseline::{self, random_equal_degree};
use crate::cm::CmModule;
use crate::factor::first_split_index;
use crate::field::Field;
use crate::hasse::lift_at;
use crate::poly::Poly;

const DENSITY_MAX_Q: u64 = 10_000;
const STOPPING_MAX_Q: u64 = 500;
const STOPPING_MAX_PAIRS: usize = 100_000;

#[derive(Subcommand, Debug)]
pub(crate) enum StatsCommand {
    /// Count the a in F_q for which exactly one of two primes is supersingular.
    Density(DensityArgs),
    /// First splitting index of the deterministic sweep over pairs of primes.
    StoppingTime(StoppingArgs),
}

#[derive(Args, Debug)]
pub(crate) struct DensityArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Degree of the random primes.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Number of random pairs.
    #[arg(long, default_value_t = 20)]
    pairs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, requires = "p2")]
    p1: Option<String>,
    #[arg(long, requires = "p1")]
    p2: Option<String>,
}

#[derive(Args, Debug)]
pub(crate) struct StoppingArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Degree of the primes; must exceed 1.
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Sample this many random pairs instead of all pairs.
    #[arg(long)]
    pairs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, requires = "p2")]
    p1: Option<String>,
    #[arg(long, requires = "p1")]
    p2: Option<String>,
}

pub(crate) fn run(cmd: &StatsCommand, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        StatsCommand::Density(a) => density(a, out),
        StatsCommand::StoppingTime(a) => stopping_time(a, out),
    }
}

fn given_pair(field: &Field, p1: &str, p2: &str, degree: usize) -> Result<(Poly, Poly), Failure> {
    let a = Poly::parse(field, p1)?.monic()?;
    let b = Poly::parse(field, p2)?.monic()?;
    for p in [&a, &b] {
        if !baseline::is_irreducible(p) || p.degree() != Some(degree) {
            return Err(usage(format!("{p} is not an irreducible of degree {degree}")));
        }
    }
    if a == b {
        return Err(usage("the two primes must be distinct"));
    }
    Ok((a, b))
}

/// Supersingular at `p` for the CM module with parameter `a`.
fn supersingular(a: u64, field: &Field, p: &Poly) -> crate::Result<bool> {
    let phi = CmModule::new(field.element(a));
    Ok(lift_at(&phi, p, p.degree().unwrap_or(0))?.is_zero())
}

/// Number of `a` with exactly one of `p1`, `p2` supersingular.
pub(crate) fn exactly_one_count(field: &Field, p1: &Poly, p2: &Poly) -> crate::Result<u64> {
    let mut n = 0;
    for a in 0..field.q() {
        if supersingular(a, field, p1)? != supersingular(a, field, p2)? {
            n += 1;
        }
    }
    Ok(n)
}

fn density(a: &DensityArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = a.field.field()?;
    let q = field.q();
    if q > DENSITY_MAX_Q {
        return Err(usage(format!("density needs q <= {DENSITY_MAX_Q}, got {q}")));
    }
    if a.k < 2 {
        return Err(usage("prime degree k must be at least 2"));
    }
    let pairs = match (&a.p1, &a.p2) {
        (Some(p1), Some(p2)) => vec![given_pair(&field, p1, p2, a.k)?],
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            (0..a.pairs)
                .map(|_| {
                    let v = random_equal_degree(&field, a.k, 2, &mut rng);
                    (v[0].clone(), v[1].clone())
                })
                .collect()
        }
    };
    let bound = 2.0 * (a.k as f64 - 1.0) * (q as f64).sqrt();
    writeln!(out, "q,k,p1,p2,N,q_half,bound,within_bound")?;
    for (p1, p2) in pairs {
        let n = exactly_one_count(&field, &p1, &p2)?;
        let within = (n as f64 - q as f64 / 2.0).abs() <= bound;
        writeln!(
            out,
            "{q},{},{},{},{n},{},{bound:.3},{within}",
            a.k,
            csv_field(&p1.to_string()),
            csv_field(&p2.to_string()),
            q as f64 / 2.0
        )?;
    }
    Ok(())
}

/// All monic irreducibles of degree `d`, in enumeration order.
pub(crate) fn all_irreducibles(field: &Field, d: usize) -> Vec<Poly> {
    let q = field.q();
    let count = q.pow(d as u32);
    (0..count)
        .map(|mut n| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(field.element(n % q));
                n /= q;
            }
            c.push(field.one());
            Poly::from_elems(field, &c).expect("same field")
        })
        .filter(baseline::is_irreducible)
        .collect()
}

fn stopping_time(a: &StoppingArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = a.field.field()?;
    let q = field.q();
    if !field.is_prime_field() {
        return Err(usage("stopping-time requires prime q"));
    }
    if q > STOPPING_MAX_Q {
        return Err(usage(format!("stopping-time needs q <= {STOPPING_MAX_Q}, got {q}")));
    }
    if a.d < 2 {
        return Err(usage("prime degree d must exceed 1"));
    }
    let pairs: Vec<(Poly, Poly)> = match (&a.p1, &a.p2, a.pairs) {
        (Some(p1), Some(p2), _) => vec![given_pair(&field, p1, p2, a.d)?],
        (_, _, Some(count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            (0..count)
                .map(|_| {
                    let v = random_equal_degree(&field, a.d, 2, &mut rng);
                    (v[0].clone(), v[1].clone())
                })
                .collect()
        }
        _ => {
            let primes = all_irreducibles(&field, a.d);
            let total = primes.len() * primes.len().saturating_sub(1) / 2;
            if total > STOPPING_MAX_PAIRS {
                return Err(usage(format!("{total} pairs is too many for exhaustion; use --pairs")));
            }
            let mut v = Vec::with_capacity(total);
            for i in 0..primes.len() {
                for j in i + 1..primes.len() {
                    v.push((primes[i].clone(), primes[j].clone()));
                }
            }
            v
        }
    };
    let bound = 2.0 * a.d as f64 * (q as f64).sqrt() * (q as f64).ln();
    let mut max_index = 0u64;
    let mut sum = 0u64;
    let mut unsplit = 0usize;
    for (p1, p2) in &pairs {
        match first_split_index(&(p1 * p2), a.d)? {
            Some(i) => {
                max_index = max_index.max(i);
                sum += i;
            }
            None => unsplit += 1,
        }
    }
    let split = pairs.len() - unsplit;
    let mean = if split > 0 { sum as f64 / split as f64 } else { f64::NAN };
    let within = unsplit == 0 && (max_index as f64) < bound;
    writeln!(out, "q,d,pairs,unsplit,max_index,mean_index,bound,within_bound")?;
    writeln!(out, "{q},{},{},{unsplit},{max_index},{mean:.3},{bound:.3},{within}", a.d, pairs.len())?;
    Ok(())
}

use std::io::Write;

use clap::Args;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Failure, EXIT_INTEGRITY};
use crate::baseline::{self, random_equal_degree, random_factored, random_irreducible};
use crate::cm::CmModule;
use crate::factor::{factor_edf_deterministic, factor_randomized, lift_factor_with_degree, FactorSet};
use crate::field::Field;
use crate::hasse::lift_at;
use crate::poly::Poly;
use crate::skew::hasse_direct;

#[derive(Args, Debug)]
pub(crate) struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn fixture(_: &mut ChaCha8Rng) -> Result<(), String> {
    let f5 = Field::prime(5).map_err(|e| e.to_string())?;
    let f = Poly::from_ints(&f5, &[2, 2, 3, 1, 1]);
    let phi = CmModule::new(f5.zero());
    let r1 = lift_at(&phi, &Poly::from_ints(&f5, &[2, 0, 1]), 2).map_err(|e| e.to_string())?;
    let r2 = lift_at(&phi, &Poly::from_ints(&f5, &[1, 1, 1]), 2).map_err(|e| e.to_string())?;
    let fs = factor_randomized(&f, 4, 1).map_err(|e| e.to_string())?;
    let ok = r1.is_zero() && r2.value() == &Poly::from_ints(&f5, &[2, 2]) && fs.to_string() == "x^2+2\nx^2+x+1\n";
    ok.then_some(()).ok_or_else(|| format!("got {fs:?}, r2 = {r1:?}, {r2:?}"))
}

fn deligne(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for q in [5u64, 7, 11] {
        let field = Field::prime(q).unwrap();
        for k in 2..=4 {
            let p = random_irreducible(&field, k, rng);
            let phi = CmModule::new(field.random(rng));
            let lifted = lift_at(&phi, &p, k).map_err(|e| e.to_string())?;
            let direct = hasse_direct(&phi, &p).map_err(|e| e.to_string())?;
            if lifted != direct {
                return Err(format!("q={q} p={p}: {lifted:?} != {direct:?}"));
            }
        }
    }
    Ok(())
}

fn character(_: &mut ChaCha8Rng) -> Result<(), String> {
    let f7 = Field::prime(7).unwrap();
    for n in 0..49u64 {
        let p = Poly::from_u64s(&f7, &[n % 7, n / 7, 1]);
        if !baseline::is_irreducible(&p) {
            continue;
        }
        for a in f7.elements() {
            let ss = hasse_direct(&CmModule::new(a.clone()), &p).map_err(|e| e.to_string())?.is_zero();
            let chi = p.eval(&a).unwrap().quadratic_character();
            if ss != (chi == -1) {
                return Err(format!("a={a} p={p}"));
            }
        }
    }
    Ok(())
}

fn randomized_vs_baseline(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for field in [Field::prime(13).unwrap(), Field::prime(101).unwrap(), Field::extension(5, 2).unwrap()] {
        for n in [4, 12, 30] {
            let parts = random_factored(&field, n, rng);
            let f = parts.iter().fold(Poly::one(&field), |a, b| &a * b);
            let fs = factor_randomized(&f, n, rand::Rng::gen(rng)).map_err(|e| e.to_string())?;
            if fs != FactorSet::from_squarefree(&field, parts) {
                return Err(format!("mismatch on {f}"));
            }
        }
    }
    Ok(())
}

fn deterministic(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f31 = Field::prime(31).unwrap();
    let parts = random_equal_degree(&f31, 3, 4, rng);
    let f = parts.iter().fold(Poly::one(&f31), |a, b| &a * b);
    let first = factor_edf_deterministic(&f, 3).map_err(|e| e.to_string())?;
    let second = factor_edf_deterministic(&f, 3).map_err(|e| e.to_string())?;
    (first == second && first == FactorSet::from_squarefree(&f31, parts)).then_some(()).ok_or_else(|| format!("{f}"))
}

fn lift(_: &mut ChaCha8Rng) -> Result<(), String> {
    let f3 = Field::prime(3).unwrap();
    let f = Poly::from_ints(&f3, &[1, 0, 1]);
    let fs = lift_factor_with_degree(&f, 2, 0).map_err(|e| e.to_string())?;
    (fs.factors() == [(f.clone(), 1)]).then_some(()).ok_or_else(|| format!("{fs:?}"))
}

const CHECKS: [(&str, Check); 6] = [
    ("fixture-q5", fixture),
    ("deligne-congruence", deligne),
    ("character-criterion-q7", character),
    ("randomized-vs-baseline", randomized_vs_baseline),
    ("deterministic-edf", deterministic),
    ("small-field-lift", lift),
];

pub(crate) fn run(a: &SelftestArgs, out: &mut dyn Write) -> Result<(), Failure> {
    log::set_max_level(log::LevelFilter::Error);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut failed = 0;
    for (name, check) in CHECKS {
        match check(&mut rng) {
            Ok(()) => writeln!(out, "ok {name}")?,
            Err(detail) => {
                failed += 1;
                writeln!(out, "FAIL {name}: {detail}")?;
            }
        }
    }
    if failed > 0 {
        return Err(Failure { code: EXIT_INTEGRITY, message: format!("{failed} selftest check(s) failed") });
    }
    Ok(())
}

//! Command-line front end: `factor`, `stats`, `bench`, `selftest`.
//!
//! A first argument that is not a subcommand is treated as `factor`, so
//! `drinfeld-factor --p 5 "x^2+2"` works. Exit codes: 0 ok, 2 usage, 3
//! integrity.

mod bench;
mod selftest;
mod stats;

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::baseline;
use crate::cm::CmConstruction;
use crate::error::Error;
use crate::factor::{factor_with, verify_factorization, Algorithm, FactorConfig, RandomizedOptions};
use crate::field::Field;
use crate::poly::Poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "drinfeld-factor", version, about = "Polynomial factorization over F_q with CM Drinfeld modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor one polynomial and print its irreducible factors.
    Factor(FactorArgs),
    /// Supersingular density and stopping-time experiments (CSV).
    #[command(subcommand)]
    Stats(stats::StatsCommand),
    /// Median running time per algorithm and degree (CSV).
    Bench(bench::BenchArgs),
    /// Run the built-in invariant checks.
    Selftest(selftest::SelftestArgs),
}

#[derive(Args, Debug, Clone)]
pub(crate) struct FieldArgs {
    /// Characteristic, an odd prime.
    #[arg(long)]
    pub p: u64,
    /// Extension degree e, so q = p^e.
    #[arg(long = "ext-degree", default_value_t = 1)]
    pub ext_degree: usize,
}

impl FieldArgs {
    pub fn field(&self) -> crate::Result<Field> {
        if self.ext_degree == 1 {
            Field::prime(self.p)
        } else {
            Field::extension(self.p, self.ext_degree)
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Algo {
    DrinfeldRandom,
    DrinfeldEdf,
    Cz,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::DrinfeldRandom => "drinfeld-random",
            Algo::DrinfeldEdf => "drinfeld-edf",
            Algo::Cz => "cz",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Construction {
    Squared,
    Plain,
}

impl From<Construction> for CmConstruction {
    fn from(c: Construction) -> Self {
        match c {
            Construction::Squared => CmConstruction::Squared,
            Construction::Plain => CmConstruction::Plain,
        }
    }
}

#[derive(Args, Debug)]
struct FactorArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum, default_value_t = Algo::DrinfeldRandom)]
    algo: Algo,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Only split off factors of degree at most m.
    #[arg(long)]
    m: Option<usize>,
    /// Equal-degree promise for drinfeld-edf.
    #[arg(long)]
    k: Option<usize>,
    /// Run the splitting pass exactly as stated, without the working-polynomial update.
    #[arg(long = "literal-step4")]
    literal_step4: bool,
    #[arg(long = "no-verify")]
    no_verify: bool,
    #[arg(long, value_enum, default_value_t = Construction::Squared)]
    construction: Construction,
    /// Canonical text form (`x^2+3*x+1`) or ascending coefficients (`1,3,1`).
    poly: String,
}

/// Failure carrying its exit code.
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_integrity() { EXIT_INTEGRITY } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

pub(crate) fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

const SUBCOMMANDS: [&str; 5] = ["factor", "stats", "bench", "selftest", "help"];

fn normalize(args: Vec<String>) -> Vec<String> {
    let mut args = args;
    if args.is_empty() {
        args.push("drinfeld-factor".into());
    }
    match args.get(1).map(String::as_str) {
        None | Some("-h" | "--help" | "-V" | "--version") => {}
        Some(first) if SUBCOMMANDS.contains(&first) => {}
        Some(_) => args.insert(1, "factor".into()),
    }
    args
}

fn init_logging() {
    let _ = env_logger::Builder::new()
        .filter_level(log::LevelFilter::Warn)
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    init_logging();
    let cli = match Cli::try_parse_from(normalize(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Factor(a) => cmd_factor(&a, out),
        Command::Stats(s) => stats::run(&s, out),
        Command::Bench(b) => bench::run(&b, out),
        Command::Selftest(s) => selftest::run(&s, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn cmd_factor(a: &FactorArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = a.field.field()?;
    let f = Poly::parse(&field, &a.poly)?;
    if f.is_constant() {
        return Err(Error::ConstantInput.into());
    }
    let algorithm = match a.algo {
        Algo::DrinfeldRandom => Algorithm::DrinfeldRandom,
        Algo::Cz => Algorithm::CantorZassenhaus,
        Algo::DrinfeldEdf => {
            let k = a.k.ok_or_else(|| usage("drinfeld-edf requires --k"))?;
            Algorithm::DrinfeldEdf { k }
        }
    };
    if a.m.is_some() && a.algo == Algo::DrinfeldEdf {
        return Err(usage("--m applies to drinfeld-random and cz only"));
    }
    let config = FactorConfig {
        algorithm,
        seed: a.seed,
        degree_bound: a.m,
        randomized: RandomizedOptions {
            literal_step4: a.literal_step4,
            construction: a.construction.into(),
            ..RandomizedOptions::default()
        },
    };
    let start = Instant::now();
    let fs = factor_with(&f, &config)?;
    let elapsed = start.elapsed();
    if !a.no_verify {
        let ok = if fs.is_complete() {
            verify_factorization(&f, &fs)
        } else {
            fs.product() == f.monic()? && fs.factors().iter().all(|(p, _)| baseline::is_irreducible(p))
        };
        if !ok {
            return Err(Failure {
                code: EXIT_INTEGRITY,
                message: "verification failed: factors do not reproduce the input".into(),
            });
        }
    }
    write!(out, "{fs}")?;
    if !fs.is_complete() {
        writeln!(out, "# unfactored {}", fs.unfactored())?;
    }
    writeln!(out, "# seed={} algo={} time_ms={:.3}", a.seed, a.algo.name(), elapsed.as_secs_f64() * 1e3)?;
    Ok(())
}

/// RFC 4180 field quoting.
pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

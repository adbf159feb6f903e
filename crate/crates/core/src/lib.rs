//! Factorization of polynomials over finite fields of odd characteristic with
//! rank-2 Drinfeld modules that have complex multiplication.
//!
//! The randomized splitter draws a module `x -> x + g τ + Δ τ^2` with CM by
//! `sqrt(x - a)`, and sweeps `k = 2, 3, ...` tracking the Hasse-invariant lift
//! `r_k mod f`: each degree-`k` prime of `f` is either supersingular
//! (divides `r_k`) or ordinary, and the two classes are separated by a gcd.
//!
//! ```
//! use drinfeld_factor::{Field, Poly, factor_randomized};
//!
//! let f5 = Field::prime(5).unwrap();
//! let f = Poly::parse(&f5, "x^4+x^3+3*x^2+2*x+2").unwrap();
//! let fs = factor_randomized(&f, 4, 1).unwrap();
//! assert_eq!(fs.to_string(), "x^2+2\nx^2+x+1\n");
//! ```

pub mod baseline;
pub mod cli;
pub mod cm;
pub mod error;
pub mod factor;
pub mod field;
pub mod hasse;
pub mod poly;
pub mod skew;

pub use cm::{check_good_reduction, CmConstruction, CmModule};
pub use error::{Error, Result};
pub use factor::{
    factor, factor_edf_deterministic, factor_randomized, factor_with, lift_factor_small_q, verify_factorization,
    Algorithm, FactorConfig, FactorSet,
};
pub use field::{Field, FieldElem};
pub use hasse::{lift_at, FrobTables, HasseSeq};
pub use poly::{find_roots, Poly, Residue, ResidueRing, RootMode};
pub use skew::{drinfeld_image, hasse_direct, skew_mul, SkewPoly};

//! Factorization with rank-2 Drinfeld modules with complex multiplication:
//! the randomized splitter, the deterministic equal-degree splitter, and the
//! small-field lift.

mod deterministic;
mod lift;
mod randomized;

use std::fmt;

use crate::baseline;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

pub use deterministic::{factor_edf_deterministic, first_split_index};
pub use lift::{lift_degree, lift_factor_small_q, lift_factor_with_degree};
pub use randomized::{factor_randomized, factor_randomized_with, split_once, RandomizedOptions, SplitOutcome};

/// Monic irreducible factors with multiplicities, in canonical order.
///
/// `unfactored` is the part of the input left unsplit (only nonzero degree
/// when a degree bound below `deg f` was requested); the product of the
/// factors times `unfactored` is the monic input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorSet {
    field: Field,
    factors: Vec<(Poly, usize)>,
    unfactored: Poly,
}

impl FactorSet {
    /// Sorts canonically and merges repeated factors.
    pub fn new(field: &Field, factors: Vec<(Poly, usize)>) -> FactorSet {
        let mut factors = factors;
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let mut merged: Vec<(Poly, usize)> = Vec::with_capacity(factors.len());
        for (p, m) in factors {
            match merged.last_mut() {
                Some((last, lm)) if *last == p => *lm += m,
                _ => merged.push((p, m)),
            }
        }
        FactorSet { field: field.clone(), factors: merged, unfactored: Poly::one(field) }
    }

    pub fn from_squarefree(field: &Field, factors: Vec<Poly>) -> FactorSet {
        FactorSet::new(field, factors.into_iter().map(|p| (p, 1)).collect())
    }

    pub(crate) fn with_unfactored(mut self, rest: Poly) -> FactorSet {
        self.unfactored = rest;
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn factors(&self) -> &[(Poly, usize)] {
        &self.factors
    }

    pub fn unfactored(&self) -> &Poly {
        &self.unfactored
    }

    pub fn is_complete(&self) -> bool {
        self.unfactored.is_one()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of all factors with multiplicity, times the unfactored part.
    pub fn product(&self) -> Poly {
        self.factors.iter().fold(self.unfactored.clone(), |acc, (p, m)| &acc * &p.pow(*m as u64))
    }
}

impl fmt::Display for FactorSet {
    /// One factor per line, `^m` suffix when the multiplicity exceeds one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, m) in &self.factors {
            if *m > 1 {
                writeln!(f, "({p})^{m}")?;
            } else {
                writeln!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// True iff the factors multiply back to `f` (up to scaling to monic) and
/// each passes the baseline irreducibility test.
pub fn verify_factorization(f: &Poly, fs: &FactorSet) -> bool {
    let Ok(f) = f.monic() else { return false };
    fs.is_complete()
        && fs.field() == f.field()
        && fs.product() == f
        && fs.factors().iter().all(|(p, _)| p.is_monic() && baseline::is_irreducible(p))
}

/// Which splitter the one-shot [`factor`] entry point uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Randomized CM splitter on every squarefree part.
    DrinfeldRandom,
    /// Deterministic sweep; requires a prime field and an equal-degree
    /// promise `k` on every squarefree part (after root removal).
    DrinfeldEdf { k: usize },
    /// Distinct-degree plus Cantor-Zassenhaus.
    CantorZassenhaus,
}

/// Settings for [`factor_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Only factors of degree at most this are split off (randomized only).
    pub degree_bound: Option<usize>,
    pub randomized: RandomizedOptions,
}

impl FactorConfig {
    pub fn new(algorithm: Algorithm, seed: u64) -> FactorConfig {
        FactorConfig { algorithm, seed, degree_bound: None, randomized: RandomizedOptions::default() }
    }
}

/// Factor an arbitrary nonconstant polynomial: squarefree decomposition,
/// then the chosen splitter on each part, multiplicities reassembled.
pub fn factor(f: &Poly, algorithm: Algorithm, seed: u64) -> Result<FactorSet> {
    factor_with(f, &FactorConfig::new(algorithm, seed))
}

pub fn factor_with(f: &Poly, config: &FactorConfig) -> Result<FactorSet> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if config.algorithm == Algorithm::CantorZassenhaus && config.degree_bound.is_none() {
        return baseline::factor_full(f, config.seed);
    }
    let mut factors = Vec::new();
    let mut unfactored = Poly::one(f.field());
    for (i, (g, m)) in f.squarefree_decomposition()?.into_iter().enumerate() {
        let part_seed = config.seed.wrapping_add(i as u64);
        let n = g.degree().unwrap_or(0);
        let bound = config.degree_bound.map_or(n, |b| b.clamp(1, n));
        let parts = match config.algorithm {
            Algorithm::DrinfeldRandom => randomized::factor_randomized_with(&g, bound, part_seed, config.randomized)?,
            Algorithm::DrinfeldEdf { k } => deterministic::factor_with_root_removal(&g, k)?,
            Algorithm::CantorZassenhaus => {
                let mut out = Vec::new();
                let mut rest = Poly::one(f.field());
                for (k, h) in baseline::ddf(&g)? {
                    if k <= bound {
                        out.extend(baseline::cz_edf(&h, k, part_seed)?);
                    } else {
                        rest = &rest * &h;
                    }
                }
                FactorSet::from_squarefree(f.field(), out).with_unfactored(rest)
            }
        };
        factors.extend(parts.factors().iter().map(|(p, _)| (p.clone(), m)));
        unfactored = &unfactored * &parts.unfactored().pow(m as u64);
    }
    let fs = FactorSet::new(f.field(), factors).with_unfactored(unfactored);
    debug_assert!(!fs.is_complete() || verify_factorization(f, &fs));
    Ok(fs)
}

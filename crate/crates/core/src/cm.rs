//! Rank-2 Drinfeld modules over `A = F_q[x]` with complex multiplication by
//! `F_q(x)(sqrt(x - a))`.
//!
//! With `d = x - a` and `u = d^((q-1)/2)` the module is `x -> x + g τ + Δ τ^2`
//! where
//!
//! ```text
//!   Δ = J = d^((q+1)/2) (1 + u)^(q+1)
//!   g = d (1 + u)^2                     (CmConstruction::Squared, default)
//!   g = d (1 + u)                       (CmConstruction::Plain)
//! ```
//!
//! `J` is the J-invariant of the module `g' = sqrt(d) + sqrt(d)^q, Δ' = 1`,
//! which has CM by `sqrt(d)`. The squared form satisfies `g^(q+1) = J^2` and
//! `Δ = J`, so its J-invariant is `J` and it is isomorphic to that module over
//! an algebraic closure. The `Plain` form has J-invariant `d^((q+1)/2)`
//! instead; its supersingular primes do not follow the quadratic-character
//! rule, but it is still a Drinfeld module over `A` (Deligne's congruence
//! holds for it) and it is kept for comparison.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::{Poly, Residue, ResidueRing};

/// Largest `q` for which the explicit expansions of `g` and `Δ` are built;
/// `deg Δ = (q^2 + q)/2`.
pub const MAX_EXPANSION_Q: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CmConstruction {
    /// `g = d (1 + d^((q-1)/2))^2`: J-invariant equal to `J`, CM by `sqrt(d)`.
    #[default]
    Squared,
    /// `g = d (1 + d^((q-1)/2))`.
    Plain,
}

/// A rank-2 Drinfeld module with CM parameter `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmModule {
    a: FieldElem,
    d: Poly,
    construction: CmConstruction,
}

impl CmModule {
    pub fn new(a: FieldElem) -> CmModule {
        CmModule::with_construction(a, CmConstruction::Squared)
    }

    pub fn with_construction(a: FieldElem, construction: CmConstruction) -> CmModule {
        let d = Poly::linear(&a);
        CmModule { a, d, construction }
    }

    pub fn a(&self) -> &FieldElem {
        &self.a
    }

    /// The discriminant `x - a`.
    pub fn d(&self) -> &Poly {
        &self.d
    }

    pub fn construction(&self) -> CmConstruction {
        self.construction
    }

    fn q(&self) -> u64 {
        self.a.field().q()
    }

    /// `(g mod f, Δ mod f)` by modular powering, without expanding `g` or `Δ`.
    pub fn reduce_mod(&self, ring: &Arc<ResidueRing>) -> (Residue, Residue) {
        let q = self.q();
        let d = ring.reduce(&self.d);
        let u = d.mod_pow((q - 1) / 2);
        let one_u = &ring.one() + &u;
        let g = match self.construction {
            CmConstruction::Squared => &d * &one_u.square(),
            CmConstruction::Plain => &d * &one_u,
        };
        // d^((q+1)/2) = d u, and (1 + u)^(q+1) = (1 + u)^q (1 + u)
        let delta = &(&d * &u) * &(&one_u.frobenius_q() * &one_u);
        (g, delta)
    }

    pub fn g_mod(&self, ring: &Arc<ResidueRing>) -> Residue {
        self.reduce_mod(ring).0
    }

    pub fn delta_mod(&self, ring: &Arc<ResidueRing>) -> Residue {
        self.reduce_mod(ring).1
    }

    fn check_expansion(&self) -> Result<()> {
        if self.q() > MAX_EXPANSION_Q {
            return Err(Error::Usage(format!(
                "explicit expansion limited to q <= {MAX_EXPANSION_Q}, got q = {}",
                self.q()
            )));
        }
        Ok(())
    }

    /// `1 + d^((q-1)/2)` expanded.
    fn one_plus_u(&self) -> Poly {
        let field = self.a.field();
        &Poly::one(field) + &self.d.pow((self.q() - 1) / 2)
    }

    /// `g` as an explicit polynomial.
    pub fn g(&self) -> Result<Poly> {
        self.check_expansion()?;
        let w = self.one_plus_u();
        Ok(match self.construction {
            CmConstruction::Squared => &self.d * &(&w * &w),
            CmConstruction::Plain => &self.d * &w,
        })
    }

    /// `Δ = d^((q+1)/2) (1 + d^((q-1)/2))^(q+1)` as an explicit polynomial.
    pub fn delta(&self) -> Result<Poly> {
        self.check_expansion()?;
        let q = self.q();
        let w = self.one_plus_u();
        Ok(&(&self.d.pow(q.div_ceil(2)) * &frobenius_expand(&w, q)) * &w)
    }

    /// `J = d^((q+1)/2) (1 + d^((q-1)/2))^(q+1)`, after checking the defining
    /// identities `g^(q+1) = J^2` and `Δ = J` exactly.
    pub fn j_invariant(&self) -> Result<Poly> {
        let q = self.q();
        let j = self.delta()?;
        let g = self.g()?;
        let g_pow = &frobenius_expand(&g, q) * &g;
        if g_pow != &j * &j {
            return Err(Error::Integrity(format!(
                "g^(q+1) != J^2 for the {:?} construction at a = {}",
                self.construction, self.a
            )));
        }
        if j.is_zero() {
            return Err(Error::Integrity("J vanishes".into()));
        }
        Ok(j)
    }
}

/// `h^q` for `h` with `F_q` coefficients: substitute `x -> x^q`.
fn frobenius_expand(h: &Poly, q: u64) -> Poly {
    let q = q as usize;
    let mut coeffs = vec![0u64; h.len().saturating_sub(1) * q + 1];
    for (i, &c) in h.coeffs().iter().enumerate() {
        coeffs[i * q] = c;
    }
    Poly::from_raw(h.field().clone(), coeffs)
}

/// `gcd(f, Δ) = 1`, i.e. every prime factor of `f` has good reduction.
pub fn check_good_reduction(phi: &CmModule, f: &Poly) -> bool {
    let Ok(ring) = ResidueRing::new(f) else { return false };
    phi.delta_mod(&ring).gcd_with_modulus().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline;
    use crate::field::Field;

    fn p(field: &Field, c: &[i64]) -> Poly {
        Poly::from_ints(field, c)
    }

    #[test]
    fn plain_construction_examples() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::with_construction(f5.zero(), CmConstruction::Plain);
        assert_eq!(phi.g().unwrap(), p(&f5, &[0, 1, 0, 1]));
        let mut delta = vec![0i64; 16];
        for i in [3, 5, 13, 15] {
            delta[i] = 1;
        }
        assert_eq!(phi.delta().unwrap(), p(&f5, &delta));
        let f3 = Field::prime(3).unwrap();
        let phi = CmModule::with_construction(f3.one(), CmConstruction::Plain);
        assert_eq!(phi.g().unwrap(), p(&f3, &[0, 2, 1]));
    }

    #[test]
    fn squared_construction_examples() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::new(f5.zero());
        // x (1 + x^2)^2
        assert_eq!(phi.g().unwrap(), p(&f5, &[0, 1, 0, 2, 0, 1]));
        // Δ does not depend on the construction
        let plain = CmModule::with_construction(f5.zero(), CmConstruction::Plain);
        assert_eq!(phi.delta().unwrap(), plain.delta().unwrap());
    }

    #[test]
    fn delta_matches_generic_expansion() {
        // oracle: plain repeated multiplication, no x -> x^q shortcut
        for q in [3u64, 5, 7] {
            let field = Field::prime(q).unwrap();
            for a in field.elements() {
                let phi = CmModule::new(a.clone());
                let w = &Poly::one(&field) + &phi.d().pow((q - 1) / 2);
                let mut naive = phi.d().pow(q.div_ceil(2));
                for _ in 0..q + 1 {
                    naive = &naive * &w;
                }
                assert_eq!(phi.delta().unwrap(), naive);
                assert_eq!(phi.delta().unwrap().degree(), Some(((q * q + q) / 2) as usize));
            }
        }
    }

    #[test]
    fn j_invariant_identities() {
        for q in [3u64, 5, 7, 9, 11, 13] {
            let field = if q == 9 { Field::extension(3, 2).unwrap() } else { Field::prime(q).unwrap() };
            for a in field.elements() {
                let phi = CmModule::new(a.clone());
                let j = phi.j_invariant().unwrap();
                assert_eq!(j, phi.delta().unwrap());
                let g = phi.g().unwrap();
                assert_eq!(g.degree(), Some(q as usize));
                let plain = CmModule::with_construction(a, CmConstruction::Plain);
                // deg g = 1 + (q-1)/2 for the plain form; its J-identity fails
                assert_eq!(plain.g().unwrap().degree(), Some(1 + (q as usize - 1) / 2));
                assert!(matches!(plain.j_invariant(), Err(Error::Integrity(_))));
            }
        }
    }

    #[test]
    fn j_invariant_q3_a0() {
        let f3 = Field::prime(3).unwrap();
        let phi = CmModule::new(f3.zero());
        let expected = &p(&f3, &[0, 0, 1]) * &p(&f3, &[1, 1]).pow(4);
        assert_eq!(phi.j_invariant().unwrap(), expected);
        // the plain g = x(1+x) gives g^4 = x^4 (1+x)^4, while J^2 = x^4 (1+x)^8
        let plain = CmModule::with_construction(f3.zero(), CmConstruction::Plain);
        let g = plain.g().unwrap();
        assert_ne!(g.pow(4), &expected * &expected);
    }

    #[test]
    fn reduce_path_matches_expansion() {
        let f7 = Field::prime(7).unwrap();
        let f = p(&f7, &[3, 1, 0, 2, 1]);
        let ring = ResidueRing::new(&f).unwrap();
        for a in f7.elements() {
            for c in [CmConstruction::Squared, CmConstruction::Plain] {
                let phi = CmModule::with_construction(a.clone(), c);
                let (g, delta) = phi.reduce_mod(&ring);
                assert_eq!(g, ring.reduce(&phi.g().unwrap()));
                assert_eq!(delta, ring.reduce(&phi.delta().unwrap()));
            }
        }
    }

    #[test]
    fn good_reduction_examples() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::new(f5.zero());
        assert!(check_good_reduction(&phi, &p(&f5, &[2, 0, 1])));
        assert!(!check_good_reduction(&phi, phi.d()));
        // b = 2: b - a = 2 is a nonsquare mod 5
        assert!(!check_good_reduction(&phi, &p(&f5, &[-2, 1])));
        // b = 1: 1 is a square, x - 1 does not divide Δ
        assert!(check_good_reduction(&phi, &p(&f5, &[-1, 1])));
    }

    #[test]
    fn irreducibles_of_degree_two_have_good_reduction() {
        for q in [3u64, 5, 7, 11, 13] {
            let field = Field::prime(q).unwrap();
            let quads: Vec<Poly> = (0..q * q)
                .map(|n| Poly::from_u64s(&field, &[n % q, n / q, 1]))
                .filter(baseline::is_irreducible)
                .collect();
            for a in field.elements() {
                let phi = CmModule::new(a);
                let delta = phi.delta().unwrap();
                assert!(quads.iter().all(|pq| pq.gcd(&delta).unwrap().is_one()));
            }
        }
    }
}

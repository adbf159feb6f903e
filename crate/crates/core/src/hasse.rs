//! Hasse invariants via the lifting recurrence
//!
//! ```text
//!   r_0 = 1,  r_1 = g,
//!   r_m = g^(q^(m-1)) r_(m-1) - (x^(q^(m-1)) - x) Δ^(q^(m-2)) r_(m-2)
//! ```
//!
//! For every prime `p` of degree `k` with good reduction, `r_k mod p` is the
//! Hasse invariant of the module at `p`; `p` is supersingular iff
//! `p | r_k`, and then `p | r_m` for all `m >= k`.

use std::sync::Arc;

use crate::cm::{check_good_reduction, CmModule};
use crate::error::{Error, Result};
use crate::poly::{Poly, Residue, ResidueRing};

/// `X[i] = x^(q^i)`, `G[i] = g^(q^i)`, `D[i] = Δ^(q^i)` mod `f`, `0 <= i <= m`.
#[derive(Clone, Debug)]
pub struct FrobTables {
    ring: Arc<ResidueRing>,
    x: Vec<Residue>,
    g: Vec<Residue>,
    delta: Vec<Residue>,
}

impl FrobTables {
    /// Requires `f` monic with `gcd(f, Δ) = 1`.
    pub fn build(phi: &CmModule, f: &Poly, m: usize) -> Result<FrobTables> {
        let ring = ResidueRing::new(f)?;
        if !check_good_reduction(phi, f) {
            return Err(Error::BadReduction);
        }
        let (g0, d0) = phi.reduce_mod(&ring);
        let fill = |first: Residue| {
            let mut v = Vec::with_capacity(m + 1);
            v.push(first);
            for i in 1..=m {
                let next = v[i - 1].frobenius_q();
                v.push(next);
            }
            v
        };
        Ok(FrobTables { x: fill(ring.x()), g: fill(g0), delta: fill(d0), ring })
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    /// Largest index covered.
    pub fn bound(&self) -> usize {
        self.x.len() - 1
    }

    pub fn x(&self, i: usize) -> &Residue {
        &self.x[i]
    }

    pub fn g(&self, i: usize) -> &Residue {
        &self.g[i]
    }

    pub fn delta(&self, i: usize) -> &Residue {
        &self.delta[i]
    }
}

/// One step of the recurrence: `r_k` from `r_(k-1)`, `r_(k-2)` and
/// `G[k-1]`, `X[k-1]`, `D[k-2]`.
pub(crate) fn recurrence_step(
    g_prev: &Residue,
    x_prev: &Residue,
    d_prev2: &Residue,
    r_prev: &Residue,
    r_prev2: &Residue,
) -> Residue {
    let x = x_prev.ring().x();
    let shift = &(x_prev - &x) * d_prev2;
    &(g_prev * r_prev) - &(&shift * r_prev2)
}

/// The sequence `r_1, r_2, ...` mod `f`, stepped one index at a time.
#[derive(Clone, Debug)]
pub struct HasseSeq<'a> {
    tables: &'a FrobTables,
    k: usize,
    prev: Residue,
    curr: Residue,
}

impl<'a> HasseSeq<'a> {
    /// Positioned at `k = 1`, `r_1 = g`.
    pub fn new(tables: &'a FrobTables) -> HasseSeq<'a> {
        HasseSeq { tables, k: 1, prev: tables.ring.one(), curr: tables.g[0].clone() }
    }

    pub fn index(&self) -> usize {
        self.k
    }

    pub fn current(&self) -> &Residue {
        &self.curr
    }

    /// Advance to `r_(k+1)`; needs table index `k`.
    pub fn step(&mut self) -> Result<&Residue> {
        let k = self.k;
        if k > self.tables.bound() {
            return Err(Error::TableBound { bound: self.tables.bound(), requested: k + 1 });
        }
        let t = self.tables;
        let next = recurrence_step(&t.g[k], &t.x[k], &t.delta[k - 1], &self.curr, &self.prev);
        self.prev = std::mem::replace(&mut self.curr, next);
        self.k += 1;
        Ok(&self.curr)
    }
}

/// `r_k mod f`.
pub fn lift_at(phi: &CmModule, f: &Poly, k: usize) -> Result<Residue> {
    let tables = FrobTables::build(phi, f, k.saturating_sub(1))?;
    if k == 0 {
        return Ok(tables.ring.one());
    }
    let mut seq = HasseSeq::new(&tables);
    while seq.index() < k {
        seq.step()?;
    }
    Ok(seq.curr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline;
    use crate::cm::CmConstruction;
    use crate::field::Field;
    use crate::skew::hasse_direct;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(field: &Field, c: &[i64]) -> Poly {
        Poly::from_ints(field, c)
    }

    fn random_irreducible(field: &Field, k: usize, rng: &mut ChaCha8Rng) -> Poly {
        loop {
            let mut c: Vec<u64> = (0..k).map(|_| field.random_raw(rng)).collect();
            c.push(1);
            let f = Poly::from_raw(field.clone(), c);
            if baseline::is_irreducible(&f) {
                return f;
            }
        }
    }

    #[test]
    fn table_fixture_q5() {
        let f5 = Field::prime(5).unwrap();
        let f = p(&f5, &[2, 0, 1]);
        let phi = CmModule::with_construction(f5.zero(), CmConstruction::Plain);
        let t = FrobTables::build(&phi, &f, 2).unwrap();
        assert_eq!(t.x(1).value(), &p(&f5, &[0, 4]));
        // g = x^3 + x = x (x^2 + 2) - x
        assert_eq!(t.g(0).value(), &p(&f5, &[0, 4]));
        assert_eq!(t.bound(), 2);
    }

    #[test]
    fn r2_fixture_values() {
        let f5 = Field::prime(5).unwrap();
        for c in [CmConstruction::Squared, CmConstruction::Plain] {
            let phi = CmModule::with_construction(f5.zero(), c);
            assert!(lift_at(&phi, &p(&f5, &[2, 0, 1]), 2).unwrap().is_zero());
            assert_eq!(lift_at(&phi, &p(&f5, &[1, 1, 1]), 2).unwrap().value(), &p(&f5, &[2, 2]));
        }
    }

    #[test]
    fn step_past_bound_fails() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::new(f5.zero());
        let t = FrobTables::build(&phi, &p(&f5, &[1, 1, 1]), 1).unwrap();
        let mut s = HasseSeq::new(&t);
        assert!(s.step().is_ok());
        assert_eq!(s.step().err(), Some(Error::TableBound { bound: 1, requested: 3 }));
    }

    #[test]
    fn bad_reduction_rejected() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::new(f5.zero());
        assert_eq!(lift_at(&phi, &Poly::x(&f5), 1).err(), Some(Error::BadReduction));
    }

    #[test]
    fn deligne_congruence_against_direct_image() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let fields = [
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::extension(3, 2).unwrap(),
            Field::prime(11).unwrap(),
            Field::prime(13).unwrap(),
            Field::extension(5, 2).unwrap(),
        ];
        let mut checked = 0;
        for field in &fields {
            for k in 2..=6 {
                let reps = if field.q() > 11 && k > 4 { 3 } else { 7 };
                for _ in 0..reps {
                    let f = random_irreducible(field, k, &mut rng);
                    for c in [CmConstruction::Squared, CmConstruction::Plain] {
                        let phi = CmModule::with_construction(field.random(&mut rng), c);
                        assert_eq!(lift_at(&phi, &f, k).unwrap(), hasse_direct(&phi, &f).unwrap());
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 200, "{checked}");
    }

    #[test]
    fn supersingular_primes_persist() {
        let f7 = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut seen = 0;
        while seen < 10 {
            let f = random_irreducible(&f7, 2, &mut rng);
            let phi = CmModule::new(f7.random(&mut rng));
            if !check_good_reduction(&phi, &f) {
                continue;
            }
            let t = FrobTables::build(&phi, &f, 8).unwrap();
            let mut s = HasseSeq::new(&t);
            s.step().unwrap();
            if !s.current().is_zero() {
                continue;
            }
            seen += 1;
            for _ in 2..8 {
                assert!(s.step().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn crt_consistency() {
        let f11 = Field::prime(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let p1 = random_irreducible(&f11, 3, &mut rng);
            let p2 = random_irreducible(&f11, 2, &mut rng);
            if p1 == p2 {
                continue;
            }
            let phi = CmModule::new(f11.random(&mut rng));
            let prod = &p1 * &p2;
            for k in 1..5 {
                let r = lift_at(&phi, &prod, k).unwrap();
                let ring1 = ResidueRing::new(&p1).unwrap();
                assert_eq!(r.reduce_to(&ring1), lift_at(&phi, &p1, k).unwrap());
            }
        }
    }

    #[test]
    fn supersingular_matches_character_rule() {
        // p(x) of degree k is supersingular for the squared construction iff
        // χ(p(a)) (-1)^(k(q-1)/2) = -1
        for (q, k) in [(7u64, 2usize), (11, 2), (5, 3), (7, 3)] {
            let field = Field::prime(q).unwrap();
            let half = (q - 1) / 2;
            let irr: Vec<Poly> = (0..q.pow(k as u32))
                .map(|n| {
                    let mut c: Vec<u64> = (0..k).map(|i| n / q.pow(i as u32) % q).collect();
                    c.push(1);
                    Poly::from_raw(field.clone(), c)
                })
                .filter(baseline::is_irreducible)
                .collect();
            for a in field.elements() {
                let phi = CmModule::new(a.clone());
                for f in &irr {
                    let ss = lift_at(&phi, f, k).unwrap().is_zero();
                    let sign = if (k as u64 * half).is_multiple_of(2) { 1 } else { -1 };
                    let chi = f.eval(&a).unwrap().quadratic_character() * sign;
                    assert_eq!(ss, chi == -1, "q={q} a={a} f={f}");
                }
            }
        }
    }
}

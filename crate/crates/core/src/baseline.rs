//! Classical factorization: distinct-degree factorization followed by
//! Cantor-Zassenhaus equal-degree splitting. Independent of the Drinfeld
//! machinery; serves as the oracle and the performance reference.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor::FactorSet;
use crate::field::Field;
use crate::poly::{Poly, Residue, ResidueRing};

fn distinct_primes(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `x^(q^n) = x mod f` and `gcd(x^(q^(n/l)) - x, f) = 1` for
/// every prime `l | n`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Ok(f) = f.monic() else { return false };
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let ring = ResidueRing::new(&f).expect("monic of positive degree");
    let x = ring.x();
    let mut powers: Vec<Residue> = Vec::with_capacity(n + 1);
    powers.push(x.clone());
    for i in 1..=n {
        let next = powers[i - 1].frobenius_q();
        powers.push(next);
    }
    if powers[n] != x {
        return false;
    }
    distinct_primes(n).into_iter().all(|l| (&powers[n / l] - &x).gcd_with_modulus().is_one())
}

/// Distinct-degree factorization of a monic squarefree `f`: pairs `(k, g_k)`
/// where `g_k` is the product of all degree-`k` irreducible factors.
pub fn ddf(f: &Poly) -> Result<Vec<(usize, Poly)>> {
    let mut rest = f.monic()?;
    let mut out = Vec::new();
    let mut h = Poly::x(f.field());
    let mut k = 1;
    while let Some(d) = rest.degree() {
        if d == 0 {
            break;
        }
        if 2 * k > d {
            out.push((d, rest));
            break;
        }
        let ring = ResidueRing::new(&rest)?;
        let hk = ring.reduce(&h).frobenius_q();
        let g = (&hk - &ring.x()).gcd_with_modulus();
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            out.push((k, g));
        }
        h = hk.value().clone();
        k += 1;
    }
    Ok(out)
}

/// `u^((q^k - 1)/2)` in `A/(f)`, computed as the `(q-1)/2` power of the
/// norm-like product `u * u^q * ... * u^(q^(k-1))`.
fn half_power(u: &Residue, k: usize) -> Residue {
    let q = u.ring().field().q();
    let mut t = u.clone();
    let mut acc = u.clone();
    for _ in 1..k {
        t = t.frobenius_q();
        acc = &acc * &t;
    }
    acc.mod_pow((q - 1) / 2)
}

/// Cantor-Zassenhaus splitting of a monic squarefree `f` whose irreducible
/// factors all have degree `k`. Factors returned in canonical order.
pub fn cz_edf(f: &Poly, k: usize, seed: u64) -> Result<Vec<Poly>> {
    if k == 0 {
        return Err(Error::Usage("factor degree must be positive".into()));
    }
    let f = f.monic()?;
    match f.degree() {
        Some(d) if d % k == 0 && d > 0 => {}
        _ => return Err(Error::Usage(format!("degree of {f} is not a positive multiple of {k}"))),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    cz_split(&f, k, &mut rng, &mut out)?;
    out.sort_by(Poly::canonical_cmp);
    Ok(out)
}

fn cz_split(f: &Poly, k: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if n == k {
        out.push(f.clone());
        return Ok(());
    }
    let field = f.field();
    let ring = ResidueRing::new(f)?;
    loop {
        let coeffs: Vec<u64> = (0..n).map(|_| field.random_raw(rng)).collect();
        let u = Poly::from_raw(field.clone(), coeffs);
        if u.is_constant() {
            continue;
        }
        let u = ring.reduce(&u);
        let g = u.gcd_with_modulus();
        let g = if g.is_one() { (&half_power(&u, k) - &ring.one()).gcd_with_modulus() } else { g };
        let d = g.degree().unwrap_or(0);
        if d > 0 && d < n {
            let rest = f.div_exact(&g)?;
            cz_split(&g, k, rng, out)?;
            return cz_split(&rest, k, rng, out);
        }
    }
}

/// Split a monic squarefree polynomial into irreducibles via DDF + CZ.
pub(crate) fn factor_squarefree(f: &Poly, seed: u64) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for (i, (k, g)) in ddf(f)?.into_iter().enumerate() {
        out.extend(cz_edf(&g, k, seed.wrapping_add(i as u64))?);
    }
    out.sort_by(Poly::canonical_cmp);
    Ok(out)
}

/// Complete factorization with multiplicities: squarefree decomposition,
/// then DDF and CZ on each squarefree part.
pub fn factor_full(f: &Poly, seed: u64) -> Result<FactorSet> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let mut factors = Vec::new();
    for (g, m) in f.squarefree_decomposition()? {
        for p in factor_squarefree(&g, seed)? {
            factors.push((p, m));
        }
    }
    Ok(FactorSet::new(f.field(), factors))
}

/// Uniformly random monic irreducible polynomial of degree `k >= 1`, by
/// rejection sampling.
pub fn random_irreducible<R: Rng + ?Sized>(field: &Field, k: usize, rng: &mut R) -> Poly {
    loop {
        let mut c: Vec<u64> = (0..k).map(|_| field.random_raw(rng)).collect();
        c.push(1);
        let f = Poly::from_raw(field.clone(), c);
        if is_irreducible(&f) {
            return f;
        }
    }
}

/// Distinct random monic irreducibles with degrees summing to `n`. Each
/// degree is drawn uniformly from what remains, which mimics the factor
/// degree statistics of a random polynomial of degree `n`.
pub fn random_factored<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        let p = random_irreducible(field, k, rng);
        if !out.contains(&p) {
            out.push(p);
            left -= k;
        }
    }
    out.sort_by(Poly::canonical_cmp);
    out
}

/// `count` distinct random monic irreducibles of degree `k`.
pub fn random_equal_degree<R: Rng + ?Sized>(field: &Field, k: usize, count: usize, rng: &mut R) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    while out.len() < count {
        let p = random_irreducible(field, k, rng);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out.sort_by(Poly::canonical_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn p(field: &Field, c: &[i64]) -> Poly {
        Poly::from_ints(field, c)
    }

    #[test]
    fn irreducibility_examples() {
        let f5 = Field::prime(5).unwrap();
        let f11 = Field::prime(11).unwrap();
        assert!(is_irreducible(&p(&f5, &[2, 0, 1])));
        assert!(!is_irreducible(&p(&f5, &[-1, 0, 1])));
        assert!(is_irreducible(&p(&f11, &[4, 1, 1])));
        assert!(is_irreducible(&p(&f5, &[3, 1])));
        assert!(!is_irreducible(&p(&f5, &[3])));
        // x^4 + 2 over F_5 splits as a product of two quadratics? check against brute force
        let f7 = Field::prime(7).unwrap();
        let count = (0..7i64.pow(3)).map(|n| p(&f7, &[n % 7, n / 7 % 7, n / 49, 1])).filter(is_irreducible).count();
        assert_eq!(count, (343 - 7) / 3); // necklace count for q = 7, n = 3
    }

    #[test]
    fn ddf_examples() {
        let f5 = Field::prime(5).unwrap();
        let f = p(&f5, &[-1, 0, 1]);
        assert_eq!(ddf(&f).unwrap(), vec![(1, f.clone())]);
        let g = p(&f5, &[2, 2, 3, 1, 1]);
        assert_eq!(ddf(&g).unwrap(), vec![(2, g.clone())]);
        let h = p(&f5, &[2, 0, 1]);
        assert_eq!(ddf(&h).unwrap(), vec![(2, h.clone())]);
    }

    #[test]
    fn cz_examples() {
        let f5 = Field::prime(5).unwrap();
        let irr = p(&f5, &[2, 0, 1]);
        assert_eq!(cz_edf(&irr, 2, 0).unwrap(), vec![irr.clone()]);
        let g = p(&f5, &[2, 2, 3, 1, 1]);
        assert_eq!(cz_edf(&g, 2, 5).unwrap(), vec![p(&f5, &[2, 0, 1]), p(&f5, &[1, 1, 1])]);
    }

    #[test]
    fn cz_four_cubics_over_f7() {
        let f7 = Field::prime(7).unwrap();
        let cubics: Vec<Poly> = (0..343i64)
            .map(|n| p(&f7, &[n % 7, n / 7 % 7, n / 49, 1]))
            .filter(is_irreducible)
            .step_by(17)
            .take(4)
            .collect();
        let prod = cubics.iter().fold(Poly::one(&f7), |a, b| &a * b);
        let mut split = cz_edf(&prod, 3, 42).unwrap();
        assert_eq!(split.len(), 4);
        let mut expected = cubics.clone();
        expected.sort_by(Poly::canonical_cmp);
        split.sort_by(Poly::canonical_cmp);
        assert_eq!(split, expected);
    }

    #[test]
    fn random_products_factor_back() {
        let f13 = Field::prime(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in [1, 5, 20] {
            let parts = random_factored(&f13, n, &mut rng);
            let f = parts.iter().fold(Poly::one(&f13), |a, b| &a * b);
            assert_eq!(f.degree(), Some(n));
            assert_eq!(factor_full(&f, 0).unwrap(), FactorSet::from_squarefree(&f13, parts));
        }
        let eq = random_equal_degree(&f13, 3, 4, &mut rng);
        assert!(eq.iter().all(|p| p.degree() == Some(3)) && eq.len() == 4);
    }

    #[test]
    fn factor_full_with_multiplicity() {
        let f5 = Field::prime(5).unwrap();
        let f = &p(&f5, &[1, 1]).pow(2) * &p(&f5, &[2, 0, 1]);
        let fs = factor_full(&f, 0).unwrap();
        assert_eq!(fs.factors(), &[(p(&f5, &[1, 1]), 2), (p(&f5, &[2, 0, 1]), 1)]);
        assert_eq!(factor_full(&p(&f5, &[3]), 0), Err(Error::ConstantInput));
    }
}

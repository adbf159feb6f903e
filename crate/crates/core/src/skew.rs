//! Skew polynomials `Σ c_i τ^i` over `A/(f)` with `τ u = u^q τ`.

use std::sync::Arc;

use crate::cm::CmModule;
use crate::error::{Error, Result};
use crate::poly::{Poly, Residue, ResidueRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPoly {
    ring: Arc<ResidueRing>,
    coeffs: Vec<Residue>,
}

impl SkewPoly {
    /// Coefficients ascending in `τ`; all must lie in `ring`.
    pub fn new(ring: &Arc<ResidueRing>, coeffs: Vec<Residue>) -> Result<SkewPoly> {
        if coeffs.iter().any(|c| c.ring() != ring) {
            return Err(Error::ModulusMismatch);
        }
        let mut s = SkewPoly { ring: ring.clone(), coeffs };
        s.trim();
        Ok(s)
    }

    pub fn zero(ring: &Arc<ResidueRing>) -> SkewPoly {
        SkewPoly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: &Residue) -> SkewPoly {
        let mut s = SkewPoly { ring: c.ring().clone(), coeffs: vec![c.clone()] };
        s.trim();
        s
    }

    /// `τ^i`.
    pub fn tau_pow(ring: &Arc<ResidueRing>, i: usize) -> SkewPoly {
        let mut coeffs = vec![ring.zero(); i + 1];
        coeffs[i] = ring.one();
        SkewPoly { ring: ring.clone(), coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Residue::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    /// Degree in `τ`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Residue {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn coefficients(&self) -> &[Residue] {
        &self.coeffs
    }

    pub fn try_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        if self.ring != other.ring {
            return Err(Error::ModulusMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        SkewPoly::new(&self.ring, coeffs)
    }

    pub fn try_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        skew_mul(self, other)
    }
}

/// `(Σ a_i τ^i)(Σ b_j τ^j) = Σ a_i b_j^(q^i) τ^(i+j)`.
pub fn skew_mul(a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
    if a.ring != b.ring {
        return Err(Error::ModulusMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(SkewPoly::zero(&a.ring));
    }
    let ring = &a.ring;
    let mut out = vec![ring.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (j, bj) in b.coeffs.iter().enumerate() {
        // bj^(q^i) for i = 0, 1, ..., computed once per coefficient
        let mut twisted = bj.clone();
        for (i, ai) in a.coeffs.iter().enumerate() {
            if i > 0 {
                twisted = twisted.frobenius_q();
            }
            if !ai.is_zero() {
                out[i + j] = &out[i + j] + &(ai * &twisted);
            }
        }
    }
    SkewPoly::new(ring, out)
}

/// `φ_x = x + g τ + Δ τ^2` with coefficients reduced mod `ring`.
pub fn phi_x(phi: &CmModule, ring: &Arc<ResidueRing>) -> SkewPoly {
    let (g, delta) = phi.reduce_mod(ring);
    SkewPoly { ring: ring.clone(), coeffs: vec![ring.x(), g, delta] }
}

/// `φ_a mod p`, by Horner's rule in `x`. Requires `gcd(p, Δ) = 1`.
pub fn drinfeld_image(phi: &CmModule, a: &Poly, p: &Poly) -> Result<SkewPoly> {
    let p = p.monic()?;
    let ring = ResidueRing::new(&p)?;
    let px = phi_x(phi, &ring);
    if !px.coeff(2).gcd_with_modulus().is_one() {
        return Err(Error::BadReduction);
    }
    let mut acc = SkewPoly::zero(&ring);
    for c in a.coefficients().iter().rev() {
        acc = skew_mul(&acc, &px)?;
        acc = acc.try_add(&SkewPoly::constant(&ring.constant(c)))?;
    }
    Ok(acc)
}

/// Coefficient of `τ^(deg p)` in `φ_p mod p`: the Hasse invariant at `p`.
pub fn hasse_direct(phi: &CmModule, p: &Poly) -> Result<Residue> {
    let k = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(drinfeld_image(phi, p, p)?.coeff(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_skew(ring: &Arc<ResidueRing>, len: usize, rng: &mut ChaCha8Rng) -> SkewPoly {
        let field = ring.field();
        let n = ring.degree();
        let coeffs = (0..len)
            .map(|_| {
                let c: Vec<u64> = (0..n).map(|_| field.random_raw(rng)).collect();
                ring.reduce(&Poly::from_raw(field.clone(), c))
            })
            .collect();
        SkewPoly::new(ring, coeffs).unwrap()
    }

    #[test]
    fn tau_times_x_tau() {
        let f5 = Field::prime(5).unwrap();
        let ring = ResidueRing::new(&Poly::from_ints(&f5, &[2, 0, 1])).unwrap();
        let tau = SkewPoly::tau_pow(&ring, 1);
        let x_tau = SkewPoly::new(&ring, vec![ring.zero(), ring.x()]).unwrap();
        let prod = skew_mul(&tau, &x_tau).unwrap();
        assert_eq!(prod.degree(), Some(2));
        assert_eq!(prod.coeff(2).value(), &Poly::from_ints(&f5, &[0, 4]));
        // the other order has no twist
        assert_eq!(skew_mul(&x_tau, &tau).unwrap().coeff(2), ring.x());
    }

    #[test]
    fn ring_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (field, m) in
            [(Field::prime(5).unwrap(), vec![2, 0, 1, 1]), (Field::extension(3, 2).unwrap(), vec![1, 1, 0, 0, 1])]
        {
            let ring = ResidueRing::new(&Poly::from_ints(&field, &m)).unwrap();
            for _ in 0..10 {
                let a = random_skew(&ring, 3, &mut rng);
                let b = random_skew(&ring, 2, &mut rng);
                let c = random_skew(&ring, 4, &mut rng);
                let ab_c = skew_mul(&skew_mul(&a, &b).unwrap(), &c).unwrap();
                let a_bc = skew_mul(&a, &skew_mul(&b, &c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                let left = skew_mul(&a, &b.try_add(&c).unwrap()).unwrap();
                let right = skew_mul(&a, &b).unwrap().try_add(&skew_mul(&a, &c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn drinfeld_map_is_a_homomorphism() {
        let f7 = Field::prime(7).unwrap();
        let p = (0..343u64)
            .map(|n| Poly::from_u64s(&f7, &[n % 7, n / 7 % 7, n / 49, 1]))
            .find(crate::baseline::is_irreducible)
            .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for a in f7.elements() {
            let phi = CmModule::new(a);
            for _ in 0..3 {
                let u = Poly::from_raw(f7.clone(), (0..3).map(|_| f7.random_raw(&mut rng)).collect());
                let v = Poly::from_raw(f7.clone(), (0..2).map(|_| f7.random_raw(&mut rng)).collect());
                let pu = drinfeld_image(&phi, &u, &p).unwrap();
                let pv = drinfeld_image(&phi, &v, &p).unwrap();
                assert_eq!(drinfeld_image(&phi, &(&u * &v), &p).unwrap(), skew_mul(&pu, &pv).unwrap());
                assert_eq!(drinfeld_image(&phi, &(&u + &v), &p).unwrap(), pu.try_add(&pv).unwrap());
                // φ_u φ_v = φ_v φ_u since A is commutative
                assert_eq!(skew_mul(&pv, &pu).unwrap(), skew_mul(&pu, &pv).unwrap());
                if let Some(d) = u.degree() {
                    assert_eq!(pu.degree(), Some(2 * d));
                }
            }
        }
    }

    #[test]
    fn bad_reduction_is_rejected() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::new(f5.zero());
        let x = Poly::x(&f5);
        assert_eq!(drinfeld_image(&phi, &x, &x), Err(Error::BadReduction));
    }

    #[test]
    fn hasse_q5_quadratics() {
        let f5 = Field::prime(5).unwrap();
        let phi = CmModule::new(f5.zero());
        let p1 = Poly::from_ints(&f5, &[2, 0, 1]);
        assert!(hasse_direct(&phi, &p1).unwrap().is_zero());
        let p2 = Poly::from_ints(&f5, &[1, 1, 1]);
        assert_eq!(hasse_direct(&phi, &p2).unwrap().value(), &Poly::from_ints(&f5, &[2, 2]));
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{kernel, Poly};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

const FAST_REDUCTION_DEGREE: usize = 128;

/// The quotient ring `A/(f)` for a monic modulus `f` of degree at least one.
#[derive(Debug)]
pub struct ResidueRing {
    modulus: Poly,
    /// Reversed-modulus inverse for fast reduction of large moduli.
    inverse: Option<Vec<u64>>,
}

impl PartialEq for ResidueRing {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl Eq for ResidueRing {}

impl ResidueRing {
    pub fn new(modulus: &Poly) -> Result<Arc<ResidueRing>> {
        match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic() => {
                let inverse =
                    (d >= FAST_REDUCTION_DEGREE).then(|| kernel::division_inverse(modulus.field(), modulus.coeffs()));
                Ok(Arc::new(ResidueRing { modulus: modulus.clone(), inverse }))
            }
            _ => Err(Error::InvalidModulus),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn field(&self) -> &Field {
        self.modulus.field()
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Canonical image of `a` in `A/(f)`.
    pub fn reduce(self: &Arc<Self>, a: &Poly) -> Residue {
        assert_eq!(a.field(), self.field(), "polynomial and modulus over different fields");
        let value = self.wrap(self.rem_raw(a.coeffs()));
        Residue { ring: self.clone(), value }
    }

    pub fn zero(self: &Arc<Self>) -> Residue {
        Residue { ring: self.clone(), value: Poly::zero(self.field()) }
    }

    pub fn one(self: &Arc<Self>) -> Residue {
        self.reduce(&Poly::one(self.field()))
    }

    pub fn x(self: &Arc<Self>) -> Residue {
        self.reduce(&Poly::x(self.field()))
    }

    pub fn constant(self: &Arc<Self>, c: &FieldElem) -> Residue {
        self.reduce(&Poly::constant(c))
    }

    fn wrap(&self, coeffs: Vec<u64>) -> Poly {
        Poly::from_raw(self.field().clone(), coeffs)
    }

    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field();
        self.rem_raw(&kernel::mul(f, a, b))
    }

    fn rem_raw(&self, a: &[u64]) -> Vec<u64> {
        let f = self.field();
        match &self.inverse {
            Some(inv) => kernel::rem_precomputed(f, a, self.modulus.coeffs(), inv),
            None => kernel::rem(f, a, self.modulus.coeffs()),
        }
    }
}

/// An element of `A/(f)`, held as its reduced representative.
#[derive(Clone)]
pub struct Residue {
    ring: Arc<ResidueRing>,
    value: Poly,
}

impl PartialEq for Residue {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.value == other.value
    }
}

impl Eq for Residue {}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.value, self.ring.modulus)
    }
}

impl Residue {
    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    /// The reduced representative, of degree below `deg f`.
    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_ring(&self, other: &Residue) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check(&self, other: &Residue) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<u64>) -> Residue {
        Residue { ring: self.ring.clone(), value: self.ring.wrap(coeffs) }
    }

    pub fn try_add(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.wrap(kernel::add(self.ring.field(), self.value.coeffs(), other.value.coeffs())))
    }

    pub fn try_sub(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.wrap(kernel::sub(self.ring.field(), self.value.coeffs(), other.value.coeffs())))
    }

    pub fn try_mul(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.wrap(self.ring.mul_raw(self.value.coeffs(), other.value.coeffs())))
    }

    pub fn scale(&self, c: &FieldElem) -> Residue {
        self.wrap(kernel::scale(self.ring.field(), self.value.coeffs(), c.raw()))
    }

    pub fn square(&self) -> Residue {
        self.wrap(self.ring.mul_raw(self.value.coeffs(), self.value.coeffs()))
    }

    /// `self^n` by square-and-multiply.
    pub fn mod_pow(&self, mut n: u64) -> Residue {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `self^q`, the `q`-power Frobenius of `A/(f)`.
    pub fn frobenius_q(&self) -> Residue {
        self.mod_pow(self.ring.field().q())
    }

    /// `k` applications of [`Residue::frobenius_q`].
    pub fn frobenius_iter(&self, k: usize) -> Residue {
        (0..k).fold(self.clone(), |acc, _| acc.frobenius_q())
    }

    /// `h(self)` for `h` in `A`, by Horner's rule in `A/(f)`.
    pub fn compose_into(&self, h: &Poly) -> Residue {
        let r = &self.ring;
        let mut acc = r.zero();
        for c in h.coefficients().iter().rev() {
            acc = &(&acc * self) + &r.constant(c);
        }
        acc
    }

    /// Monic `gcd(lift(self), f)`.
    pub fn gcd_with_modulus(&self) -> Poly {
        self.value.gcd(&self.ring.modulus).expect("modulus is nonzero")
    }

    /// Image under `A/(f) -> A/(g)` for `g | f`.
    pub fn reduce_to(&self, ring: &Arc<ResidueRing>) -> Residue {
        ring.reduce(&self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &Residue {
            type Output = Residue;
            /// Panics if the operands belong to different quotient rings.
            fn $method(self, rhs: &Residue) -> Residue {
                self.$try(rhs).expect("residues modulo different polynomials")
            }
        }
        impl $tr for Residue {
            type Output = Residue;
            fn $method(self, rhs: Residue) -> Residue {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { ring: self.ring.clone(), value: -&self.value }
    }
}

//! Dense univariate polynomials over `F_q`, the ring `A = F_q[x]`, and its
//! quotients `A/(f)`.

pub(crate) mod kernel;
mod ntt;
mod residue;
pub(crate) mod roots;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

pub use residue::{Residue, ResidueRing};
pub use roots::{find_roots, RootMode};

/// A polynomial in `F_q[x]`; coefficients ascending with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

impl Poly {
    pub(crate) fn from_raw(field: Field, mut coeffs: Vec<u64>) -> Poly {
        kernel::trim(&mut coeffs);
        Poly { field, coeffs }
    }

    /// Coefficients interpreted as integers in the prime subfield.
    pub fn from_u64s(field: &Field, coeffs: &[u64]) -> Poly {
        let p = field.p();
        Poly::from_raw(field.clone(), coeffs.iter().map(|c| c % p).collect())
    }

    /// Coefficients interpreted as integers in the prime subfield; negative
    /// values allowed.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_raw(field.clone(), coeffs.iter().map(|&c| field.from_int(c).raw()).collect())
    }

    pub fn from_elems(field: &Field, coeffs: &[FieldElem]) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::from_raw(field.clone(), coeffs.iter().map(FieldElem::raw).collect()))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![0, 1] }
    }

    pub fn constant(c: &FieldElem) -> Poly {
        Poly::from_raw(c.field().clone(), vec![c.raw()])
    }

    /// `x - c`.
    pub fn linear(c: &FieldElem) -> Poly {
        Poly::from_raw(c.field().clone(), vec![c.field().neg(c.raw()), 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0. Only for sizing.
    pub(crate) fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.field.wrap(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coefficients(&self) -> Vec<FieldElem> {
        self.coeffs.iter().map(|&c| self.field.wrap(c)).collect()
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().map(|&c| self.field.wrap(c))
    }

    pub(crate) fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<u64>) -> Poly {
        Poly::from_raw(self.field.clone(), coeffs)
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// Exact product (Karatsuba above a size cutoff, schoolbook below).
    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.wrap(kernel::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        self.wrap(kernel::scale(&self.field, &self.coeffs, c.raw()))
    }

    /// `(quot, rem)` with `self = quot * divisor + rem`, `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = kernel::divrem(&self.field, &self.coeffs, &divisor.coeffs);
        let (q, r) = (self.wrap(q), self.wrap(r));
        Ok((q, r))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(kernel::rem(&self.field, &self.coeffs, &divisor.coeffs)))
    }

    /// Quotient of an exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Integrity(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic generator of the ideal `(self, other)`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.wrap(kernel::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.wrap(kernel::monic(&self.field, &self.coeffs)))
    }

    pub fn derivative(&self) -> Poly {
        self.wrap(kernel::derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.field.wrap(kernel::eval(&self.field, &self.coeffs, x.raw())))
    }

    pub fn pow(&self, mut n: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner)` by Horner's rule.
    pub fn compose(&self, inner: &Poly) -> Result<Poly> {
        self.same_field(inner)?;
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &self.wrap(vec![c]);
        }
        Ok(acc)
    }

    /// Apply `c -> c^(q0)` to every coefficient, for a power `q0` of `p`.
    pub fn map_coeffs_pow(&self, exponent: u64) -> Poly {
        let f = &self.field;
        self.wrap(self.coeffs.iter().map(|&c| f.pow(c, exponent)).collect())
    }

    /// Coefficient-wise `p`-th root of a polynomial in `x^p`: the unique `r`
    /// with `r^p = self`. Requires `self' = 0`.
    pub fn pth_root(&self) -> Result<Poly> {
        let p = self.field.p() as usize;
        if !self.derivative().is_zero() {
            return Err(Error::Usage("p-th root requires a zero derivative".into()));
        }
        Ok(self.wrap(self.coeffs.iter().step_by(p).map(|&c| self.field.pth_root(c)).collect()))
    }

    /// Canonical order: by degree, then the coefficient sequence as written
    /// (leading term first), comparing coefficients by enumeration index.
    /// So `x^2+2` sorts before `x^2+x+1`.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            let ia = self.coeffs.iter().rev().map(|&c| self.field.to_index(c));
            let ib = other.coeffs.iter().rev().map(|&c| other.field.to_index(c));
            ia.cmp(ib)
        })
    }

    /// Squarefree split `(s, c)` with `s = f / gcd(f, f')` and `c` the cofactor
    /// `f / s`. When `f' = 0`, `s` is taken from the `p`-th root instead.
    pub fn squarefree_part(&self) -> Result<(Poly, Poly)> {
        let f = self.monic()?;
        if f.is_constant() {
            return Ok((f.clone(), Poly::one(&self.field)));
        }
        let d = f.derivative();
        if d.is_zero() {
            let (s, _) = f.pth_root()?.squarefree_part()?;
            let c = f.div_exact(&s)?;
            return Ok((s, c));
        }
        let g = f.gcd(&d)?;
        Ok((f.div_exact(&g)?, g))
    }

    /// Full squarefree decomposition: pairwise coprime squarefree `g_i` with
    /// `f = prod g_i^{m_i}`, multiplicities distinct per branch. `f` is made
    /// monic first.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        let f = self.monic()?;
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let p = self.field.p() as usize;
        let mut c = f.gcd(&f.derivative())?;
        let mut w = f.div_exact(&c)?;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c)?;
            let fac = w.div_exact(&y)?;
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w)?;
            i += 1;
        }
        if !c.is_one() {
            for (g, m) in c.pth_root()?.squarefree_decomposition()? {
                out.push((g, m * p));
            }
        }
        Ok(out)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).map(|g| g.is_one()).unwrap_or(false)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &Poly {
            type Output = Poly;
            /// Panics if the operands belong to different fields.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$try(rhs).expect("polynomials over different fields")
            }
        }
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.wrap(self.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }
}

//! Finite fields `F_q = F_p[t]/(m(t))` of odd characteristic.
//!
//! Elements are stored as a single packed `u64`: the base-`p` digits
//! `c_0, ..., c_{e-1}` of the canonical representative occupy consecutive
//! bit slots of equal width, constant term in the low bits. For prime fields
//! the packed value is the residue itself, and in every field the elements of
//! the prime subfield are exactly the packed values `0..p`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 62;

/// Parameters of a finite field `F_q`, `q = p^e`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    e: usize,
    /// Monic defining polynomial over `F_p`, ascending, length `e + 1`.
    /// `None` for prime fields.
    modulus: Option<Vec<u64>>,
    q: u64,
    bits: u32,
    mask: u64,
}

/// Shared handle to a [`FieldSpec`]. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "F_{}", self.0.p),
            Some(m) => {
                let m = Poly::from_raw(Field::prime_unchecked(self.0.p), m.clone());
                write!(f, "F_{}^{}[t]/({})", self.0.p, self.0.e, m.to_string().replace('x', "t"))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, b);
            }
            b = mulm(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for &a in &BASES {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if p.is_multiple_of(2) || !is_prime_u64(p) {
            return Err(Error::NotOddPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(Error::FieldTooLarge(format!("p = {p} exceeds 2^62")));
        }
        Ok(Field::prime_unchecked(p))
    }

    pub(crate) fn prime_unchecked(p: u64) -> Field {
        Field(Arc::new(FieldSpec { p, e: 1, modulus: None, q: p, bits: 64, mask: u64::MAX }))
    }

    /// `F_p[t]/(m(t))` for an explicit monic modulus given by ascending
    /// coefficients. The modulus is checked for irreducibility.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        let base = Field::prime(p)?;
        let m = Poly::from_u64s(&base, modulus);
        let e = match m.degree() {
            Some(e) if e >= 1 && m.is_monic() => e,
            _ => return Err(Error::InvalidModulus),
        };
        if e == 1 {
            return Ok(base);
        }
        let spec = Field::layout(p, e, m.coeffs().to_vec())?;
        if !crate::baseline::is_irreducible(&m) {
            return Err(Error::ReducibleModulus(m.to_string().replace('x', "t"), p));
        }
        Ok(Field(Arc::new(spec)))
    }

    /// `F_{p^e}` with the least irreducible monic modulus, ordering candidates
    /// by the integer `sum c_i p^i` of their non-leading coefficients.
    pub fn extension(p: u64, e: usize) -> Result<Field> {
        let base = Field::prime(p)?;
        if e == 0 {
            return Err(Error::Usage("extension degree must be at least 1".into()));
        }
        if e == 1 {
            return Ok(base);
        }
        let probe = Field::layout(p, e, vec![0; e + 1])?;
        for n in 0..probe.q {
            let mut coeffs = Vec::with_capacity(e + 1);
            let mut rest = n;
            for _ in 0..e {
                coeffs.push(rest % p);
                rest /= p;
            }
            if coeffs[0] == 0 {
                continue;
            }
            coeffs.push(1);
            let m = Poly::from_u64s(&base, &coeffs);
            if crate::baseline::is_irreducible(&m) {
                return Ok(Field(Arc::new(Field::layout(p, e, coeffs)?)));
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    fn layout(p: u64, e: usize, modulus: Vec<u64>) -> Result<FieldSpec> {
        let bits = 64 - (p - 1).leading_zeros();
        let q = u32::try_from(e).ok().and_then(|e| p.checked_pow(e));
        match q {
            Some(q) if bits as usize * e <= 64 && q < (1 << 63) => {
                Ok(FieldSpec { p, e, modulus: Some(modulus), q, bits, mask: (1u64 << bits) - 1 })
            }
            _ => Err(Error::FieldTooLarge(format!("{p}^{e} does not fit the packed representation"))),
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn e(&self) -> usize {
        self.0.e
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.e == 1
    }

    /// Defining polynomial over the prime field, ascending coefficients.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { field: self.clone(), value: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { field: self.clone(), value: 1 }
    }

    /// Element of the prime subfield congruent to `n`.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem { field: self.clone(), value: self.reduce_int(n) }
    }

    /// `n mod p` as a packed prime-subfield value.
    pub(crate) fn reduce_int(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p() as i128) as u64
    }

    /// Element with the given base-`p` digits (constant term first).
    pub fn from_digits(&self, digits: &[u64]) -> Result<FieldElem> {
        if digits.len() > self.e() {
            return Err(Error::Usage(format!("{} digits given for an extension of degree {}", digits.len(), self.e())));
        }
        let mut value = 0;
        for (i, &d) in digits.iter().enumerate() {
            value = self.set_digit(value, i, d % self.p());
        }
        Ok(FieldElem { field: self.clone(), value })
    }

    /// The `i`-th element in the enumeration order used for sweeps: the
    /// digits of `i` in base `p`. For prime fields this is just `i`.
    pub fn element(&self, index: u64) -> FieldElem {
        FieldElem { field: self.clone(), value: self.from_index(index) }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q()).map(move |i| self.element(i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        FieldElem { field: self.clone(), value: self.random_raw(rng) }
    }

    pub(crate) fn random_raw<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        self.from_index(rng.gen_range(0..self.q()))
    }

    pub(crate) fn wrap(&self, value: u64) -> FieldElem {
        FieldElem { field: self.clone(), value }
    }

    // Packed-representation kernels. Operands are assumed canonical.

    #[inline]
    fn digit(&self, v: u64, i: usize) -> u64 {
        (v >> (i as u32 * self.0.bits)) & self.0.mask
    }

    #[inline]
    fn set_digit(&self, v: u64, i: usize, d: u64) -> u64 {
        if self.0.e == 1 {
            return d;
        }
        let shift = i as u32 * self.0.bits;
        (v & !(self.0.mask << shift)) | (d << shift)
    }

    pub(crate) fn from_index(&self, mut index: u64) -> u64 {
        if self.0.e == 1 {
            return index;
        }
        let mut v = 0;
        for i in 0..self.0.e {
            v = self.set_digit(v, i, index % self.0.p);
            index /= self.0.p;
        }
        v
    }

    pub(crate) fn to_index(&self, v: u64) -> u64 {
        if self.0.e == 1 {
            return v;
        }
        (0..self.0.e).rev().fold(0, |acc, i| acc * self.0.p + self.digit(v, i))
    }

    pub(crate) fn digits(&self, v: u64) -> Vec<u64> {
        (0..self.0.e).map(|i| self.digit(v, i)).collect()
    }

    #[inline]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.e == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let mut r = 0;
        for i in 0..self.0.e {
            let s = self.digit(a, i) + self.digit(b, i);
            r |= (if s >= p { s - p } else { s }) << (i as u32 * self.0.bits);
        }
        r
    }

    #[inline]
    pub(crate) fn neg(&self, a: u64) -> u64 {
        let p = self.0.p;
        if self.0.e == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut r = 0;
        for i in 0..self.0.e {
            let d = self.digit(a, i);
            r |= (if d == 0 { 0 } else { p - d }) << (i as u32 * self.0.bits);
        }
        r
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if self.0.e == 1 {
            return if a >= b { a - b } else { a + self.0.p - b };
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.e == 1 {
            return if p < (1 << 32) { a * b % p } else { ((a as u128 * b as u128) % p as u128) as u64 };
        }
        let e = self.0.e;
        let modulus = self.0.modulus.as_ref().expect("extension field has a modulus");
        let mut x = [0u64; 64];
        let mut y = [0u64; 64];
        for i in 0..e {
            x[i] = self.digit(a, i);
            y[i] = self.digit(b, i);
        }
        let mut prod = [0u128; 127];
        for i in 0..e {
            if x[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] += (x[i] as u128) * (y[j] as u128);
            }
        }
        let mut r = [0u64; 127];
        for i in 0..2 * e - 1 {
            r[i] = (prod[i] % p as u128) as u64;
        }
        // reduce by the monic modulus from the top
        for i in (e..2 * e - 1).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            for j in 0..e {
                let t = ((c as u128 * modulus[j] as u128) % p as u128) as u64;
                let k = i - e + j;
                r[k] = if r[k] >= t { r[k] - t } else { r[k] + p - t };
            }
        }
        let mut v = 0;
        for (i, &d) in r.iter().take(e).enumerate() {
            v |= d << (i as u32 * self.0.bits);
        }
        v
    }

    pub(crate) fn pow(&self, mut base: u64, mut n: u64) -> u64 {
        let mut r = 1;
        while n > 0 {
            if n & 1 == 1 {
                r = self.mul(r, base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(base, base);
            }
        }
        r
    }

    pub(crate) fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.0.e == 1 {
            // extended Euclid on (a, p)
            let (mut r0, mut r1) = (self.0.p as i128, a as i128);
            let (mut t0, mut t1) = (0i128, 1i128);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (t0, t1) = (t1, t0 - qt * t1);
            }
            return Some(t0.rem_euclid(self.0.p as i128) as u64);
        }
        Some(self.pow(a, self.0.q - 2))
    }

    /// `c -> c^(1/p)`, the inverse of the absolute Frobenius.
    pub(crate) fn pth_root(&self, a: u64) -> u64 {
        let mut r = a;
        for _ in 1..self.0.e {
            r = self.pow(r, self.0.p);
        }
        r
    }

    pub(crate) fn chi(&self, a: u64) -> i8 {
        if a == 0 {
            0
        } else if self.pow(a, (self.0.q - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    pub(crate) fn fmt_raw(&self, v: u64) -> String {
        if self.0.e == 1 {
            v.to_string()
        } else {
            let ds: Vec<String> = self.digits(v).iter().map(u64::to_string).collect();
            format!("[{}]", ds.join(","))
        }
    }
}

/// An element of `F_q` bound to its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    value: u64,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.fmt_raw(self.value))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.fmt_raw(self.value))
    }
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Base-`p` digits of the canonical representative, constant term first.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.digits(self.value)
    }

    /// Position in [`Field::elements`] order.
    pub fn index(&self) -> u64 {
        self.field.to_index(self.value)
    }

    pub(crate) fn raw(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        let inv = self.field.inv(other.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.wrap(self.field.mul(self.value, inv)))
    }

    pub fn neg(&self) -> FieldElem {
        self.field.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        let inv = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.wrap(inv))
    }

    /// `self^n`, with `0^0 = 1`.
    pub fn pow(&self, n: u64) -> FieldElem {
        self.field.wrap(self.field.pow(self.value, n))
    }

    /// The quadratic character: `0`, `+1` on nonzero squares, `-1` otherwise.
    pub fn quadratic_character(&self) -> i8 {
        self.field.chi(self.value)
    }
}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = f(5);
        let (a, b) = (f5.from_int(3), f5.from_int(4));
        assert_eq!(a.mul(&b).unwrap(), f5.from_int(2));
        assert_eq!(f5.from_int(2).div(&f5.from_int(3)).unwrap(), f5.from_int(4));
        assert_eq!(f5.from_int(2).div(&f5.zero()), Err(Error::DivisionByZero));
        assert_eq!(f5.from_int(-1), f5.from_int(4));
    }

    #[test]
    fn powers() {
        assert_eq!(f(5).from_int(2).pow(4), f(5).one());
        assert_eq!(f(5).from_int(3).pow(0), f(5).one());
        assert_eq!(f(5).zero().pow(0), f(5).one());
        assert_eq!(f(7).from_int(3).pow(3), f(7).from_int(6));
    }

    #[test]
    fn f9_t_squared() {
        let f9 = Field::with_modulus(3, &[1, 0, 1]).unwrap();
        let t = f9.from_digits(&[0, 1]).unwrap();
        assert_eq!(t.mul(&t).unwrap(), f9.from_int(2));
    }

    #[test]
    fn mismatched_fields() {
        assert_eq!(f(5).one().add(&f(7).one()), Err(Error::FieldMismatch));
    }

    fn squares(field: &Field) -> Vec<FieldElem> {
        field.elements().skip(1).map(|a| a.mul(&a).unwrap()).collect()
    }

    #[test]
    fn quadratic_character_examples() {
        assert_eq!(f(5).from_int(4).quadratic_character(), 1);
        assert_eq!(f(5).from_int(2).quadratic_character(), -1);
        assert_eq!(f(11).from_int(5).quadratic_character(), 1);
        assert_eq!(f(11).zero().quadratic_character(), 0);
        // oracle: exhaustive squaring
        assert!(!squares(&f(5)).contains(&f(5).from_int(2)));
        assert!(squares(&f(11)).contains(&f(11).from_int(5)));
    }

    #[test]
    fn build_extension_moduli() {
        assert_eq!(Field::extension(3, 2).unwrap().modulus(), Some(&[1, 0, 1][..]));
        assert_eq!(Field::extension(5, 2).unwrap().modulus(), Some(&[2, 0, 1][..]));
        let f5 = Field::extension(5, 1).unwrap();
        assert!(f5.is_prime_field());
        assert_eq!(f5.modulus(), None);
        assert_eq!(Field::extension(4, 2), Err(Error::NotOddPrime(4)));
        assert_eq!(Field::prime(2), Err(Error::NotOddPrime(2)));
        assert_eq!(Field::prime(9), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn extension_modulus_is_least_irreducible() {
        // oracle: brute-force root search (degree 2 and 3 are irreducible iff rootless)
        for (p, e) in [(3u64, 2usize), (5, 2), (7, 2), (3, 3), (5, 3)] {
            let m = Field::extension(p, e).unwrap().modulus().unwrap().to_vec();
            let rootless = |c: &[u64]| (0..p).all(|x| c.iter().rev().fold(0, |acc, &ci| (acc * x + ci) % p) != 0);
            assert!(rootless(&m));
            let value = |c: &[u64]| c[..e].iter().rev().fold(0u64, |acc, &ci| acc * p + ci);
            for n in 0..value(&m) {
                let mut c: Vec<u64> = (0..e).map(|i| n / p.pow(i as u32) % p).collect();
                c.push(1);
                assert!(!rootless(&c), "{c:?} precedes {m:?}");
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(Field::with_modulus(5, &[1, 0, 1]), Err(Error::ReducibleModulus(..))));
    }

    fn small_fields() -> Vec<Field> {
        let mut out: Vec<Field> = [3, 5, 7, 11, 13, 101].iter().map(|&p| f(p)).collect();
        for (p, e) in [(3, 2), (5, 2), (7, 2), (11, 2), (3, 3), (3, 4)] {
            out.push(Field::extension(p, e).unwrap());
        }
        out
    }

    #[test]
    fn exhaustive_field_invariants() {
        for field in small_fields() {
            let q = field.q();
            let mut plus = 0;
            for a in field.elements().skip(1) {
                assert_eq!(a.mul(&field.one().div(&a).unwrap()).unwrap(), field.one());
                assert_eq!(a.pow(q - 1), field.one());
                if a.quadratic_character() == 1 {
                    plus += 1;
                }
                for b in field.elements() {
                    let ab = a.mul(&b).unwrap();
                    assert_eq!(ab.quadratic_character(), a.quadratic_character() * b.quadratic_character());
                }
            }
            assert_eq!(plus, (q - 1) / 2, "{field}");
        }
    }

    #[test]
    fn enumeration_round_trips() {
        let f27 = Field::extension(3, 3).unwrap();
        for (i, a) in f27.elements().enumerate() {
            assert_eq!(a.index(), i as u64);
        }
        assert_eq!(f27.elements().collect::<std::collections::HashSet<_>>().len(), 27);
    }

    #[test]
    fn miller_rabin() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime_u64(4_611_686_018_427_387_847)); // 2^62 - 57
        assert!(!is_prime_u64(3_215_031_751));
    }
}

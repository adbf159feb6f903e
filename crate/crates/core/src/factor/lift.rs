//! Small fields: factor over `F_(q^s)` with `q^s >= (100 n)^2`, then
//! recombine Frobenius orbits of factors and descend to `F_q`.

use super::randomized::factor_randomized;
use super::FactorSet;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{find_roots, Poly, RootMode};

/// Least `s >= 1` with `q^s >= (100 n)^2`.
pub fn lift_degree(q: u64, n: usize) -> usize {
    let target = (100 * n as u128).pow(2);
    let mut s = 1;
    let mut pow = q as u128;
    while pow < target {
        pow *= q as u128;
        s += 1;
    }
    s
}

/// [`lift_factor_with_degree`] with `s = lift_degree(q, deg f)`.
pub fn lift_factor_small_q(f: &Poly, seed: u64) -> Result<FactorSet> {
    let n = f.degree().ok_or(Error::ConstantInput)?;
    lift_factor_with_degree(f, lift_degree(f.field().q(), n), seed)
}

/// Maps `F_q` into `F_(q^s)` and back.
struct Embedding {
    base: Field,
    big: Field,
    /// Images of `1, t, ..., t^(e-1)`.
    basis: Vec<u64>,
}

impl Embedding {
    fn new(base: &Field, s: usize, seed: u64) -> Result<Embedding> {
        let e = base.e();
        let big = Field::extension(base.p(), e * s)?;
        let basis = match base.modulus() {
            None => vec![big.one().raw()],
            Some(m) => {
                let m_big = Poly::from_raw(
                    big.clone(),
                    m.iter().map(|&c| big.from_digits(&[c]).map(|x| x.raw())).collect::<Result<_>>()?,
                );
                let theta = find_roots(&m_big, RootMode::Randomized { seed })?
                    .into_iter()
                    .next()
                    .ok_or_else(|| Error::Integrity("base modulus has no root in the extension".into()))?;
                let mut out = vec![big.one().raw()];
                for i in 1..e {
                    out.push(big.mul(out[i - 1], theta.raw()));
                }
                out
            }
        };
        Ok(Embedding { base: base.clone(), big, basis })
    }

    fn up(&self, c: u64) -> u64 {
        let digits = self.base.digits(c);
        self.basis
            .iter()
            .zip(&digits)
            .fold(0, |acc, (&b, &d)| self.big.add(acc, self.big.mul(b, self.big.from_digits(&[d]).unwrap().raw())))
    }

    fn up_poly(&self, f: &Poly) -> Poly {
        Poly::from_raw(self.big.clone(), f.coeffs().iter().map(|&c| self.up(c)).collect())
    }

    /// Solve `Σ b_i basis_i = c` over `F_p` by Gaussian elimination.
    fn down(&self, c: u64) -> Result<u64> {
        let p = self.base.p();
        let fp = Field::prime_unchecked(p);
        let e = self.basis.len();
        let rows = self.big.e();
        let cols: Vec<Vec<u64>> = self.basis.iter().map(|&b| self.big.digits(b)).collect();
        let target = self.big.digits(c);
        let mut m: Vec<Vec<u64>> = (0..rows).map(|r| (0..e).map(|j| cols[j][r]).chain([target[r]]).collect()).collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..e {
            let Some(r) = (pivot_row..rows).find(|&r| m[r][col] != 0) else { continue };
            m.swap(pivot_row, r);
            let inv = fp.inv(m[pivot_row][col]).expect("nonzero pivot");
            for v in m[pivot_row].iter_mut() {
                *v = fp.mul(*v, inv);
            }
            for r in 0..rows {
                if r != pivot_row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for j in 0..=e {
                        m[r][j] = fp.sub(m[r][j], fp.mul(factor, m[pivot_row][j]));
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if m[pivot_row..].iter().any(|row| row[e] != 0) {
            return Err(Error::Integrity("coefficient does not lie in the base field".into()));
        }
        let mut digits = vec![0; e];
        for (r, &col) in pivots.iter().enumerate() {
            digits[col] = m[r][e];
        }
        Ok(self.base.from_digits(&digits)?.raw())
    }

    fn down_poly(&self, f: &Poly) -> Result<Poly> {
        let coeffs = f.coeffs().iter().map(|&c| self.down(c)).collect::<Result<Vec<u64>>>()?;
        Ok(Poly::from_raw(self.base.clone(), coeffs))
    }
}

/// Factor a monic squarefree `f` via the degree-`s` extension.
pub fn lift_factor_with_degree(f: &Poly, s: usize, seed: u64) -> Result<FactorSet> {
    let base = f.field();
    let n = f.degree().filter(|&n| n > 0).ok_or(Error::ConstantInput)?;
    if s == 0 {
        return Err(Error::Usage("extension degree must be positive".into()));
    }
    let f = f.monic()?;
    if s == 1 {
        return factor_randomized(&f, n, seed);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let emb = Embedding::new(base, s, seed)?;
    let big_factors: Vec<Poly> =
        factor_randomized(&emb.up_poly(&f), n, seed)?.factors().iter().map(|(p, _)| p.clone()).collect();
    let q = base.q();
    let mut used = vec![false; big_factors.len()];
    let mut out = Vec::new();
    for i in 0..big_factors.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let h = &big_factors[i];
        let mut prod = h.clone();
        let mut cur = h.map_coeffs_pow(q);
        while cur != *h {
            let j = big_factors
                .iter()
                .position(|g| *g == cur)
                .ok_or_else(|| Error::Integrity(format!("conjugate {cur} missing from the factor list")))?;
            used[j] = true;
            prod = &prod * &cur;
            cur = cur.map_coeffs_pow(q);
        }
        out.push(emb.down_poly(&prod)?);
    }
    Ok(FactorSet::from_squarefree(base, out))
}

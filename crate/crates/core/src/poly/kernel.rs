//! Slice-level arithmetic on ascending coefficient vectors of packed field
//! elements. Inputs need not be trimmed; outputs are trimmed.

use super::ntt;
use crate::field::Field;

const KARATSUBA_CUTOFF: usize = 32;
const NTT_CUTOFF: usize = 96;

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn add(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), 0);
    }
    for (o, &s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(f: &Field, a: &[u64], c: u64) -> Vec<u64> {
    if c == 0 {
        return Vec::new();
    }
    let mut out: Vec<u64> = a.iter().map(|&x| f.mul(x, c)).collect();
    trim(&mut out);
    out
}

fn add_into(f: &Field, acc: &mut [u64], b: &[u64]) {
    for (o, &s) in acc.iter_mut().zip(b) {
        *o = f.add(*o, s);
    }
}

fn sub_into(f: &Field, acc: &mut [u64], b: &[u64]) {
    for (o, &s) in acc.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
}

/// Schoolbook product. For prime fields below 2^32 the products are
/// accumulated in `u128` and reduced once per output coefficient.
pub(crate) fn mul_classical(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = a.len() + b.len() - 1;
    let p = f.p();
    let mut out = if f.is_prime_field() && p < (1 << 32) {
        let mut acc = vec![0u128; len];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(b) {
                *slot += (x * y) as u128;
            }
        }
        acc.into_iter().map(|s| (s % p as u128) as u64).collect()
    } else {
        let mut acc = vec![0u64; len];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(b) {
                *slot = f.add(*slot, f.mul(x, y));
            }
        }
        acc
    };
    trim(&mut out);
    out
}

pub(crate) fn mul(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = if f.is_prime_field() && a.len().min(b.len()) >= NTT_CUTOFF && ntt::supported(f.p(), a.len(), b.len())
    {
        ntt::mul(f.p(), a, b)
    } else {
        karatsuba(f, a, b)
    };
    trim(&mut out);
    out
}

fn karatsuba(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.len() < KARATSUBA_CUTOFF {
        return mul_classical(f, a, b);
    }
    let (n, m) = (a.len(), b.len());
    let mut out = vec![0u64; n + m - 1];
    if n >= 2 * m {
        for (chunk_idx, chunk) in a.chunks(m).enumerate() {
            let part = karatsuba(f, chunk, b);
            add_into(f, &mut out[chunk_idx * m..], &part);
        }
        return out;
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h.min(m));
    let z0 = karatsuba(f, a0, b0);
    let z2 = karatsuba(f, a1, b1);
    let sa = add(f, a0, a1);
    let sb = add(f, b0, b1);
    let mut z1 = karatsuba(f, &sa, &sb);
    z1.resize(z1.len().max(z0.len()).max(z2.len()), 0);
    sub_into(f, &mut z1, &z0);
    sub_into(f, &mut z1, &z2);
    add_into(f, &mut out, &z0);
    add_into(f, &mut out[h..], &z1);
    add_into(f, &mut out[2 * h..], &z2);
    out
}

/// Long division by a nonzero divisor. Returns `(quotient, remainder)`.
pub(crate) fn divrem(f: &Field, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut q = vec![0u64; r.len() - db];
    let p = f.p();
    let fast = f.is_prime_field() && p < (1 << 32);
    for i in (db..r.len()).rev() {
        let c = if lead_inv == 1 { r[i] } else { f.mul(r[i], lead_inv) };
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        let nc = f.neg(c);
        let row = &mut r[i - db..i];
        if fast {
            for (slot, &y) in row.iter_mut().zip(&b[..db]) {
                *slot = (*slot + nc * y % p) % p;
            }
        } else {
            for (slot, &y) in row.iter_mut().zip(&b[..db]) {
                *slot = f.add(*slot, f.mul(nc, y));
            }
        }
        r[i] = 0;
    }
    trim(&mut q);
    r.truncate(db);
    trim(&mut r);
    (q, r)
}

pub(crate) fn rem(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.len() < b.len() {
        let mut r = a.to_vec();
        trim(&mut r);
        return r;
    }
    divrem(f, a, b).1
}

/// `h^(-1) mod x^len` for `h` with nonzero constant term, by Newton iteration.
pub(crate) fn inverse_series(f: &Field, h: &[u64], len: usize) -> Vec<u64> {
    let mut g = vec![f.inv(h[0]).expect("invertible constant term")];
    let mut k = 1;
    while k < len {
        let k2 = (2 * k).min(len);
        let mut e = mul(f, &h[..k2.min(h.len())], &g);
        e.resize(k2, 0);
        for c in e.iter_mut() {
            *c = f.neg(*c);
        }
        e[0] = f.add(e[0], 2 % f.p());
        let mut next = mul(f, &g, &e);
        next.resize(k2, 0);
        g = next;
        k = k2;
    }
    g
}

/// Reversed-modulus inverse used by [`rem_precomputed`]: `rev(b)^(-1) mod x^deg(b)`.
pub(crate) fn division_inverse(f: &Field, b: &[u64]) -> Vec<u64> {
    let rev: Vec<u64> = b.iter().rev().copied().collect();
    inverse_series(f, &rev, b.len() - 1)
}

/// `a mod b` for monic `b` of degree `n` and `deg a < 2n`, with `inv` from
/// [`division_inverse`]; two products instead of long division.
pub(crate) fn rem_precomputed(f: &Field, a: &[u64], b: &[u64], inv: &[u64]) -> Vec<u64> {
    let n = b.len() - 1;
    let mut a = a.to_vec();
    trim(&mut a);
    if a.len() <= n {
        return a;
    }
    let m = a.len() - n;
    if m > inv.len() {
        return rem(f, &a, b);
    }
    let rev_a: Vec<u64> = a.iter().rev().take(m).copied().collect();
    let mut qrev = mul(f, &rev_a, &inv[..m]);
    qrev.resize(m, 0);
    qrev.reverse();
    let qb = mul(f, &qrev, b);
    let mut r: Vec<u64> = (0..n).map(|i| f.sub(a[i], qb.get(i).copied().unwrap_or(0))).collect();
    trim(&mut r);
    r
}

/// Rescale to leading coefficient one. Empty input stays empty.
pub(crate) fn monic(f: &Field, a: &[u64]) -> Vec<u64> {
    match a.last() {
        None | Some(1) => a.to_vec(),
        Some(&lead) => scale(f, a, f.inv(lead).expect("nonzero")),
    }
}

/// Monic gcd by the Euclidean algorithm.
pub(crate) fn gcd(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub(crate) fn eval(f: &Field, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

pub(crate) fn derivative(f: &Field, a: &[u64]) -> Vec<u64> {
    let p = f.p();
    let mut out: Vec<u64> = a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, (i as u64) % p)).collect();
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn karatsuba_matches_schoolbook() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for field in [Field::prime(101).unwrap(), Field::extension(5, 2).unwrap()] {
            for (n, m) in [(40, 40), (100, 33), (257, 64), (70, 200), (31, 300)] {
                let a: Vec<u64> = (0..n).map(|_| field.random_raw(&mut rng)).collect();
                let b: Vec<u64> = (0..m).map(|_| field.random_raw(&mut rng)).collect();
                assert_eq!(mul(&field, &a, &b), mul_classical(&field, &a, &b));
            }
        }
    }

    #[test]
    fn precomputed_remainder_matches_long_division() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for field in [Field::prime(101).unwrap(), Field::prime(1_000_003).unwrap(), Field::extension(3, 3).unwrap()] {
            for n in [1usize, 2, 17, 130, 300] {
                let mut b: Vec<u64> = (0..n).map(|_| field.random_raw(&mut rng)).collect();
                b.push(1);
                let inv = division_inverse(&field, &b);
                for len in [0, n, n + 1, 2 * n - 1, 2 * n] {
                    let a: Vec<u64> = (0..len).map(|_| field.random_raw(&mut rng)).collect();
                    assert_eq!(rem_precomputed(&field, &a, &b, &inv), rem(&field, &a, &b));
                }
            }
        }
    }
}

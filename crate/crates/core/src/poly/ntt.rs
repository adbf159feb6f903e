//! Number-theoretic transform products for prime fields: exact integer
//! convolution modulo one or three NTT primes, then reduction mod `p`.

const PRIMES: [u64; 3] = [998_244_353, 167_772_161, 469_762_049];
const ROOT: u64 = 3;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn transform(a: &mut [u64], m: u64, invert: bool) {
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let w = pow_mod(ROOT, (m - 1) / len as u64, m);
        let w = if invert { pow_mod(w, m - 2, m) } else { w };
        let half = len / 2;
        let mut ws = Vec::with_capacity(half);
        let mut cur = 1u64;
        for _ in 0..half {
            ws.push(cur);
            cur = cur * w % m;
        }
        for chunk in a.chunks_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for ((x, y), &wk) in lo.iter_mut().zip(hi.iter_mut()).zip(&ws) {
                let u = *x;
                let v = *y * wk % m;
                *x = if u + v >= m { u + v - m } else { u + v };
                *y = if u >= v { u - v } else { u + m - v };
            }
        }
        len <<= 1;
    }
    if invert {
        let inv_n = pow_mod(n as u64, m - 2, m);
        for x in a.iter_mut() {
            *x = *x * inv_n % m;
        }
    }
}

fn convolve(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let len = a.len() + b.len() - 1;
    let size = len.next_power_of_two();
    let mut fa = vec![0u64; size];
    let mut fb = vec![0u64; size];
    for (d, &s) in fa.iter_mut().zip(a) {
        *d = s % m;
    }
    for (d, &s) in fb.iter_mut().zip(b) {
        *d = s % m;
    }
    transform(&mut fa, m, false);
    transform(&mut fb, m, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = *x * y % m;
    }
    transform(&mut fa, m, true);
    fa.truncate(len);
    fa
}

/// Whether `a * b` over `F_p` can be computed exactly by [`mul`].
pub(crate) fn supported(p: u64, a_len: usize, b_len: usize) -> bool {
    let bound = (p as u128 - 1).pow(2) * a_len.min(b_len) as u128;
    let product = PRIMES.iter().map(|&q| q as u128).product::<u128>();
    p < (1 << 32) && bound < product && (a_len + b_len).next_power_of_two() <= 1 << 23
}

/// Product of nonempty coefficient slices (values in `0..p`) over `F_p`.
pub(crate) fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let bound = (p as u128 - 1).pow(2) * a.len().min(b.len()) as u128;
    if bound < PRIMES[0] as u128 {
        return convolve(a, b, PRIMES[0]).into_iter().map(|c| c % p).collect();
    }
    let c0 = convolve(a, b, PRIMES[0]);
    let c1 = convolve(a, b, PRIMES[1]);
    let c2 = convolve(a, b, PRIMES[2]);
    let (m0, m1, m2) = (PRIMES[0], PRIMES[1], PRIMES[2]);
    let inv_m0_m1 = pow_mod(m0 % m1, m1 - 2, m1);
    let m01 = (m0 as u128 * m1 as u128) % m2 as u128;
    let inv_m01_m2 = pow_mod(m01 as u64, m2 - 2, m2);
    let m01_mod_p = (m0 as u128 * m1 as u128 % p as u128) as u64;
    c0.iter()
        .zip(&c1)
        .zip(&c2)
        .map(|((&r0, &r1), &r2)| {
            // Garner: x = r0 + m0 t1 + m0 m1 t2
            let t1 = (r1 + m1 - r0 % m1) % m1 * inv_m0_m1 % m1;
            let x01 = r0 as u128 + m0 as u128 * t1 as u128;
            let t2 =
                ((r2 as u128 + m2 as u128 - x01 % m2 as u128) % m2 as u128 * inv_m01_m2 as u128 % m2 as u128) as u64;
            let low = (x01 % p as u128) as u64;
            ((low as u128 + m01_mod_p as u128 * (t2 % p) as u128) % p as u128) as u64
        })
        .collect()
}

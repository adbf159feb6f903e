use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::FactorSet;
use crate::baseline;
use crate::cm::{check_good_reduction, CmConstruction, CmModule};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hasse::recurrence_step;
use crate::poly::roots::{linear_part, split_linear};
use crate::poly::{Poly, Residue, ResidueRing};

/// Knobs for [`factor_randomized_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomizedOptions {
    /// Run the splitting pass exactly as stated: one gcd per step against the
    /// full input, no removal of found factors, no early exit. Fails with an
    /// integrity error when a bucket picks up a repeated factor or the
    /// ordinary part is not a polynomial quotient, both of which happen once
    /// a supersingular prime of degree `j` keeps dividing `r_k` for `k > j`.
    pub literal_step4: bool,
    pub construction: CmConstruction,
    /// Fresh CM parameters tried on a part before falling back to
    /// Cantor-Zassenhaus.
    pub max_redraws: usize,
}

impl Default for RandomizedOptions {
    fn default() -> Self {
        RandomizedOptions { literal_step4: false, construction: CmConstruction::Squared, max_redraws: 64 }
    }
}

/// Result of one pass over `k = 2..=m` with a fixed module.
///
/// `outputs` are irreducible factors certified by degree; `f_ss`/`f_or` are
/// the leftover supersingular/ordinary composites with `m_ss`/`m_or` the
/// largest `k` at which they grew; `remainder` collects the factors of degree
/// above `m`. The product of all of them is the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitOutcome {
    pub outputs: Vec<Poly>,
    pub f_ss: Poly,
    pub m_ss: usize,
    pub f_or: Poly,
    pub m_or: usize,
    pub remainder: Poly,
}

/// Rolling Frobenius state at step `k`: `X[k-1]`, `w = (X[k-1] - a)^((q-1)/2)`,
/// `G[k-1]`, `D[k-2]`, `r_(k-1)`, `r_(k-2)`, all mod the current modulus.
///
/// Since `a` lies in `F_q`, `d^(q^i) = X[i] - a`, so with `d_i = X[i] - a` and
/// `w_i = d_i^((q-1)/2)`:
/// `X[i+1] = d_i w_i^2 + a`, `G[i] = d_i (1 + w_i)^2` (or `d_i (1 + w_i)`),
/// `D[i] = d_i w_i (1 + w_i)(1 + w_(i+1))`. One power per step.
struct State {
    a: Residue,
    construction: CmConstruction,
    x: Residue,
    w: Residue,
    g: Residue,
    d: Residue,
    r1: Residue,
    r2: Residue,
}

impl State {
    fn new(phi: &CmModule, ring: &Arc<ResidueRing>) -> State {
        let half = (ring.field().q() - 1) / 2;
        let a = ring.constant(phi.a());
        let one = ring.one();
        let construction = phi.construction();
        let d0 = &ring.x() - &a;
        let w0 = d0.mod_pow(half);
        let x1 = &(&d0 * &w0.square()) + &a;
        let d1 = &x1 - &a;
        let w1 = d1.mod_pow(half);
        let g0 = Self::g_of(construction, &d0, &w0);
        let g1 = Self::g_of(construction, &d1, &w1);
        let delta0 = &(&(&d0 * &w0) * &(&one + &w0)) * &(&one + &w1);
        State { a, construction, x: x1, w: w1, g: g1, d: delta0, r1: g0, r2: one }
    }

    fn g_of(c: CmConstruction, d: &Residue, w: &Residue) -> Residue {
        let one_w = &d.ring().one() + w;
        match c {
            CmConstruction::Squared => d * &one_w.square(),
            CmConstruction::Plain => d * &one_w,
        }
    }

    /// `r_k` and `X[k]`; shifts the state to step `k + 1` except for `G`, `D`.
    fn step(&mut self) -> Residue {
        let r = recurrence_step(&self.g, &self.x, &self.d, &self.r1, &self.r2);
        self.r2 = std::mem::replace(&mut self.r1, r.clone());
        r
    }

    /// Advance `X`, `w`, `G`, `D` by one index.
    fn advance(&mut self) {
        let half = (self.x.ring().field().q() - 1) / 2;
        let one = self.x.ring().one();
        let d_prev = &self.x - &self.a;
        let x_next = &(&d_prev * &self.w.square()) + &self.a;
        let d_next = &x_next - &self.a;
        let w_next = d_next.mod_pow(half);
        self.d = &(&(&d_prev * &self.w) * &(&one + &self.w)) * &(&one + &w_next);
        self.g = Self::g_of(self.construction, &d_next, &w_next);
        self.x = x_next;
        self.w = w_next;
    }

    fn reduce_to(&mut self, ring: &Arc<ResidueRing>) {
        for v in [&mut self.a, &mut self.x, &mut self.w, &mut self.g, &mut self.d, &mut self.r1, &mut self.r2] {
            *v = v.reduce_to(ring);
        }
    }
}

struct Buckets {
    outputs: Vec<Poly>,
    ss: (Poly, usize),
    or: (Poly, usize),
}

impl Buckets {
    fn place(part: Poly, k: usize, bucket: &mut (Poly, usize), outputs: &mut Vec<Poly>) {
        match part.degree() {
            Some(d) if d == k => outputs.push(part),
            Some(d) if d > 0 => {
                bucket.0 = &bucket.0 * &part;
                bucket.1 = k;
            }
            _ => {}
        }
    }
}

const BLOCK_CAP: usize = 32;

/// One splitting pass of a monic squarefree `f` without roots in `F_q`, for
/// factors of degree at most `m`.
///
/// Steps run in blocks `k0..=k1` with `k1 < 2 k0`: once all primes below
/// degree `k0` are gone, a prime dividing `X[k] - x` for `k` in the block has
/// degree exactly `k`, so one gcd of the product of the `X[k] - x` finds every
/// factor of the block and the per-step gcds run against that part only.
pub fn split_once(f: &Poly, m: usize, phi: &CmModule) -> Result<SplitOutcome> {
    let field = f.field();
    let one = Poly::one(field);
    let mut b = Buckets { outputs: Vec::new(), ss: (one.clone(), 0), or: (one.clone(), 0) };
    let mut rest = f.monic()?;
    if rest.is_constant() {
        return Err(Error::ConstantInput);
    }
    let mut ring = ResidueRing::new(&rest)?;
    let mut st = State::new(phi, &ring);
    if !st.d.gcd_with_modulus().is_one() {
        return Err(Error::BadReduction);
    }
    let mut k0 = 2;
    while k0 <= m {
        let n = rest.degree().unwrap_or(0);
        if n < 2 * k0 {
            // no factors below degree k0 remain, so `rest` is irreducible
            if n > 0 && n <= m {
                b.outputs.push(std::mem::replace(&mut rest, one.clone()));
            }
            break;
        }
        let k1 = (k0 + k0.min(BLOCK_CAP) - 1).min(m).min(n / 2);
        let mut acc = ring.one();
        let mut steps = Vec::with_capacity(k1 + 1 - k0);
        for _ in k0..=k1 {
            let r = st.step();
            st.advance();
            let xk = &st.x - &ring.x();
            acc = &acc * &xk;
            steps.push((r, xk));
        }
        let hit = acc.gcd_with_modulus();
        if !hit.is_one() {
            let mut h = hit.clone();
            for (k, (r, xk)) in (k0..=k1).zip(&steps) {
                if h.is_one() {
                    break;
                }
                let dk = xk.value().rem(&h)?.gcd(&h)?;
                if dk.is_one() {
                    continue;
                }
                let sk = r.value().rem(&dk)?.gcd(&dk)?;
                let ok = dk.div_exact(&sk)?;
                Buckets::place(sk, k, &mut b.ss, &mut b.outputs);
                Buckets::place(ok, k, &mut b.or, &mut b.outputs);
                h = h.div_exact(&dk)?;
            }
            rest = rest.div_exact(&hit)?;
            if rest.is_one() {
                break;
            }
            ring = ResidueRing::new(&rest)?;
            st.reduce_to(&ring);
        }
        k0 = k1 + 1;
    }
    Ok(SplitOutcome { outputs: b.outputs, f_ss: b.ss.0, m_ss: b.ss.1, f_or: b.or.0, m_or: b.or.1, remainder: rest })
}

/// The pass exactly as stated, against the full input at every step.
fn split_once_literal(f: &Poly, m: usize, phi: &CmModule) -> Result<SplitOutcome> {
    let field = f.field();
    let one = Poly::one(field);
    let f = f.monic()?;
    let ring = ResidueRing::new(&f)?;
    let mut st = State::new(phi, &ring);
    if !st.d.gcd_with_modulus().is_one() {
        return Err(Error::BadReduction);
    }
    let mut outputs = Vec::new();
    let (mut f_ss, mut m_ss, mut f_or, mut m_or) = (one.clone(), 0, one.clone(), 0);
    for k in 2..=m {
        let r = st.step();
        st.advance();
        let sk = r.gcd_with_modulus();
        let dk = (&st.x - &ring.x()).gcd_with_modulus();
        if sk.degree() == Some(k) {
            outputs.push(sk.clone());
        } else {
            f_ss = &f_ss * &sk;
            m_ss = k;
        }
        let (ok, rem) = dk.div_rem(&sk)?;
        if !rem.is_zero() {
            return Err(Error::Integrity(format!(
                "literal pass: gcd(r_{k}, f) = {sk} does not divide gcd(x^(q^{k}) - x, f) = {dk}"
            )));
        }
        if ok.degree() == Some(k) {
            outputs.push(ok);
        } else {
            f_or = &f_or * &ok;
            m_or = k;
        }
    }
    for (name, part) in [("supersingular", &f_ss), ("ordinary", &f_or)] {
        if !part.is_constant() && !part.is_squarefree() {
            return Err(Error::Integrity(format!("literal pass: {name} part {part} has repeated factors")));
        }
    }
    let found = outputs.iter().fold(&f_ss * &f_or, |acc, p| &acc * p);
    let (remainder, rem) = f.div_rem(&found)?;
    if !rem.is_zero() {
        return Err(Error::Integrity(format!("literal pass: outputs and parts do not divide {f}")));
    }
    Ok(SplitOutcome { outputs, f_ss, m_ss, f_or, m_or, remainder })
}

#[derive(Debug)]
struct Driver {
    rng: ChaCha8Rng,
    opts: RandomizedOptions,
    out: Vec<Poly>,
    unfactored: Poly,
}

impl Driver {
    fn draw(&mut self, f: &Poly) -> CmModule {
        loop {
            let a: FieldElem = f.field().random(&mut self.rng);
            let phi = CmModule::with_construction(a, self.opts.construction);
            if check_good_reduction(&phi, f) {
                return phi;
            }
        }
    }

    fn run(&mut self, f: &Poly, m: usize) -> Result<()> {
        if f.is_constant() {
            return Ok(());
        }
        if m < 2 {
            self.unfactored = &self.unfactored * f;
            return Ok(());
        }
        let mut attempts = 0;
        loop {
            let phi = self.draw(f);
            let so = if self.opts.literal_step4 { split_once_literal(f, m, &phi)? } else { split_once(f, m, &phi)? };
            if so.remainder == *f {
                // no factor of degree <= m, independent of the module
                self.unfactored = &self.unfactored * f;
                return Ok(());
            }
            if so.f_ss == *f || so.f_or == *f {
                attempts += 1;
                if attempts >= self.opts.max_redraws {
                    log::warn!("no CM parameter separated {} after {attempts} draws, using Cantor-Zassenhaus", f);
                    return self.fallback(f, m);
                }
                continue;
            }
            self.out.extend(so.outputs);
            self.unfactored = &self.unfactored * &so.remainder;
            self.run(&so.f_ss, so.m_ss)?;
            return self.run(&so.f_or, so.m_or);
        }
    }

    fn fallback(&mut self, f: &Poly, m: usize) -> Result<()> {
        let seed = rand::Rng::gen(&mut self.rng);
        for (k, g) in baseline::ddf(f)? {
            if k <= m {
                self.out.extend(baseline::cz_edf(&g, k, seed)?);
            } else {
                self.unfactored = &self.unfactored * &g;
            }
        }
        Ok(())
    }
}

/// Factor a monic squarefree `f` into irreducibles of degree at most `m`;
/// factors of larger degree are left in [`FactorSet::unfactored`].
pub fn factor_randomized(f: &Poly, m: usize, seed: u64) -> Result<FactorSet> {
    factor_randomized_with(f, m, seed, RandomizedOptions::default())
}

pub fn factor_randomized_with(f: &Poly, m: usize, seed: u64, opts: RandomizedOptions) -> Result<FactorSet> {
    let field = f.field();
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantInput),
        Some(n) => n,
    };
    if m == 0 || m > n {
        return Err(Error::Usage(format!("degree bound m = {m} must satisfy 1 <= m <= {n}")));
    }
    let f = f.monic()?;
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let q = field.q();
    if (q as f64).sqrt() < 100.0 * n as f64 {
        log::warn!("sqrt(q) < 100 n (q = {q}, n = {n}); success probability bounds do not apply");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lin = linear_part(&f)?;
    let mut roots = Vec::new();
    split_linear(&lin, &mut rng, &mut roots)?;
    let rest = f.div_exact(&lin)?;
    let mut driver = Driver { rng, opts, out: roots.iter().map(Poly::linear).collect(), unfactored: Poly::one(field) };
    driver.run(&rest, m)?;
    let fs = FactorSet::from_squarefree(field, driver.out).with_unfactored(driver.unfactored);
    debug_assert_eq!(fs.product(), f);
    debug_assert!(fs.factors().iter().all(|(p, _)| baseline::is_irreducible(p)));
    Ok(fs)
}

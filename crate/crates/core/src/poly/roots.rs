use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Poly, ResidueRing};
use crate::error::Result;
use crate::field::FieldElem;

/// How [`find_roots`] locates roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMode {
    /// `gcd(x^q - x, f)` followed by random splitting with `(x + c)^((q-1)/2) - 1`.
    Randomized { seed: u64 },
    /// Evaluate at every element of `F_q`; deterministic, `O(q n)`.
    Exhaustive,
}

/// All roots of a nonzero `f` in `F_q`, sorted by enumeration index.
pub fn find_roots(f: &Poly, mode: RootMode) -> Result<Vec<FieldElem>> {
    let f = f.monic()?;
    let field = f.field().clone();
    let mut roots = match mode {
        _ if f.is_constant() => Vec::new(),
        RootMode::Exhaustive => field.elements().filter(|a| f.eval(a).map(|v| v.is_zero()).unwrap_or(false)).collect(),
        RootMode::Randomized { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let linear = linear_part(&f)?;
            let mut out = Vec::new();
            split_linear(&linear, &mut rng, &mut out)?;
            out
        }
    };
    roots.sort_by_key(FieldElem::index);
    roots.dedup();
    Ok(roots)
}

/// `gcd(x^q - x, f)`: the product of the distinct linear factors of `f`.
pub(crate) fn linear_part(f: &Poly) -> Result<Poly> {
    if f.is_constant() {
        return Ok(Poly::one(f.field()));
    }
    let ring = ResidueRing::new(f)?;
    let x = ring.x();
    (&x.frobenius_q() - &x).value().gcd(f)
}

/// Split a monic product of distinct linear factors into its roots.
pub(crate) fn split_linear(g: &Poly, rng: &mut ChaCha8Rng, out: &mut Vec<FieldElem>) -> Result<()> {
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            out.push(g.coeff(0).neg());
            return Ok(());
        }
        _ => {}
    }
    let field = g.field();
    let ring = ResidueRing::new(g)?;
    let half = (field.q() - 1) / 2;
    loop {
        let c = field.random(rng);
        let shifted = &ring.x() + &ring.constant(&c);
        let h = (&shifted.mod_pow(half) - &ring.one()).value().gcd(g)?;
        let d = h.degree().unwrap_or(0);
        if d > 0 && Some(d) < g.degree() {
            let rest = g.div_exact(&h)?;
            split_linear(&h, rng, out)?;
            return split_linear(&rest, rng, out);
        }
    }
}

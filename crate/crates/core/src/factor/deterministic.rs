use super::FactorSet;
use crate::baseline;
use crate::cm::{check_good_reduction, CmModule};
use crate::error::{Error, Result};
use crate::hasse::lift_at;
use crate::poly::roots::linear_part;
use crate::poly::{find_roots, Poly, RootMode};

fn check_input(f: &Poly, k: usize) -> Result<Poly> {
    let field = f.field();
    if !field.is_prime_field() {
        return Err(Error::Usage(format!("deterministic splitting requires prime q, got q = {}", field.q())));
    }
    if k < 2 {
        return Err(Error::Usage("factor degree k must be at least 2".into()));
    }
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantInput),
        Some(n) => n,
    };
    if n % k != 0 {
        return Err(Error::Usage(format!("degree {n} is not a multiple of k = {k}")));
    }
    let f = f.monic()?;
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !linear_part(&f)?.is_one() {
        return Err(Error::Usage("input has roots in F_q".into()));
    }
    Ok(f)
}

/// Least `a` in `0..q` for which `gcd(r_k, f)` is a proper factor of `f`.
pub fn first_split_index(f: &Poly, k: usize) -> Result<Option<u64>> {
    let f = check_input(f, k)?;
    split_once(&f, k).map(|s| s.map(|(a, _)| a))
}

fn split_once(f: &Poly, k: usize) -> Result<Option<(u64, Poly)>> {
    let field = f.field();
    let n = f.degree().unwrap_or(0);
    for a in 0..field.q() {
        let phi = CmModule::new(field.element(a));
        if !check_good_reduction(&phi, f) {
            continue;
        }
        let h = lift_at(&phi, f, k)?.gcd_with_modulus();
        if let Some(d) = h.degree() {
            if d > 0 && d < n {
                return Ok(Some((a, h)));
            }
        }
    }
    Ok(None)
}

/// Deterministic equal-degree splitting: `f` monic squarefree over a prime
/// field, all irreducible factors of degree `k`, no roots. Sweeps
/// `a = 0, 1, ...` until `gcd(r_k, f)` is proper, then recurses on both
/// parts, smaller first.
pub fn factor_edf_deterministic(f: &Poly, k: usize) -> Result<FactorSet> {
    let f = check_input(f, k)?;
    let mut out = Vec::new();
    edf(&f, k, &mut out)?;
    Ok(FactorSet::from_squarefree(f.field(), out))
}

fn edf(f: &Poly, k: usize, out: &mut Vec<Poly>) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if !n.is_multiple_of(k) {
        return Err(Error::Integrity(format!("part {f} has degree {n}, not a multiple of k = {k}")));
    }
    if n == k {
        out.push(f.clone());
        return Ok(());
    }
    let Some((_, h)) = split_once(f, k)? else {
        return Err(Error::Integrity(format!(
            "no a in F_q separates the factors of {f}; either the degree promise is violated or q is too small"
        )));
    };
    let g = f.div_exact(&h)?;
    let (small, large) = if h.degree() <= g.degree() { (h, g) } else { (g, h) };
    edf(&small, k, out)?;
    edf(&large, k, out)
}

/// Roots peeled off by exhaustive evaluation, then the deterministic sweep.
pub(crate) fn factor_with_root_removal(f: &Poly, k: usize) -> Result<FactorSet> {
    let field = f.field();
    let f = f.monic()?;
    let mut out: Vec<Poly> = find_roots(&f, RootMode::Exhaustive)?.iter().map(Poly::linear).collect();
    let lin = out.iter().fold(Poly::one(field), |a, b| &a * b);
    let rest = f.div_exact(&lin)?;
    if !rest.is_constant() {
        if k == 1 {
            return Err(Error::Integrity(format!("{rest} has no roots but k = 1 was promised")));
        }
        out.extend(factor_edf_deterministic(&rest, k)?.factors().iter().map(|(p, _)| p.clone()));
    }
    debug_assert!(out.iter().all(baseline::is_irreducible));
    Ok(FactorSet::from_squarefree(field, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn p(field: &Field, c: &[i64]) -> Poly {
        Poly::from_ints(field, c)
    }

    #[test]
    fn q5_quartic_example() {
        let f5 = Field::prime(5).unwrap();
        let f = p(&f5, &[2, 2, 3, 1, 1]);
        let fs = factor_edf_deterministic(&f, 2).unwrap();
        assert_eq!(fs.factors(), &[(p(&f5, &[2, 0, 1]), 1), (p(&f5, &[1, 1, 1]), 1)]);
        assert_eq!(first_split_index(&f, 2).unwrap(), Some(0));
    }

    #[test]
    fn q11_sweep_example() {
        let f11 = Field::prime(11).unwrap();
        let (p1, p2) = (p(&f11, &[1, 0, 1]), p(&f11, &[4, 1, 1]));
        let f = &p1 * &p2;
        assert_eq!(first_split_index(&f, 2).unwrap(), Some(2));
        let phi = CmModule::new(f11.from_int(2));
        assert_eq!(lift_at(&phi, &f, 2).unwrap().gcd_with_modulus(), p2);
        let fs = factor_edf_deterministic(&f, 2).unwrap();
        assert_eq!(fs.factors(), &[(p1, 1), (p2, 1)]);
        assert_eq!(factor_edf_deterministic(&p(&f11, &[1, 0, 1]), 2).unwrap().len(), 1);
    }

    #[test]
    fn input_checks() {
        let f9 = Field::extension(3, 2).unwrap();
        assert!(matches!(factor_edf_deterministic(&Poly::from_ints(&f9, &[1, 0, 1, 0, 1]), 2), Err(Error::Usage(_))));
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(factor_edf_deterministic(&p(&f5, &[2, 2, 3, 1, 1]), 3), Err(Error::Usage(_))));
        assert!(matches!(factor_edf_deterministic(&p(&f5, &[-1, 0, 1]), 2), Err(Error::Usage(_))));
    }

    #[test]
    fn cubic_products() {
        let f13 = Field::prime(13).unwrap();
        let cubics: Vec<Poly> = (0..13i64.pow(3))
            .map(|n| p(&f13, &[n % 13, n / 13 % 13, n / 169, 1]))
            .filter(baseline::is_irreducible)
            .step_by(41)
            .take(5)
            .collect();
        let f = cubics.iter().fold(Poly::one(&f13), |a, b| &a * b);
        let fs = factor_edf_deterministic(&f, 3).unwrap();
        let mut expected = cubics.clone();
        expected.sort_by(Poly::canonical_cmp);
        assert_eq!(fs.factors().iter().map(|(p, _)| p.clone()).collect::<Vec<_>>(), expected);
    }
}

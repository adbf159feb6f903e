//! The two CM constructions side by side: coefficients, J-invariant check,
//! and agreement of supersingularity with the quadratic character of p(a).

use drinfeld_factor::{baseline, hasse_direct, CmConstruction, CmModule, Field, Poly};

fn main() {
    let q = 7u64;
    let field = Field::prime(q).unwrap();
    let quadratics: Vec<Poly> =
        (0..q * q).map(|n| Poly::from_u64s(&field, &[n % q, n / q, 1])).filter(baseline::is_irreducible).collect();
    for construction in [CmConstruction::Squared, CmConstruction::Plain] {
        let phi = CmModule::with_construction(field.element(1), construction);
        println!("{construction:?}, a = 1");
        println!("  g = {}", phi.g().unwrap());
        match phi.j_invariant() {
            Ok(j) => println!("  g^(q+1) = J^2 with J = {j}"),
            Err(e) => println!("  {e}"),
        }
        let (mut ss, mut agree, mut total) = (0, 0, 0);
        for p in &quadratics {
            for a in field.elements() {
                let phi = CmModule::with_construction(a.clone(), construction);
                let h = hasse_direct(&phi, p).unwrap().is_zero();
                let chi = p.eval(&a).unwrap().quadratic_character();
                ss += h as usize;
                agree += (h == (chi == -1)) as usize;
                total += 1;
            }
        }
        println!("  supersingular {ss}/{total}, character rule holds {agree}/{total}");
    }
}

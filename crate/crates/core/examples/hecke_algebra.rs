//! The Iwahori-Hecke algebra over Z[v, 1/v]: T-basis products, inverses,
//! the Bernstein elements theta_lambda and central z_mu.

use hecke_center::hecke::{HeckeAlgebra, HeckeElement};
use hecke_center::root_datum::{Coweight, Family, RootDatum};

fn show(alg: &HeckeAlgebra, h: &HeckeElement) -> String {
    let g = alg.group();
    let mut terms: Vec<_> = h.iter().collect();
    terms.sort_by_cached_key(|(x, _)| g.output_key(x));
    terms.iter().map(|(x, c)| format!("({c}) T[{}]", g.display(x))).collect::<Vec<_>>().join(" + ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = HeckeAlgebra::new(RootDatum::build(Family::GL, 2)?);
    let g = alg.group();

    let a = alg.basis(&g.translation(&Coweight::new([1, 0])));
    let b = alg.basis(&g.translation(&Coweight::new([0, 1])));
    println!("T_t(1,0) T_t(0,1) = {}", show(&alg, &alg.t_multiply(&a, &b)));

    let x = g.translation(&Coweight::new([1, -1]));
    let inv = alg.t_inverse(&x);
    println!("T_x^-1 for x = {} has {} terms", g.display(&x), inv.len());
    println!("T_x^-1 T_x = {}", show(&alg, &alg.t_multiply(&inv, &alg.basis(&x))));

    println!("theta_(0,1) = {}", show(&alg, &alg.theta(&Coweight::new([0, 1]))?));
    let z = alg.bernstein_function(&Coweight::new([1, 0]))?;
    println!("z_(1,0) = {}", show(&alg, &z));
    println!("central: {}", alg.is_central(&z));
    Ok(())
}

//! Kazhdan-Lusztig R-polynomials and the closed formula for minuscule
//! Bernstein functions, checked against the theta presentation.

use std::time::Instant;

use hecke_center::hecke::HeckeAlgebra;
use hecke_center::kl::{closed_form_bernstein, RPolynomials};
use hecke_center::root_datum::{Coweight, Family, RootDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = HeckeAlgebra::new(RootDatum::build(Family::GL, 3)?);
    let g = alg.group();
    let mu = Coweight::new([1, 0, 0]);
    let t = g.translation(&mu);
    let r = RPolynomials::new(g);
    for x in g.admissible_set(&mu)? {
        let lam = g.translation(&x.translation);
        println!("R[{}, {}] = {}", g.display(&x), g.display(&lam), r.r_polynomial(&x, &lam));
    }
    let bottom = g.reduced_word(&t).omega.clone();
    println!("R[{}, t_mu] = {}", g.display(&bottom), r.r_polynomial(&bottom, &t));

    for (family, n) in [(Family::GL, 4), (Family::GSp, 4), (Family::Sp, 4)] {
        let alg = HeckeAlgebra::new(RootDatum::build(family, n)?);
        for mu in alg.root_datum().minuscule_coweights_in_box(1) {
            let start = Instant::now();
            let g = alg.group();
            let l = g.length(&g.translation(&mu)) as i32;
            let theta = alg.bernstein_function(&mu)?.shift(l);
            let closed = closed_form_bernstein(&alg, &mu)?;
            println!(
                "{} mu={mu}: {} terms, routes agree: {} ({:.0?})",
                alg.root_datum().name(),
                closed.len(),
                theta == closed,
                start.elapsed()
            );
        }
    }
    Ok(())
}

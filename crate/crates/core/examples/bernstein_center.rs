//! The Bernstein isomorphism between Weyl-invariant functions and the
//! center, its inverse, and constant terms to standard Levi subgroups.

use hecke_center::bernstein::{bernstein_iso, bernstein_iso_inverse, constant_term, monomial_symmetric};
use hecke_center::error::Error;
use hecke_center::hecke::HeckeAlgebra;
use hecke_center::laurent::LaurentPoly;
use hecke_center::root_datum::{Coweight, Family, RootDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = HeckeAlgebra::new(RootDatum::build(Family::GL, 3)?);
    let rd = alg.root_datum();
    let f = monomial_symmetric(rd, &Coweight::new([1, 0, 0]))?
        .mul(&monomial_symmetric(rd, &Coweight::new([0, 0, -1]))?)
        .add(&monomial_symmetric(rd, &Coweight::new([1, 1, 1]))?.scale(&LaurentPoly::v_pow(2)));
    println!("f has {} terms, height {}", f.iter().count(), f.height(rd));
    for (l, c) in f.dominant_terms(rd) {
        println!("  m_{l} with coefficient {c}");
    }

    let z = bernstein_iso(&alg, &f)?;
    println!("image has {} T-basis terms, central: {}", z.len(), alg.is_central(&z));
    let back = bernstein_iso_inverse(&alg, &z, f.height(rd))?;
    println!("inverse recovers f: {}", back == f);
    match bernstein_iso_inverse(&alg, &z, 0) {
        Err(Error::HeightBoundTooSmall { bound, needed }) => println!("bound {bound} is too small, {needed} needed"),
        other => println!("unexpected: {other:?}"),
    }

    let levi = HeckeAlgebra::new(rd.levi(&[0])?);
    let mu = Coweight::new([1, 0, 0]);
    let c = constant_term(&alg, &alg.bernstein_function(&mu)?, &levi, 1)?;
    println!(
        "constant term of z_{mu} to {}: {} terms, equals the Levi image of m_{mu}: {}",
        levi.root_datum().name(),
        c.len(),
        c == bernstein_iso(&levi, &monomial_symmetric(rd, &mu)?)?
    );
    Ok(())
}

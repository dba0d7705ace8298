//! Transfer to the anisotropic inner form: the normalized transfer, the
//! integral over Kottwitz fibers, Grassmannian point counts and base change.

use hecke_center::bernstein::monomial_symmetric;
use hecke_center::hecke::HeckeAlgebra;
use hecke_center::root_datum::{Coweight, Family, RootDatum};
use hecke_center::transfer::{base_change, grassmannian_count, kottwitz_fiber_integrate, normalized_transfer};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gl2 = HeckeAlgebra::new(RootDatum::build(Family::GL, 2)?);
    let f = monomial_symmetric(gl2.root_datum(), &Coweight::new([-1, 0]))?;
    for (grade, value) in normalized_transfer(gl2.group(), &f)?.iter() {
        println!("GL(2) to D^x: m_(-1,0) goes to {value} at grade {}", gl2.group().omega_label(grade));
    }

    for n in 2..=5 {
        let alg = HeckeAlgebra::new(RootDatum::build(Family::GL, n)?);
        let g = alg.group();
        for m in 1..n {
            let mu = Coweight::new((0..n).map(|i| i64::from(i < m)).collect::<Vec<_>>());
            let l = g.length(&g.translation(&mu)) as i32;
            let integral = kottwitz_fiber_integrate(g, &alg.bernstein_function(&mu)?.shift(l));
            let value = integral.coeff(&g.omega_of_coweight(&mu));
            let count = grassmannian_count(n, m)?;
            println!("Gr({m},{n}): {count:<40} fiber integral agrees: {}", value == count.to_laurent());
        }
    }

    let rd = RootDatum::build(Family::GL, 2)?;
    let b2 = base_change(&monomial_symmetric(&rd, &Coweight::new([1, 0]))?, 2)?;
    let terms: Vec<String> = b2.iter().map(|(l, c)| format!("{c} e^{l}")).collect();
    println!("b_2(m_(1,0)) = {}", terms.join(" + "));
    Ok(())
}

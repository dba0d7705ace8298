//! The extended affine Weyl group: lengths, reduced words, Bruhat order,
//! admissible sets and the Kottwitz map.

use hecke_center::affine_weyl::AffineWeylGroup;
use hecke_center::root_datum::{Coweight, Family, RootDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = AffineWeylGroup::new(RootDatum::build(Family::GL, 3)?);
    let mu = Coweight::new([1, 0, 0]);
    let t = g.translation(&mu);
    let rw = g.reduced_word(&t);
    println!("t_{mu}: length {}, reduced word {:?} * {}", g.length(&t), rw.word, g.display(&rw.omega));

    let adm = g.admissible_set(&mu)?;
    println!("Adm({mu}) has {} elements:", adm.len());
    for x in &adm {
        let crit = g.critical_indices(x)?;
        println!(
            "  {:<28} length {}  kappa {}  S = {:?}",
            g.display(x),
            g.length(x),
            g.omega_label(&g.kottwitz_image(x)),
            crit
        );
    }

    // Bruhat order inside the component: which translations lie below t_mu
    let below: Vec<String> = g
        .root_datum()
        .weyl_orbit(&mu)
        .iter()
        .map(|l| format!("t{l} <= t_mu: {}", g.bruhat_leq(&g.translation(l), &t)))
        .collect();
    println!("{}", below.join(", "));
    for (group, mu) in [(Family::GL, vec![1, 1, 0, 0]), (Family::GSp, vec![1, 1, 1])] {
        let g = AffineWeylGroup::new(RootDatum::build(group, 4)?);
        let mu = Coweight::new(mu);
        println!("|Adm({mu})| in {} = {}", g.root_datum().name(), g.admissible_set(&mu)?.len());
    }
    Ok(())
}

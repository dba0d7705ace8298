//! Root data: the standard families, minuscule coweights, Weyl orbits and
//! the TOML format for custom data.

use hecke_center::config::RootDatumConfig;
use hecke_center::root_datum::{Coweight, Family, RootDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (family, n) in [(Family::GL, 3), (Family::SL, 3), (Family::Sp, 4), (Family::GSp, 4)] {
        let rd = RootDatum::build(family, n)?;
        let minuscule: Vec<String> = rd.minuscule_coweights_in_box(1).iter().map(|m| m.to_string()).collect();
        println!(
            "{}: rank {}, {} positive roots, |W| = {}, minuscule in box 1: {}",
            rd.name(),
            rd.rank(),
            rd.positive_roots().len(),
            rd.weyl().order(),
            minuscule.join(" ")
        );
    }

    let gl3 = RootDatum::build(Family::GL, 3)?;
    let lambda = Coweight::new([0, -1, 2]);
    let orbit: Vec<String> = gl3.weyl_orbit(&lambda).iter().map(|l| l.to_string()).collect();
    println!("W-orbit of {lambda} in GL(3): {}", orbit.join(" "));
    println!("dominant representative {}, <lambda, 2rho> = {}", gl3.dominant_representative(&lambda), gl3.pair_two_rho(&lambda));

    let pgl2 = RootDatumConfig::parse("name = \"PGL(2)\"\nrank = 1\nsimple_roots = [[1]]\nsimple_coroots = [[2]]\n")?.build()?;
    println!("{} from TOML: cartan {:?}", pgl2.name(), pgl2.cartan_matrix());
    print!("GSp(4) as TOML:\n{}", RootDatumConfig::from_root_datum(&RootDatum::build(Family::GSp, 4)?).to_toml());
    Ok(())
}

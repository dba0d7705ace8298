//! The Drinfeld-case test function at pro-p Iwahori level for GL(3), with
//! the default torus condition and a custom one.

use std::collections::BTreeSet;

use hecke_center::affine_weyl::AffineWeylGroup;
use hecke_center::deep_level::finite_field::Fq;
use hecke_center::deep_level::{drinfeld_propp_value, DiagonalTorusPoint, FiniteField, TorusCondition, TrivialOffCritical};
use hecke_center::root_datum::{Coweight, Family, RootDatum};

/// Requires only that the norm of the torus point has determinant 1 in
/// `F_3`.
struct UnimodularNorm;

impl TorusCondition for UnimodularNorm {
    fn contains(&self, _: &BTreeSet<usize>, norm: &[Fq]) -> bool {
        norm.iter().product::<u32>() % 3 == 1
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = AffineWeylGroup::new(RootDatum::build(Family::GL, 3)?);
    let field = FiniteField::with_prime_power(3, 2)?;
    let points = DiagonalTorusPoint::all(&field, 3);
    println!("F_{} has {} torus points in GL(3)", field.order(), points.len());
    let mu = Coweight::new([1, 0, 0]);
    for w in g.admissible_set(&mu)? {
        let support = points
            .iter()
            .filter(|t| drinfeld_propp_value(&g, &field, t, &w, &TrivialOffCritical).is_ok_and(|v| v != 0.into()))
            .count();
        let value = drinfeld_propp_value(&g, &field, &points[0], &w, &TrivialOffCritical)?;
        println!("  w = {:<28} S = {:<10} value at t = 1: {value:<6} nonzero at {support} points", g.display(&w), format!("{:?}", g.critical_indices(&w)?));
    }
    let w = g.translation(&mu);
    let loose = points.iter().filter(|t| drinfeld_propp_value(&g, &field, t, &w, &UnimodularNorm).is_ok_and(|v| v != 0.into())).count();
    println!("with a custom torus condition t_mu is supported at {loose} points");
    Ok(())
}

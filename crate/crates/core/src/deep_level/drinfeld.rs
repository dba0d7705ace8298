//! The test function at pro-p Iwahori level in the Drinfeld case
//! `G = GL_n`, `mu = (1, 0, ..., 0)`:
//!
//! `phi_r(I^+ t w^-1 I^+)` is zero for `w` outside `Adm(mu)`, zero when
//! `N_r(t)` fails the torus condition for the critical indices `S(w)`, and
//! `(-1)^n (p-1)^{n-|S(w)|} (1-q)^{|S(w)|-n-1}` otherwise, with `q = p^r`.
//!
//! The last value has a negative power of `1 - q`; it is returned as an
//! exact rational.

use std::collections::BTreeSet;

use num_rational::Ratio;

use super::finite_field::{FiniteField, Fq};
use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::root_datum::{Coweight, Family};

/// A point `diag(t_1, ..., t_n)` of `T(F_q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTorusPoint {
    entries: Vec<Fq>,
}

impl DiagonalTorusPoint {
    pub fn new(field: &FiniteField, entries: Vec<Fq>) -> Result<Self> {
        if entries.iter().any(|&e| e == 0 || !field.contains(e)) {
            return Err(Error::InvalidArgument(format!("{entries:?} is not a point of the torus over F_{}", field.order())));
        }
        Ok(DiagonalTorusPoint { entries })
    }

    pub fn entries(&self) -> &[Fq] {
        &self.entries
    }

    /// Componentwise norm to `F_p`.
    pub fn norm(&self, field: &FiniteField) -> Vec<Fq> {
        self.entries.iter().map(|&e| field.norm_to_prime_field(e)).collect()
    }

    /// Every point of `T(F_q)` for `GL_n`.
    pub fn all(field: &FiniteField, n: usize) -> Vec<DiagonalTorusPoint> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out.into_iter().flat_map(|p| field.units().map(move |u| [p.clone(), vec![u]].concat())).collect();
        }
        out.into_iter().map(|entries| DiagonalTorusPoint { entries }).collect()
    }
}

/// Membership of `N_r(t)` in the subtorus `T_S(F_p)` cut out by a set `S`
/// of critical indices (1-based).
pub trait TorusCondition {
    fn contains(&self, critical: &BTreeSet<usize>, norm: &[Fq]) -> bool;
}

/// `T_S(F_p) = { diag(t_1..t_n) : t_j = 1 for every j outside S }`.
///
/// This reading is an assumption: the subtorus is only referenced, not
/// defined, alongside the formula. Swap in another [`TorusCondition`] to
/// test a different one.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrivialOffCritical;

impl TorusCondition for TrivialOffCritical {
    fn contains(&self, critical: &BTreeSet<usize>, norm: &[Fq]) -> bool {
        norm.iter().enumerate().all(|(j, &x)| critical.contains(&(j + 1)) || x == 1)
    }
}

/// `(-1)^n (p-1)^{n-s} (1-q)^{s-n-1}`.
pub fn drinfeld_case_value(n: usize, p: u32, q: u32, s: usize) -> Ratio<i128> {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let num = sign * (p as i128 - 1).pow((n - s) as u32);
    let den = (1 - q as i128).pow((n + 1 - s) as u32);
    Ratio::new(num, den)
}

/// Evaluates the formula at `(t, w)` for `GL_n` over `F_q`, `q = p^r`.
pub fn drinfeld_propp_value(
    group: &AffineWeylGroup,
    field: &FiniteField,
    t: &DiagonalTorusPoint,
    w: &AffineWeylElement,
    condition: &dyn TorusCondition,
) -> Result<Ratio<i128>> {
    let rd = group.root_datum();
    if rd.family() != Family::GL {
        return Err(Error::NotGeneralLinear(rd.name().to_string()));
    }
    let n = rd.rank();
    rd.check_rank(&w.translation)?;
    if t.entries.len() != n {
        return Err(Error::InvalidArgument(format!("torus point has {} entries, expected {n}", t.entries.len())));
    }
    let mu = Coweight::basis(n, 0);
    if !group.admissible_set(&mu)?.contains(w) {
        return Ok(Ratio::from_integer(0));
    }
    let critical = group.critical_indices(w)?;
    if !condition.contains(&critical, &t.norm(field)) {
        return Ok(Ratio::from_integer(0));
    }
    Ok(drinfeld_case_value(n, field.characteristic(), field.order(), critical.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::RootDatum;

    fn gl(n: usize) -> AffineWeylGroup {
        AffineWeylGroup::new(RootDatum::build(Family::GL, n).unwrap())
    }

    #[test]
    fn torus_points() {
        let f = FiniteField::new(3).unwrap();
        assert_eq!(DiagonalTorusPoint::all(&f, 2).len(), 4);
        assert!(DiagonalTorusPoint::new(&f, vec![1, 0]).is_err());
        assert!(DiagonalTorusPoint::new(&f, vec![1, 3]).is_err());
    }

    #[test]
    fn examples() {
        let g = gl(2);
        for (p, r) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let f = FiniteField::with_prime_power(p, r).unwrap();
            let q = f.order() as i128;
            let one = DiagonalTorusPoint::new(&f, vec![1, 1]).unwrap();
            let omega = g.reduced_word(&g.translation(&Coweight::new([1, 0]))).omega.clone();
            assert_eq!(g.critical_indices(&omega).unwrap(), BTreeSet::from([1, 2]));
            let v = drinfeld_propp_value(&g, &f, &one, &omega, &TrivialOffCritical).unwrap();
            assert_eq!(v, Ratio::new(1, 1 - q));

            let far = g.translation(&Coweight::new([2, 0]));
            assert_eq!(drinfeld_propp_value(&g, &f, &one, &far, &TrivialOffCritical).unwrap(), Ratio::from_integer(0));

            // t_{e_1} has S = {1}; a norm with second entry != 1 fails
            let te1 = g.translation(&Coweight::new([1, 0]));
            assert_eq!(g.critical_indices(&te1).unwrap(), BTreeSet::from([1]));
            for pt in DiagonalTorusPoint::all(&f, 2) {
                let v = drinfeld_propp_value(&g, &f, &pt, &te1, &TrivialOffCritical).unwrap();
                if pt.norm(&f)[1] != 1 {
                    assert_eq!(v, Ratio::from_integer(0));
                } else {
                    assert_eq!(v, drinfeld_case_value(2, p, f.order(), 1));
                }
            }
        }
    }

    #[test]
    fn rejects_other_groups() {
        let g = AffineWeylGroup::new(RootDatum::build(Family::Sp, 4).unwrap());
        let f = FiniteField::new(2).unwrap();
        let pt = DiagonalTorusPoint::new(&f, vec![1, 1]).unwrap();
        assert!(matches!(
            drinfeld_propp_value(&g, &f, &pt, &g.identity(), &TrivialOffCritical),
            Err(Error::NotGeneralLinear(_))
        ));
    }

    #[test]
    fn predicate_is_swappable() {
        struct Everything;
        impl TorusCondition for Everything {
            fn contains(&self, _: &BTreeSet<usize>, _: &[Fq]) -> bool {
                true
            }
        }
        let g = gl(2);
        let f = FiniteField::new(3).unwrap();
        let pt = DiagonalTorusPoint::new(&f, vec![2, 2]).unwrap();
        let te1 = g.translation(&Coweight::new([1, 0]));
        assert_eq!(drinfeld_propp_value(&g, &f, &pt, &te1, &TrivialOffCritical).unwrap(), Ratio::from_integer(0));
        assert_ne!(drinfeld_propp_value(&g, &f, &pt, &te1, &Everything).unwrap(), Ratio::from_integer(0));
    }
}

//! The Bernstein isomorphism between `W_0`-invariant functions on the
//! cocharacter lattice and the center of the Iwahori-Hecke algebra, and the
//! constant-term homomorphism to standard Levi subgroups.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::laurent::LaurentPoly;
use crate::root_datum::{Coweight, RootDatum};

/// A finitely supported `W_0`-invariant map from coweights to
/// `Z[v, v^-1]`, i.e. `sum f(lambda) e^lambda` in the invariant group ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymmetricFunction {
    terms: BTreeMap<Coweight, LaurentPoly>,
}

impl SymmetricFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * e^0`.
    pub fn constant(rank: usize, c: LaurentPoly) -> Self {
        let mut f = Self::zero();
        f.add_term(Coweight::zero(rank), &c);
        f
    }

    /// Expands a map on orbit representatives to the full orbits. Any
    /// representative of an orbit may be given; coefficients of repeated
    /// orbits add.
    pub fn from_orbit_sums<I>(rd: &RootDatum, reps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coweight, LaurentPoly)>,
    {
        let mut f = Self::zero();
        for (lambda, c) in reps {
            rd.check_rank(&lambda)?;
            for l in rd.weyl_orbit(&lambda) {
                f.add_term(l, &c);
            }
        }
        Ok(f)
    }

    /// Builds from explicit terms, rejecting non-invariant input.
    pub fn from_terms<I>(rd: &RootDatum, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coweight, LaurentPoly)>,
    {
        let mut f = Self::zero();
        for (lambda, c) in terms {
            rd.check_rank(&lambda)?;
            f.add_term(lambda, &c);
        }
        if !f.is_invariant(rd) {
            return Err(Error::InvalidArgument("function is not Weyl-invariant".into()));
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Coweight, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Coweight) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coweight, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_invariant(&self, rd: &RootDatum) -> bool {
        self.terms.iter().all(|(l, c)| {
            (0..rd.semisimple_rank()).all(|i| &self.coeff(&rd.reflect(i, l)) == c)
        })
    }

    /// Terms on dominant coweights only, in increasing order.
    pub fn dominant_terms<'a>(&'a self, rd: &'a RootDatum) -> impl Iterator<Item = (&'a Coweight, &'a LaurentPoly)> + 'a {
        self.terms.iter().filter(move |(l, _)| rd.is_dominant(l))
    }

    pub fn add(&self, other: &SymmetricFunction) -> SymmetricFunction {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> SymmetricFunction {
        let mut out = Self::zero();
        for (l, a) in &self.terms {
            out.add_term(l.clone(), &(a * c));
        }
        out
    }

    /// Product in the group ring: `e^a e^b = e^{a+b}`.
    pub fn mul(&self, other: &SymmetricFunction) -> SymmetricFunction {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), &(x * y));
            }
        }
        out
    }

    /// Applies `f` to every exponent and coefficient.
    pub fn map<F, G>(&self, mut on_coweight: F, mut on_coeff: G) -> SymmetricFunction
    where
        F: FnMut(&Coweight) -> Coweight,
        G: FnMut(&LaurentPoly) -> LaurentPoly,
    {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.add_term(on_coweight(l), &on_coeff(c));
        }
        out
    }

    /// Largest orbit height occurring in the support.
    pub fn height(&self, rd: &RootDatum) -> i64 {
        self.terms.keys().map(|l| rd.height(l)).max().unwrap_or(0)
    }
}

/// The orbit sum `sum_{lambda in W_0 mu} e^lambda`. Any member of the
/// orbit names the same function, so `mu` need not be dominant.
pub fn monomial_symmetric(rd: &RootDatum, mu: &Coweight) -> Result<SymmetricFunction> {
    rd.check_rank(mu)?;
    SymmetricFunction::from_orbit_sums(rd, [(rd.dominant_representative(mu), LaurentPoly::one())])
}

/// `sum_lambda f(lambda) theta_lambda`, computed orbit by orbit as
/// `sum_{mu dominant} f(mu) z_mu`.
pub fn bernstein_iso(alg: &HeckeAlgebra, f: &SymmetricFunction) -> Result<HeckeElement> {
    let rd = alg.root_datum();
    if !f.is_invariant(rd) {
        return Err(Error::InvalidArgument("function is not Weyl-invariant".into()));
    }
    let mut z = HeckeElement::zero();
    for (mu, c) in f.dominant_terms(rd) {
        z.add_assign_scaled(&alg.bernstein_function(mu)?, c);
    }
    Ok(z)
}

/// Inverse of [`bernstein_iso`] on central elements.
///
/// The `T`-expansion of `z_nu` has the top term `v^{-l(t_nu)} T_{t_nu}` and is
/// otherwise supported in lower length, so the coefficients are read off by
/// repeatedly taking the longest dominant translation in the support and
/// subtracting the matching Bernstein function.
pub fn bernstein_iso_inverse(alg: &HeckeAlgebra, z: &HeckeElement, height_bound: i64) -> Result<SymmetricFunction> {
    if !alg.is_central(z) {
        return Err(Error::NotCentral);
    }
    let rd = alg.root_datum();
    let g = alg.group();
    let mut residual = z.clone();
    let mut reps: Vec<(Coweight, LaurentPoly)> = Vec::new();
    while !residual.is_zero() {
        let top = residual.iter().map(|(x, _)| g.length(x)).max().unwrap_or(0);
        let leader = residual
            .support()
            .into_iter()
            .find(|x| g.length(x) == top && x.is_translation() && rd.is_dominant(&x.translation))
            .ok_or_else(|| {
                Error::InconsistentExpansion(format!("no dominant translation of length {top} in the support"))
            })?;
        let nu = leader.translation.clone();
        let needed = rd.height(&nu);
        if needed > height_bound {
            return Err(Error::HeightBoundTooSmall { bound: height_bound, needed });
        }
        let c = residual.coeff(&leader).shift(top as i32);
        let z_nu = alg.bernstein_function(&nu)?;
        residual.add_assign_scaled(&z_nu, &-&c);
        if !residual.coeff(&leader).is_zero() {
            return Err(Error::InconsistentExpansion(format!("leading term at {} did not cancel", g.display(&leader))));
        }
        reps.push((nu, c));
    }
    SymmetricFunction::from_orbit_sums(rd, reps)
}

/// Checks that `levi` is a standard Levi of `ambient`: the same lattice and
/// a subset of its simple roots and coroots.
pub fn check_standard_levi(ambient: &RootDatum, levi: &RootDatum) -> Result<()> {
    if ambient.rank() != levi.rank() {
        return Err(Error::InvalidLevi(format!(
            "lattice ranks differ ({} vs {})",
            ambient.rank(),
            levi.rank()
        )));
    }
    for (a, c) in levi.simple_roots().iter().zip(levi.simple_coroots()) {
        let found = ambient
            .simple_roots()
            .iter()
            .zip(ambient.simple_coroots())
            .any(|(a2, c2)| a2 == a && c2 == c);
        if !found {
            return Err(Error::InvalidLevi(format!("{a:?} is not a simple root of {}", ambient.name())));
        }
    }
    Ok(())
}

/// Constant term `c^G_L`: invert the Bernstein isomorphism for `G`, regard
/// the `W(G)`-invariant function as `W(L)`-invariant, and apply the
/// Bernstein isomorphism for `L`.
pub fn constant_term(
    ambient: &HeckeAlgebra,
    z: &HeckeElement,
    levi: &HeckeAlgebra,
    height_bound: i64,
) -> Result<HeckeElement> {
    check_standard_levi(ambient.root_datum(), levi.root_datum())?;
    let f = bernstein_iso_inverse(ambient, z, height_bound)?;
    bernstein_iso(levi, &f)
}

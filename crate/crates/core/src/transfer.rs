//! Transfer of central elements to inner forms whose adjoint group is
//! anisotropic (the `D^x` situation), integration over Kottwitz fibers, and
//! base change on Weyl-invariant functions.
//!
//! For such an inner form the Iwahori-Hecke algebra is the group ring of
//! `Omega`, so both routes land in functions on `Omega`.
//!
//! Sign convention: `delta_B(lambda(pi)) = q^{-<lambda, 2 rho>}`, hence
//! `delta_B^{-1/2}(lambda) = v^{<lambda, 2 rho>}`.

use std::collections::BTreeMap;

use crate::affine_weyl::{AffineWeylGroup, OmegaElement};
use crate::bernstein::SymmetricFunction;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::laurent::{LaurentPoly, QPoly};

/// A finitely supported function on `Omega` with values in `Z[v, v^-1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedFunction {
    terms: BTreeMap<OmegaElement, LaurentPoly>,
}

impl GradedFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, omega: OmegaElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(omega.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&omega);
        }
    }

    pub fn coeff(&self, omega: &OmegaElement) -> LaurentPoly {
        self.terms.get(omega).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OmegaElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> GradedFunction {
        let mut out = Self::zero();
        for (o, a) in &self.terms {
            out.add_term(o.clone(), &(a * c));
        }
        out
    }

    pub fn shift(&self, exp: i32) -> GradedFunction {
        self.scale(&LaurentPoly::v_pow(exp))
    }
}

/// `(t f)(m) = sum_{kappa(lambda) = m} f(lambda) v^{<lambda, 2 rho>}`.
pub fn normalized_transfer(group: &AffineWeylGroup, f: &SymmetricFunction) -> Result<GradedFunction> {
    let rd = group.root_datum();
    if !f.is_invariant(rd) {
        return Err(Error::InvalidArgument("function is not Weyl-invariant".into()));
    }
    let mut out = GradedFunction::zero();
    for (lambda, c) in f.iter() {
        rd.check_rank(lambda)?;
        let weight = LaurentPoly::v_pow(rd.pair_two_rho(lambda) as i32);
        out.add_term(group.omega_of_coweight(lambda), &(c * &weight));
    }
    Ok(out)
}

/// `(int z)(m) = sum_{kappa(x) = m} z(x) q^{l(x)}`; `q^{l(x)}` is the
/// volume of `IxI` for the Haar measure giving `I` volume one.
pub fn kottwitz_fiber_integrate(group: &AffineWeylGroup, z: &HeckeElement) -> GradedFunction {
    let mut out = GradedFunction::zero();
    for (x, c) in z.iter() {
        out.add_term(group.kottwitz_image(x), &(c * &LaurentPoly::q_pow(group.length(x) as i32)));
    }
    out
}

/// The Gaussian binomial `[n choose m]_q`, the number of `F_q`-points of
/// the Grassmannian of `m`-planes in `n`-space.
pub fn grassmannian_count(n: usize, m: usize) -> Result<QPoly> {
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!("need 0 < m < n, got n={n}, m={m}")));
    }
    Ok(gaussian_binomial(n, m))
}

fn gaussian_binomial(n: usize, m: usize) -> QPoly {
    // row[k] = [i choose k]_q, using [i, k] = [i-1, k-1] + q^k [i-1, k]
    let mut row = vec![QPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for k in 0..=i {
            let left = if k > 0 { row[k - 1].clone() } else { QPoly::zero() };
            let right = row.get(k).map(|p| &QPoly::monomial(1, k) * p).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(m)
}

/// Base change `b_r`: `e^lambda -> e^{r lambda}` and `v -> v^r`.
pub fn base_change(f: &SymmetricFunction, r: u32) -> Result<SymmetricFunction> {
    if r == 0 {
        return Err(Error::InvalidArgument("base change degree must be at least 1".into()));
    }
    Ok(f.map(|l| l.scale(r as i64), |c| c.substitute_v_power(r)))
}

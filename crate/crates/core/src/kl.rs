//! Kazhdan-Lusztig R-polynomials on the extended affine Weyl group and the
//! closed formula for minuscule Bernstein functions.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::laurent::QPoly;
use crate::root_datum::Coweight;

/// Memoized R-polynomials for one group.
///
/// For a left descent `s` of `y`: `R_{x,y} = R_{sx,sy}` when `sx < x`, and
/// `R_{x,y} = (q-1) R_{x,sy} + q R_{sx,sy}` otherwise. `R_{x,x} = 1`, and
/// pairs in different `Omega`-components give 0.
pub struct RPolynomials<'a> {
    group: &'a AffineWeylGroup,
    memo: Mutex<HashMap<(AffineWeylElement, AffineWeylElement), QPoly>>,
}

impl<'a> RPolynomials<'a> {
    pub fn new(group: &'a AffineWeylGroup) -> Self {
        RPolynomials { group, memo: Mutex::new(HashMap::new()) }
    }

    pub fn r_polynomial(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> QPoly {
        if x == y {
            return QPoly::one();
        }
        let g = self.group;
        let (lx, ly) = (g.length(x), g.length(y));
        if lx >= ly || g.kottwitz_image(x) != g.kottwitz_image(y) {
            return QPoly::zero();
        }
        let key = (x.clone(), y.clone());
        if let Some(r) = self.memo.lock().unwrap().get(&key) {
            return r.clone();
        }
        let s = *g.left_descents(y).first().expect("positive length has a descent");
        let r = self.step(x, y, s, lx);
        self.memo.lock().unwrap().insert(key, r.clone());
        r
    }

    /// One step of the recursion through the given left descent `s` of `y`.
    pub fn r_polynomial_via(&self, x: &AffineWeylElement, y: &AffineWeylElement, s: usize) -> Result<QPoly> {
        let g = self.group;
        g.simple_reflection(s)?;
        if !g.left_descents(y).contains(&s) {
            return Err(Error::InvalidArgument(format!("s{s} is not a left descent of {}", g.display(y))));
        }
        Ok(self.step(x, y, s, g.length(x)))
    }

    fn step(&self, x: &AffineWeylElement, y: &AffineWeylElement, s: usize, lx: usize) -> QPoly {
        let g = self.group;
        let sy = g.left_reflect(s, y);
        let sx = g.left_reflect(s, x);
        if g.length(&sx) < lx {
            self.r_polynomial(&sx, &sy)
        } else {
            let a = &QPoly::q_minus_one() * &self.r_polynomial(x, &sy);
            let b = &QPoly::monomial(1, 1) * &self.r_polynomial(&sx, &sy);
            &a + &b
        }
    }
}

/// `q^{l(t_mu)/2} z_mu = (-1)^{l(t_mu)} sum_{x in Adm(mu)} (-1)^{l(x)} R_{x, t_{lambda(x)}}(q) T_x`
/// for minuscule `mu`, where `x = t_{lambda(x)} w`.
pub fn closed_form_bernstein(alg: &HeckeAlgebra, mu: &Coweight) -> Result<HeckeElement> {
    let rd = alg.root_datum();
    if !rd.is_minuscule(mu)? {
        return Err(Error::NotMinuscule(mu.clone()));
    }
    let g = alg.group();
    let rpolys = RPolynomials::new(g);
    let l_mu = g.length(&g.translation(mu));
    let mut out = HeckeElement::zero();
    for x in g.admissible_set(mu)? {
        let top = AffineWeylElement::translation(x.translation.clone());
        let r = rpolys.r_polynomial(&x, &top).to_laurent();
        let sign = if (l_mu + g.length(&x)).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(x, &r.scale(sign));
    }
    Ok(out)
}

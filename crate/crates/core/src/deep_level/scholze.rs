//! Scholze's functions `phi_n` on `GL_2(F)` and the central elements
//! `z_n = (q-1)/[K:K_n] * phi_n`.
//!
//! Every decision is made from what the tracked precision certifies; when
//! it does not, the evaluator reports [`Error::Indeterminate`] instead of
//! guessing.

use std::sync::Arc;

use num_rational::Ratio;
use rand::Rng;

use super::finite_field::FiniteField;
use super::series::{Matrix2, TruncatedSeries, Valuation};
use crate::error::{Error, Result};

/// `val det(1 - g)`, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Ell {
    Finite(i32),
    Infinite,
}

fn indeterminate(what: &str, g: &Matrix2) -> Error {
    Error::Indeterminate(format!("{what} of {g}"))
}

/// `l(g) = val det(1 - g)`. Infinity needs `det(1 - g)` to vanish exactly.
pub fn ell_invariant(g: &Matrix2) -> Result<Ell> {
    match g.one_minus().det().valuation() {
        Valuation::Finite(v) => Ok(Ell::Finite(v)),
        Valuation::Infinite => Ok(Ell::Infinite),
        Valuation::AtLeast(_) => Err(indeterminate("l", g)),
    }
}

/// The largest `k` with `g` in `B_k = pi^k M_2(O)`: the least entry valuation.
pub fn k_invariant(g: &Matrix2) -> Result<i32> {
    let vals = g.entries().map(|e| e.valuation());
    let finite_min = vals.iter().filter_map(|v| match v {
        Valuation::Finite(x) => Some(*x),
        _ => None,
    });
    let Some(m) = finite_min.min() else {
        return if vals.iter().all(|v| *v == Valuation::Infinite) {
            Err(Error::InvalidArgument("k is undefined for the zero matrix".into()))
        } else {
            Err(indeterminate("k", g))
        };
    };
    // an inexact zero entry could still have smaller valuation
    if vals.iter().any(|v| matches!(v, Valuation::AtLeast(n) if *n < m)) {
        return Err(indeterminate("k", g));
    }
    Ok(m)
}

/// Whether every entry has valuation `>= k`.
fn in_lattice(g: &Matrix2, k: i32) -> Option<bool> {
    let answers = g.entries().map(|e| e.valuation().at_least(k));
    if answers.contains(&Some(false)) {
        Some(false)
    } else if answers.iter().all(|a| *a == Some(true)) {
        Some(true)
    } else {
        None
    }
}

/// The three-case formula, given the already decided invariants.
pub fn phi_from_invariants(n: u32, q: u32, trace_in_pi_o: bool, ell: Ell, k: i32) -> i128 {
    let q = q as i128;
    let bound = n as i32 + k;
    if trace_in_pi_o {
        return -1 - q;
    }
    match ell {
        Ell::Finite(l) if l < bound => 1 - q.pow(2 * l as u32),
        _ => 1 + q.pow((2 * bound - 1) as u32),
    }
}

/// `phi_n(g)`: zero unless `val det g = 1`, `tr g` is integral and
/// `g` lies in `B_{1-n}`; otherwise
/// `-1-q` if `tr g` is in `pi O`,
/// `1 - q^{2 l(g)}` if `tr g` is a unit and `l(g) < n + k(g)`,
/// `1 + q^{2(n + k(g)) - 1}` if `tr g` is a unit and `l(g) >= n + k(g)`.
pub fn scholze_phi(n: u32, g: &Matrix2) -> Result<i128> {
    if n == 0 {
        return Err(Error::InvalidArgument("phi_n needs n >= 1".into()));
    }
    let q = g.field().order();
    let det_is_one = match g.det().valuation() {
        Valuation::Finite(v) => v == 1,
        Valuation::Infinite => return Err(Error::InvalidArgument(format!("{g} is singular"))),
        Valuation::AtLeast(m) if m >= 2 => false,
        Valuation::AtLeast(_) => return Err(indeterminate("val det", g)),
    };
    if !det_is_one {
        return Ok(0);
    }
    let tr = g.trace().valuation();
    let integral = tr.at_least(0).ok_or_else(|| indeterminate("trace", g))?;
    let bounded = in_lattice(g, 1 - n as i32).ok_or_else(|| indeterminate("level", g))?;
    if !integral || !bounded {
        return Ok(0);
    }
    let k = k_invariant(g)?;
    if tr.at_least(1).ok_or_else(|| indeterminate("trace", g))? {
        return Ok(phi_from_invariants(n, q, true, Ell::Infinite, k));
    }
    // only the comparison of l(g) with n + k is needed in the last case
    let ell = match g.one_minus().det().valuation() {
        Valuation::Finite(v) => Ell::Finite(v),
        Valuation::Infinite => Ell::Infinite,
        Valuation::AtLeast(m) if m >= n as i32 + k => Ell::Infinite,
        Valuation::AtLeast(_) => return Err(indeterminate("l", g)),
    };
    Ok(phi_from_invariants(n, q, false, ell, k))
}

/// `[K : K_n] = q^{4(n-1)} (q^2 - 1)(q^2 - q)`.
pub fn gl2_level_index(n: u32, q: u32) -> Result<i128> {
    if n == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let q = q as i128;
    Ok(q.pow(4 * (n - 1)) * (q * q - 1) * (q * q - q))
}

/// `z_n(g) = (q-1)/[K:K_n] * phi_n(g)`.
pub fn scholze_z(n: u32, g: &Matrix2) -> Result<Ratio<i128>> {
    let q = g.field().order();
    let phi = scholze_phi(n, g)?;
    Ok(Ratio::new((q as i128 - 1) * phi, gl2_level_index(n, q)?))
}

/// Representatives `1 + pi^n X` of `K_n / K_{n+1}`, `X` running over
/// `M_2(F_q)`.
pub fn level_coset_representatives(field: &Arc<FiniteField>, n: u32) -> Vec<Matrix2> {
    let q = field.order();
    let one = Matrix2::identity(field.clone());
    let mono = |c| TruncatedSeries::monomial(field.clone(), c, n as i32);
    let mut out = Vec::with_capacity((q as usize).pow(4));
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    out.push(one.add(&Matrix2::new(mono(a), mono(b), mono(c), mono(d))));
                }
            }
        }
    }
    out
}

/// `sum_{k in K_n / K_{n+1}} z_{n+1}(g k) == z_n(g)`.
pub fn level_compatibility_check(n: u32, g: &Matrix2) -> Result<bool> {
    let mut sum = Ratio::from_integer(0);
    for k in level_coset_representatives(g.field(), n) {
        sum += scholze_z(n + 1, &g.mul(&k))?;
    }
    Ok(sum == scholze_z(n, g)?)
}

/// A random element of `K_n = 1 + pi^n M_2(O)` whose entries are exact
/// polynomials of degree below `n + degree`.
pub fn random_congruence_element<R: Rng>(field: &Arc<FiniteField>, n: u32, degree: usize, rng: &mut R) -> Matrix2 {
    let q = field.order();
    let mut entry = || {
        let coeffs = (0..degree).map(|_| rng.gen_range(0..q)).collect();
        TruncatedSeries::new(field.clone(), n as i32, coeffs, None)
    };
    let x = Matrix2::new(entry(), entry(), entry(), entry());
    Matrix2::identity(field.clone()).add(&x)
}

//! Laurent series over `F_q` in the uniformizer `t`, with explicit absolute
//! precision: a series is either an exact Laurent polynomial or is known
//! modulo `t^N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::finite_field::{FiniteField, Fq};

/// What is known about the valuation of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i32),
    /// Exactly zero.
    Infinite,
    /// Zero modulo `t^N`; the true valuation is at least `N`.
    AtLeast(i32),
}

impl Valuation {
    /// A lower bound, with `None` for an exact zero.
    pub fn lower_bound(self) -> Option<i32> {
        match self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `Some(true)` if the valuation is certainly `>= k`, `Some(false)` if
    /// certainly `< k`, `None` if undecided at this precision.
    pub fn at_least(self, k: i32) -> Option<bool> {
        match self {
            Valuation::Finite(v) => Some(v >= k),
            Valuation::Infinite => Some(true),
            Valuation::AtLeast(n) => (n >= k).then_some(true),
        }
    }
}

/// `sum_i coeffs[i] t^{low + i} + O(t^prec)`; `prec = None` means exact.
///
/// Normalized so that `coeffs` starts with a nonzero entry, ends with a
/// nonzero entry, and stores nothing at or beyond `prec`.
#[derive(Clone)]
pub struct TruncatedSeries {
    field: Arc<FiniteField>,
    low: i32,
    coeffs: Vec<Fq>,
    prec: Option<i32>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order()
            && self.low == other.low
            && self.coeffs == other.coeffs
            && self.prec == other.prec
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    pub fn new(field: Arc<FiniteField>, low: i32, coeffs: Vec<Fq>, prec: Option<i32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        let mut s = TruncatedSeries { field, low, coeffs, prec };
        s.normalize();
        s
    }

    pub fn zero(field: Arc<FiniteField>) -> Self {
        Self::new(field, 0, Vec::new(), None)
    }

    pub fn one(field: Arc<FiniteField>) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: Arc<FiniteField>, c: Fq) -> Self {
        Self::new(field, 0, vec![c], None)
    }

    /// `c * t^k`, exact.
    pub fn monomial(field: Arc<FiniteField>, c: Fq, k: i32) -> Self {
        Self::new(field, k, vec![c], None)
    }

    /// The zero series known only modulo `t^n`.
    pub fn big_o(field: Arc<FiniteField>, n: i32) -> Self {
        Self::new(field, n, Vec::new(), Some(n))
    }

    fn normalize(&mut self) {
        if let Some(p) = self.prec {
            let keep = (p - self.low).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        if self.coeffs.is_empty() {
            self.low = self.prec.unwrap_or(0);
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn precision(&self) -> Option<i32> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Forgets everything at and beyond `t^n`.
    pub fn truncate(&self, n: i32) -> Self {
        let prec = Some(self.prec.map_or(n, |p| p.min(n)));
        Self::new(self.field.clone(), self.low, self.coeffs.clone(), prec)
    }

    pub fn valuation(&self) -> Valuation {
        match (self.coeffs.is_empty(), self.prec) {
            (false, _) => Valuation::Finite(self.low),
            (true, None) => Valuation::Infinite,
            (true, Some(n)) => Valuation::AtLeast(n),
        }
    }

    /// The coefficient of `t^e`, or `None` if it lies beyond the precision.
    pub fn coeff(&self, e: i32) -> Option<Fq> {
        if self.prec.is_some_and(|p| e >= p) {
            return None;
        }
        let i = e - self.low;
        Some(if i < 0 { 0 } else { self.coeffs.get(i as usize).copied().unwrap_or(0) })
    }

    /// Stored terms `(exponent, coefficient)` with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Fq)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (self.low + i as i32, c))
    }

    /// `(low, coeffs)` of the stored part.
    pub fn raw(&self) -> (i32, &[Fq]) {
        (self.low, &self.coeffs)
    }

    pub fn scale(&self, c: Fq) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        let prec = if c == 0 { None } else { self.prec };
        Self::new(self.field.clone(), self.low, coeffs, prec)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self::new(self.field.clone(), self.low + k, self.coeffs.clone(), self.prec.map(|p| p + k))
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        debug_assert_eq!(self.field.order(), other.field.order());
        let f = &self.field;
        let prec = match (self.prec, other.prec) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let lo = match (self.coeffs.is_empty(), other.coeffs.is_empty()) {
            (true, true) => return Self::new(f.clone(), 0, Vec::new(), prec),
            (true, false) => other.low,
            (false, true) => self.low,
            (false, false) => self.low.min(other.low),
        };
        let hi = (self.low + self.coeffs.len() as i32).max(other.low + other.coeffs.len() as i32);
        let coeffs = (lo..hi)
            .map(|e| {
                let a = self.coeff(e).unwrap_or(0);
                let b = other.coeff(e).unwrap_or(0);
                if negate_other { f.sub(a, b) } else { f.add(a, b) }
            })
            .collect();
        Self::new(f.clone(), lo, coeffs, prec)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, false)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, true)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        let coeffs = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        TruncatedSeries::new(self.field.clone(), self.low, coeffs, self.prec)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let f = &self.field;
        let (va, vb) = (self.valuation(), rhs.valuation());
        if va == Valuation::Infinite || vb == Valuation::Infinite {
            return TruncatedSeries::zero(f.clone());
        }
        // (a + O(t^A)) (b + O(t^B)) = ab + O(t^{min(v(a) + B, v(b) + A)})
        let bound = |v: Valuation, p: Option<i32>| p.map(|p| v.lower_bound().expect("nonzero") + p);
        let prec = match (bound(va, rhs.prec), bound(vb, self.prec)) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        let mut coeffs = vec![0; (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1)];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        TruncatedSeries::new(f.clone(), self.low + rhs.low, coeffs, prec)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms()
            .map(|(e, c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (e, 1) => format!("t^{e}"),
                (e, c) => format!("{c}t^{e}"),
            })
            .collect();
        if let Some(p) = self.prec {
            parts.push(format!("O(t^{p})"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A 2x2 matrix `[[a, b], [c, d]]` over the series model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: TruncatedSeries,
    pub b: TruncatedSeries,
    pub c: TruncatedSeries,
    pub d: TruncatedSeries,
}

impl Matrix2 {
    pub fn new(a: TruncatedSeries, b: TruncatedSeries, c: TruncatedSeries, d: TruncatedSeries) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity(field: Arc<FiniteField>) -> Self {
        let one = TruncatedSeries::one(field.clone());
        let zero = TruncatedSeries::zero(field);
        Matrix2::new(one.clone(), zero.clone(), zero, one)
    }

    pub fn diag(x: TruncatedSeries, y: TruncatedSeries) -> Self {
        let zero = TruncatedSeries::zero(x.field().clone());
        Matrix2::new(x, zero.clone(), zero, y)
    }

    pub fn antidiag(x: TruncatedSeries, y: TruncatedSeries) -> Self {
        let zero = TruncatedSeries::zero(x.field().clone());
        Matrix2::new(zero.clone(), x, y, zero)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.a.field()
    }

    pub fn entries(&self) -> [&TruncatedSeries; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> TruncatedSeries {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> TruncatedSeries {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2::new(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }

    pub fn sub(&self, o: &Matrix2) -> Matrix2 {
        Matrix2::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    pub fn add(&self, o: &Matrix2) -> Matrix2 {
        Matrix2::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    /// Entrywise multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Matrix2 {
        Matrix2::new(self.a.shift(k), self.b.shift(k), self.c.shift(k), self.d.shift(k))
    }

    /// `1 - g`.
    pub fn one_minus(&self) -> Matrix2 {
        Matrix2::identity(self.field().clone()).sub(self)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

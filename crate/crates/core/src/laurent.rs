//! Exact integer Laurent polynomials in `v`, and ordinary polynomials in
//! `q = v^2`.
//!
//! Both types keep a dense coefficient vector trimmed of zeros at either end,
//! so equality is structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;

/// An element of `Z[v, v^-1]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    /// Exponent of `coeffs[0]`.
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: i64, exp: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    /// `q^exp = v^(2 exp)`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(1, 2 * exp)
    }

    /// `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Builds a polynomial from `(v exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out += &LaurentPoly::monomial(c, e);
        }
        out
    }

    fn from_raw(low: i32, mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let idx = exp as i64 - self.low as i64;
        if idx < 0 {
            return 0;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `v^exp`.
    pub fn shift(&self, exp: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + exp, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v -> v^r`.
    pub fn substitute_v_power(&self, r: u32) -> Self {
        assert!(r >= 1, "substitution exponent must be positive");
        Self::from_terms(self.terms().map(|(e, c)| (e * r as i32, c)))
    }

    /// True if only even powers of `v` occur, i.e. the element lies in
    /// `Z[q, q^-1]`.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Splits into `even + v * odd` with both parts in `Z[q, q^-1]`, and
    /// evaluates each part at the integer `q`.
    pub fn specialize_q(&self, q: i64) -> SpecializedValue {
        let mut even = Ratio::from_integer(0i128);
        let mut odd = Ratio::from_integer(0i128);
        let q = Ratio::from_integer(q as i128);
        for (e, c) in self.terms() {
            let (half, target) = if e.rem_euclid(2) == 0 {
                (e.div_euclid(2), &mut even)
            } else {
                ((e - 1).div_euclid(2), &mut odd)
            };
            *target += Ratio::from_integer(c as i128) * q.pow(half);
        }
        SpecializedValue { rational: even, sqrt_q_multiple: odd }
    }
}

/// The value `rational + sqrt_q_multiple * sqrt(q)` of a Laurent polynomial
/// at an integer `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedValue {
    pub rational: Ratio<i128>,
    pub sqrt_q_multiple: Ratio<i128>,
}

impl fmt::Display for SpecializedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt_q_multiple == Ratio::from_integer(0) {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{} + {}*sqrt(q)", self.rational, self.sqrt_q_multiple)
        }
    }
}

fn add_into(acc: &mut LaurentPoly, other: &LaurentPoly, sign: i64) {
    if other.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = other.scale(sign);
        return;
    }
    let low = acc.low.min(other.low);
    let high = acc.max_exponent().unwrap().max(other.max_exponent().unwrap());
    let mut coeffs = vec![0i64; (high - low + 1) as usize];
    for (i, c) in acc.coeffs.iter().enumerate() {
        coeffs[(acc.low - low) as usize + i] += c;
    }
    for (i, c) in other.coeffs.iter().enumerate() {
        coeffs[(other.low - low) as usize + i] += sign * c;
    }
    *acc = LaurentPoly::from_raw(low, coeffs);
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, -1);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_raw(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// A polynomial in `q` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::from_coeffs(vec![-1, 1])
    }

    /// `c * q^exp`.
    pub fn monomial(c: i64, exp: usize) -> Self {
        let mut coeffs = vec![0; exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    /// Coefficients in increasing degree.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, q: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * q as i128 + c as i128)
    }

    /// The same element of `Z[v, v^-1]`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i32, c)),
        )
    }

    /// Inverse of [`QPoly::to_laurent`]; `None` unless only nonnegative even
    /// powers of `v` occur.
    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        let mut coeffs = Vec::new();
        for (e, c) in p.terms() {
            if e < 0 || e % 2 != 0 {
                return None;
            }
            let i = (e / 2) as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, 0);
            }
            coeffs[i] = c;
        }
        Some(Self::from_coeffs(coeffs))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

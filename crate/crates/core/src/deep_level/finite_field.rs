//! Small finite fields `F_{p^r}` with log/exp tables.
//!
//! An element is stored as the integer whose base-`p` digits are its
//! coordinates in the basis `1, x, ..., x^{r-1}` of `F_p[x]/(m)`, where `m`
//! is the first primitive polynomial of degree `r` in lexicographic order.
//! In particular the prime subfield is `0..p`.

use crate::error::{Error, Result};

pub type Fq = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    r: u32,
    q: u32,
    exp: Vec<Fq>,
    log: Vec<u32>,
}

const MAX_ORDER: u32 = 1 << 16;

fn smallest_prime_factor(n: u32) -> u32 {
    (2..).take_while(|d| d * d <= n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

impl FiniteField {
    /// The field with `q` elements.
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&q) {
            return Err(Error::InvalidArgument(format!("unsupported field size {q}")));
        }
        let p = smallest_prime_factor(q);
        let mut r = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            r += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        Ok(Self::build(p, r))
    }

    pub fn with_prime_power(p: u32, r: u32) -> Result<Self> {
        if p < 2 || smallest_prime_factor(p) != p {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        match p.checked_pow(r) {
            Some(q) if r >= 1 && q <= MAX_ORDER => Ok(Self::build(p, r)),
            _ => Err(Error::InvalidArgument(format!("unsupported field size {p}^{r}"))),
        }
    }

    fn build(p: u32, r: u32) -> Self {
        if r == 1 {
            let g = Self::prime_root(p) as u64;
            let (exp, log) = Self::tables(p, |a| (a as u64 * g % p as u64) as Fq).expect("primitive root");
            return FiniteField { p, r, q: p, exp, log };
        }
        // monic x^r + (low digits), tried in order until x generates F_q^x
        for low in 1..p.pow(r) {
            let modulus = Self::digits(p, r, low);
            let times_x = |a: Fq| -> Fq {
                let mut d = Self::digits(p, r, a);
                let top = d.pop().unwrap_or(0);
                d.insert(0, 0);
                for (di, mi) in d.iter_mut().zip(&modulus) {
                    *di = (*di + (p - mi) * top) % p;
                }
                d.iter().rev().fold(0, |acc, &di| acc * p + di)
            };
            if let Some((exp, log)) = Self::tables(p.pow(r), times_x) {
                return FiniteField { p, r, q: p.pow(r), exp, log };
            }
        }
        unreachable!("a primitive polynomial exists in every degree")
    }

    fn digits(p: u32, r: u32, mut a: u32) -> Vec<u32> {
        (0..r)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    /// Powers of a candidate generator, or `None` if it has order below
    /// `q - 1`.
    fn tables(q: u32, step: impl Fn(Fq) -> Fq) -> Option<(Vec<Fq>, Vec<u32>)> {
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur: Fq = 1;
        for i in 0..q - 1 {
            if cur == 0 || log[cur as usize] != u32::MAX {
                return None;
            }
            log[cur as usize] = i;
            exp.push(cur);
            cur = step(cur);
        }
        (cur == 1).then_some((exp, log))
    }

    fn prime_root(p: u32) -> u32 {
        if p == 2 {
            return 1;
        }
        (2..p)
            .find(|&g| {
                let mut x = 1u64;
                (1..p - 1).all(|_| {
                    x = x * g as u64 % p as u64;
                    x != 1
                })
            })
            .expect("prime fields have primitive roots")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.q
    }

    pub fn units(&self) -> impl Iterator<Item = Fq> {
        1..self.q
    }

    pub fn contains(&self, a: Fq) -> bool {
        a < self.q
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.r == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.r {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.r == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.r {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        (a != 0).then(|| self.exp[((self.q - 1 - self.log[a as usize]) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: Fq, n: u64) -> Fq {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 * n) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    /// `N(a) = a * a^p * ... * a^{p^{r-1}}`, which lies in `F_p`.
    pub fn norm_to_prime_field(&self, a: Fq) -> Fq {
        let e = (self.q as u64 - 1) / (self.p as u64 - 1);
        self.pow(a, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
        assert!(FiniteField::with_prime_power(4, 1).is_err());
    }

    #[test]
    fn field_axioms_small_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.order(), q);
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            assert_eq!(f.units().map(|a| f.pow(a, q as u64 - 1)).filter(|&x| x != 1).count(), 0);
        }
    }

    #[test]
    fn prime_subfield_is_small_integers() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!(f.add(1, 2), 0);
        assert_eq!(f.mul(2, 2), 1);
    }

    #[test]
    fn norm_lands_in_prime_field_and_is_multiplicative() {
        for (p, r) in [(2, 2), (3, 2), (2, 3), (5, 1)] {
            let f = FiniteField::with_prime_power(p, r).unwrap();
            for a in f.units() {
                let n = f.norm_to_prime_field(a);
                assert!(n < p && n != 0);
                // agrees with the product of Galois conjugates
                let mut prod = 1;
                let mut conj = a;
                for _ in 0..r {
                    prod = f.mul(prod, conj);
                    conj = f.pow(conj, p as u64);
                }
                assert_eq!(prod, n);
                for b in f.units() {
                    assert_eq!(f.norm_to_prime_field(f.mul(a, b)), f.mul(n, f.norm_to_prime_field(b)));
                }
            }
            // surjective onto F_p^x
            let image: std::collections::BTreeSet<_> = f.units().map(|a| f.norm_to_prime_field(a)).collect();
            assert_eq!(image.len() as u32, p - 1);
        }
    }
}

//! Based root data of split reductive groups and their finite Weyl groups.
//!
//! Coweights are integer vectors in a fixed basis of the cocharacter lattice
//! `X_*(T)`; roots are integer vectors in the dual basis, so the pairing
//! `<lambda, alpha>` is the dot product. A coweight `mu` is dominant when
//! `<mu, alpha_i> >= 0` for every simple root; for `GL(n)` this is the
//! upper-triangular Borel and means nonincreasing coordinates.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the number of roots accepted while generating a root
/// system; larger counts mean the Cartan matrix is not of finite type.
const MAX_ROOTS: usize = 4096;
const MAX_WEYL_ORDER: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Coweight(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    /// The `i`-th standard basis vector of `Z^rank`.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Coweight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }

    /// Pairing with a character given in the dual basis.
    pub fn pair(&self, character: &[i64]) -> i64 {
        self.0.iter().zip(character).map(|(a, b)| a * b).sum()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GL,
    SL,
    Sp,
    GSp,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::SL => "SL",
            Family::Sp => "Sp",
            Family::GSp => "GSp",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Family::GL),
            "SL" => Ok(Family::SL),
            "SP" => Ok(Family::Sp),
            "GSP" => Ok(Family::GSp),
            _ => Err(Error::UnsupportedGroup(s.to_string())),
        }
    }
}

/// A positive root together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Character, in the dual basis.
    pub root: Vec<i64>,
    /// Cocharacter, in the lattice basis.
    pub coroot: Vec<i64>,
    /// Coefficients with respect to the simple roots.
    pub simple_coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }
}

/// Index of an element of the finite Weyl group of a particular
/// [`RootDatum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeylElement(pub(crate) u32);

impl FiniteWeylElement {
    pub const IDENTITY: FiniteWeylElement = FiniteWeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct WeylEntry {
    /// Shortlex-minimal reduced word in 0-based simple reflection indices.
    word: Vec<usize>,
    /// Row-major action on coweights.
    matrix: Vec<i64>,
}

/// The finite Weyl group, fully enumerated.
#[derive(Clone, Debug)]
pub struct FiniteWeylGroup {
    rank: usize,
    elements: Vec<WeylEntry>,
    lookup: HashMap<Vec<i64>, u32>,
    inverse: Vec<u32>,
    /// `inverse_flips[w][j]` is true when `w^-1` sends the `j`-th positive
    /// root to a negative root.
    inverse_flips: Vec<Vec<bool>>,
    simple: Vec<u32>,
}

impl FiniteWeylGroup {
    fn build(rank: usize, simple_roots: &[Vec<i64>], simple_coroots: &[Vec<i64>], roots: &RootIndex) -> Result<Self> {
        let identity = identity_of(rank);
        let gens: Vec<Vec<i64>> = simple_roots
            .iter()
            .zip(simple_coroots)
            .map(|(a, c)| {
                (0..rank * rank)
                    .map(|k| {
                        let (r, col) = (k / rank, k % rank);
                        identity[k] - c[r] * a[col]
                    })
                    .collect()
            })
            .collect();

        let mut elements = vec![WeylEntry { word: vec![], matrix: identity.clone() }];
        let mut lookup = HashMap::from([(identity, 0u32)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(&elements[idx].matrix, g, rank);
                if lookup.contains_key(&m) {
                    continue;
                }
                if elements.len() >= MAX_WEYL_ORDER {
                    return Err(Error::InvalidRootDatum("Weyl group too large".into()));
                }
                let mut word = elements[idx].word.clone();
                word.push(i);
                lookup.insert(m.clone(), elements.len() as u32);
                elements.push(WeylEntry { word, matrix: m });
                queue.push_back(elements.len() - 1);
            }
        }

        let inverse = elements
            .iter()
            .map(|e| {
                let m = e.word.iter().rev().fold(identity_of(rank), |acc, &i| mat_mul(&acc, &gens[i], rank));
                lookup[&m]
            })
            .collect();

        let inverse_flips = elements
            .iter()
            .map(|e| {
                roots
                    .positive
                    .iter()
                    .map(|alpha| {
                        // w^-1 alpha = alpha . M_w as a row vector
                        let image: Vec<i64> = (0..rank)
                            .map(|c| (0..rank).map(|r| alpha[r] * e.matrix[r * rank + c]).sum())
                            .collect();
                        match roots.sign(&image) {
                            Some(positive) => !positive,
                            None => unreachable!("Weyl group permutes roots"),
                        }
                    })
                    .collect()
            })
            .collect();

        let simple = gens.iter().map(|g| lookup[g]).collect();
        Ok(FiniteWeylGroup { rank, elements, lookup, inverse, inverse_flips, simple })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = FiniteWeylElement> {
        (0..self.elements.len() as u32).map(FiniteWeylElement)
    }

    /// The simple reflection `s_i` (0-based).
    pub fn simple(&self, i: usize) -> FiniteWeylElement {
        FiniteWeylElement(self.simple[i])
    }

    /// Shortlex-minimal reduced word, 0-based simple reflection indices.
    pub fn word(&self, w: FiniteWeylElement) -> &[usize] {
        &self.elements[w.index()].word
    }

    pub fn length(&self, w: FiniteWeylElement) -> usize {
        self.word(w).len()
    }

    pub fn from_word(&self, word: &[usize]) -> Option<FiniteWeylElement> {
        let mut w = FiniteWeylElement::IDENTITY;
        for &i in word {
            if i >= self.simple.len() {
                return None;
            }
            w = self.mul(w, self.simple(i));
        }
        Some(w)
    }

    pub fn mul(&self, a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement {
        let m = mat_mul(&self.elements[a.index()].matrix, &self.elements[b.index()].matrix, self.rank);
        FiniteWeylElement(self.lookup[&m])
    }

    pub fn inverse(&self, w: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.inverse[w.index()])
    }

    pub fn act(&self, w: FiniteWeylElement, lambda: &Coweight) -> Coweight {
        let m = &self.elements[w.index()].matrix;
        let r = self.rank;
        Coweight((0..r).map(|i| (0..r).map(|j| m[i * r + j] * lambda.0[j]).sum()).collect())
    }

    /// Whether `w^-1` sends the `j`-th positive root to a negative root.
    pub fn inverse_flips(&self, w: FiniteWeylElement, j: usize) -> bool {
        self.inverse_flips[w.index()][j]
    }
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn identity_of(n: usize) -> Vec<i64> {
    (0..n * n).map(|k| (k / n == k % n) as i64).collect()
}

#[derive(Clone, Debug, Default)]
struct RootIndex {
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, (usize, bool)>,
}

impl RootIndex {
    /// `Some(true)` for positive roots, `Some(false)` for negative roots.
    fn sign(&self, v: &[i64]) -> Option<bool> {
        self.index.get(v).map(|&(_, s)| s)
    }
}

/// A based root datum with its positive roots and finite Weyl group stored
/// fully expanded.
#[derive(Clone, Debug)]
pub struct RootDatum {
    family: Family,
    name: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    two_rho: Vec<i64>,
    components: Vec<Vec<usize>>,
    highest_roots: Vec<usize>,
    roots: RootIndex,
    weyl: FiniteWeylGroup,
}

impl RootDatum {
    /// The standard based root datum of `family` and size `n`. For `Sp` and
    /// `GSp`, `n` is the matrix size `2m`.
    pub fn build(family: Family, n: usize) -> Result<Self> {
        let bad = || Error::UnsupportedGroup(format!("{family}({n})"));
        match family {
            Family::GL => {
                if n < 1 {
                    return Err(bad());
                }
                let (roots, coroots): (Vec<_>, Vec<_>) =
                    (0..n - 1).map(|i| (diff(n, i, i + 1), diff(n, i, i + 1))).unzip();
                Self::from_simple(family, format!("GL({n})"), n, roots, coroots)
            }
            Family::SL => {
                if n < 2 {
                    return Err(bad());
                }
                // Lattice basis = simple coroots; alpha_j pairs with alpha_i^v to A_ij.
                let r = n - 1;
                let cartan = type_a_cartan(r);
                let roots = (0..r).map(|j| (0..r).map(|i| cartan[i][j]).collect()).collect();
                let coroots = (0..r).map(|i| Coweight::basis(r, i).0).collect();
                Self::from_simple(family, format!("SL({n})"), r, roots, coroots)
            }
            Family::Sp => {
                if n < 2 || !n.is_multiple_of(2) {
                    return Err(bad());
                }
                let m = n / 2;
                let mut roots: Vec<Vec<i64>> = (0..m - 1).map(|i| diff(m, i, i + 1)).collect();
                let mut coroots = roots.clone();
                roots.push(Coweight::basis(m, m - 1).scale(2).0);
                coroots.push(Coweight::basis(m, m - 1).0);
                Self::from_simple(family, format!("Sp({n})"), m, roots, coroots)
            }
            Family::GSp => {
                if n < 2 || !n.is_multiple_of(2) {
                    return Err(bad());
                }
                // coordinates (a_1, .., a_m, c) for diag(t_1..t_m, c/t_m .. c/t_1)
                let m = n / 2;
                let r = m + 1;
                let mut roots: Vec<Vec<i64>> = (0..m - 1).map(|i| diff(r, i, i + 1)).collect();
                let mut coroots = roots.clone();
                let mut long = Coweight::basis(r, m - 1).scale(2).0;
                long[m] = -1;
                roots.push(long);
                coroots.push(Coweight::basis(r, m - 1).0);
                Self::from_simple(family, format!("GSp({n})"), r, roots, coroots)
            }
            Family::Custom => Err(Error::UnsupportedGroup(
                "custom root data are loaded from a config file".into(),
            )),
        }
    }

    /// Builds and validates a root datum from simple roots (dual basis) and
    /// simple coroots (lattice basis).
    pub fn from_simple(
        family: Family,
        name: String,
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let invalid = |m: String| Error::InvalidRootDatum(m);
        if simple_roots.len() != simple_coroots.len() {
            return Err(invalid("simple roots and coroots differ in number".into()));
        }
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(invalid(format!("vectors must have length {rank}")));
        }
        let s = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..s)
            .map(|i| (0..s).map(|j| dot(&simple_coroots[i], &simple_roots[j])).collect())
            .collect();
        for i in 0..s {
            if cartan[i][i] != 2 {
                return Err(invalid(format!("<a{i}^v, a{i}> = {} != 2", cartan[i][i])));
            }
            for j in 0..s {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(invalid(format!("entry ({i},{j}) violates the Cartan matrix axioms")));
                }
            }
        }

        // Orbit of (root, coroot) pairs in simple-root / simple-coroot coordinates.
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..s {
            let e = Coweight::basis(s, i).0;
            seen.insert(e.clone(), e.clone());
            queue.push_back((e.clone(), e));
        }
        while let Some((rc, cc)) = queue.pop_front() {
            for j in 0..s {
                let pr: i64 = (0..s).map(|k| rc[k] * cartan[j][k]).sum();
                let pc: i64 = (0..s).map(|k| cc[k] * cartan[k][j]).sum();
                let mut r2 = rc.clone();
                r2[j] -= pr;
                let mut c2 = cc.clone();
                c2[j] -= pc;
                if !seen.contains_key(&r2) {
                    if seen.len() >= MAX_ROOTS {
                        return Err(invalid("Cartan matrix is not of finite type".into()));
                    }
                    seen.insert(r2.clone(), c2.clone());
                    queue.push_back((r2, c2));
                }
            }
        }

        let mut positive_roots: Vec<Root> = seen
            .into_iter()
            .filter(|(rc, _)| rc.iter().all(|&c| c >= 0))
            .map(|(rc, cc)| Root {
                root: combine(&rc, &simple_roots, rank),
                coroot: combine(&cc, &simple_coroots, rank),
                simple_coeffs: rc,
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height().cmp(&b.height()).then_with(|| b.simple_coeffs.cmp(&a.simple_coeffs))
        });

        let mut roots = RootIndex::default();
        for (j, r) in positive_roots.iter().enumerate() {
            let neg: Vec<i64> = r.root.iter().map(|c| -c).collect();
            if roots.index.insert(r.root.clone(), (j, true)).is_some() || roots.index.insert(neg, (j, false)).is_some() {
                return Err(invalid("simple roots are not linearly independent".into()));
            }
            roots.positive.push(r.root.clone());
        }

        let mut two_rho = vec![0; rank];
        for r in &positive_roots {
            for (t, c) in two_rho.iter_mut().zip(&r.root) {
                *t += c;
            }
        }

        let components = dynkin_components(&cartan);
        let highest_roots = components
            .iter()
            .map(|comp| {
                positive_roots
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| {
                        r.simple_coeffs.iter().enumerate().all(|(k, &c)| c == 0 || comp.contains(&k))
                    })
                    .max_by_key(|(_, r)| r.height())
                    .map(|(j, _)| j)
                    .expect("component has a root")
            })
            .collect();

        let weyl = FiniteWeylGroup::build(rank, &simple_roots, &simple_coroots, &roots)?;

        Ok(RootDatum {
            family,
            name,
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            positive_roots,
            two_rho,
            components,
            highest_roots,
            roots,
            weyl,
        })
    }

    /// The standard Levi subgroup generated by the given simple roots
    /// (0-based indices), on the same cocharacter lattice.
    pub fn levi(&self, simple: &[usize]) -> Result<RootDatum> {
        let mut idx: Vec<usize> = simple.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.simple_roots.len()) {
            return Err(Error::InvalidLevi(format!("no simple root with index {bad}")));
        }
        let roots = idx.iter().map(|&i| self.simple_roots[i].clone()).collect();
        let coroots = idx.iter().map(|&i| self.simple_coroots[i].clone()).collect();
        let labels: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
        let name = if labels.is_empty() {
            format!("{}[torus]", self.name)
        } else {
            format!("{}[levi {}]", self.name, labels.join(","))
        };
        RootDatum::from_simple(Family::Custom, name, self.rank, roots, coroots)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of the cocharacter lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `Some(true)` if `character` is a positive root, `Some(false)` if it is
    /// a negative root, `None` otherwise.
    pub fn root_sign(&self, character: &[i64]) -> Option<bool> {
        self.roots.sign(character)
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// Simple-root indices of each irreducible component of the Dynkin
    /// diagram.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Highest root of each component.
    pub fn highest_root(&self, component: usize) -> &Root {
        &self.positive_roots[self.highest_roots[component]]
    }

    pub fn weyl(&self) -> &FiniteWeylGroup {
        &self.weyl
    }

    /// The finite Weyl element for a character that is a root, with its
    /// reflection.
    pub fn reflection(&self, root: &Root) -> FiniteWeylElement {
        let r = self.rank;
        let m: Vec<i64> = (0..r * r)
            .map(|k| {
                let (i, j) = (k / r, k % r);
                (i == j) as i64 - root.coroot[i] * root.root[j]
            })
            .collect();
        FiniteWeylElement(self.weyl.lookup[&m])
    }

    pub fn check_rank(&self, lambda: &Coweight) -> Result<()> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: lambda.clone() });
        }
        Ok(())
    }

    /// `<lambda, 2 rho>`.
    pub fn pair_two_rho(&self, lambda: &Coweight) -> i64 {
        lambda.pair(&self.two_rho)
    }

    pub fn is_dominant(&self, lambda: &Coweight) -> bool {
        self.simple_roots.iter().all(|a| lambda.pair(a) >= 0)
    }

    pub fn require_dominant(&self, lambda: &Coweight) -> Result<()> {
        self.check_rank(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(())
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^v`.
    pub fn reflect(&self, i: usize, lambda: &Coweight) -> Coweight {
        let p = lambda.pair(&self.simple_roots[i]);
        Coweight(lambda.0.iter().zip(&self.simple_coroots[i]).map(|(l, c)| l - p * c).collect())
    }

    /// The unique dominant element of the Weyl orbit of `lambda`.
    pub fn dominant_representative(&self, lambda: &Coweight) -> Coweight {
        let mut x = lambda.clone();
        'outer: loop {
            for (i, a) in self.simple_roots.iter().enumerate() {
                if x.pair(a) < 0 {
                    x = self.reflect(i, &x);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// The full `W_0`-orbit of `lambda`.
    pub fn weyl_orbit(&self, lambda: &Coweight) -> BTreeSet<Coweight> {
        let mut orbit = BTreeSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.simple_roots.len() {
                let y = self.reflect(i, &x);
                if orbit.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        orbit
    }

    /// True iff `<mu, alpha>` lies in `{0, 1}` for every positive root.
    pub fn is_minuscule(&self, mu: &Coweight) -> Result<bool> {
        self.require_dominant(mu)?;
        Ok(self.positive_roots.iter().all(|r| matches!(mu.pair(&r.root), 0 | 1)))
    }

    /// Orbit-invariant size of a coweight: the largest absolute coordinate
    /// over its Weyl orbit.
    pub fn height(&self, lambda: &Coweight) -> i64 {
        self.weyl_orbit(lambda).iter().map(Coweight::max_abs).max().unwrap_or(0)
    }

    /// Sum of the positive coroots; pairs to 2 with every simple root.
    pub fn two_rho_check(&self) -> Coweight {
        let mut v = vec![0; self.rank];
        for r in &self.positive_roots {
            for (t, c) in v.iter_mut().zip(&r.coroot) {
                *t += c;
            }
        }
        Coweight(v)
    }

    /// Dominant coweights with all coordinates in `[-bound, bound]`, sorted.
    pub fn dominant_coweights_in_box(&self, bound: i64) -> Vec<Coweight> {
        let mut out = Vec::new();
        let mut cur = vec![-bound; self.rank];
        loop {
            let c = Coweight(cur.clone());
            if self.is_dominant(&c) {
                out.push(c);
            }
            let mut k = 0;
            loop {
                if k == self.rank {
                    return out;
                }
                if cur[k] < bound {
                    cur[k] += 1;
                    break;
                }
                cur[k] = -bound;
                k += 1;
            }
        }
    }

    /// Minuscule dominant coweights with all coordinates in `[-bound, bound]`.
    pub fn minuscule_coweights_in_box(&self, bound: i64) -> Vec<Coweight> {
        self.dominant_coweights_in_box(bound)
            .into_iter()
            .filter(|mu| self.is_minuscule(mu).unwrap_or(false))
            .collect()
    }
}

fn diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(coeffs: &[i64], vectors: &[Vec<i64>], rank: usize) -> Vec<i64> {
    let mut out = vec![0; rank];
    for (c, v) in coeffs.iter().zip(vectors) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

fn type_a_cartan(r: usize) -> Vec<Vec<i64>> {
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

fn dynkin_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![];
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if comp[j] == usize::MAX && cartan[i][j] != 0 {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

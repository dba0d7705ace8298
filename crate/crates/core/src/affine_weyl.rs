//! The extended affine Weyl group `W~ = X_*(T) x| W_0`.
//!
//! Elements are stored in the normal form `t_lambda * w` (translation on the
//! left) and act on the apartment by `v -> lambda + w(v)`. The base alcove is
//! the alcove in the dominant chamber whose closure contains the origin, so
//! the length of `t_lambda w` is
//!
//! ```text
//!   sum_{a > 0, w^-1 a > 0} |<lambda, a>|  +  sum_{a > 0, w^-1 a < 0} |<lambda, a> - 1|.
//! ```
//!
//! Affine simple reflections are the reflections in the walls of the base
//! alcove. They are numbered as follows: the finite simple reflection
//! `s_i` (simple root `i`, counted from 1) has number `i`; the extra
//! reflection `s_0 = t_{theta^v} s_theta` of the first irreducible component
//! has number `0`; extra reflections of further components `c = 1, 2, ..`
//! have numbers `r + c` where `r` is the semisimple rank.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::root_datum::{Coweight, Family, FiniteWeylElement, RootDatum};

/// An element `t_lambda * w` of the extended affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    pub translation: Coweight,
    pub finite: FiniteWeylElement,
}

impl AffineWeylElement {
    pub fn translation(lambda: Coweight) -> Self {
        AffineWeylElement { translation: lambda, finite: FiniteWeylElement::IDENTITY }
    }

    pub fn is_translation(&self) -> bool {
        self.finite == FiniteWeylElement::IDENTITY
    }
}

/// A class in `X_*(T) / Q^v`, stored as a canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaElement(pub Coweight);

impl fmt::Display for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `x = s_{word[0]} ... s_{word[k-1]} * omega` with `k = l(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub word: Vec<usize>,
    pub omega: AffineWeylElement,
}

type PairCache = Mutex<HashMap<(AffineWeylElement, AffineWeylElement), bool>>;

pub struct AffineWeylGroup {
    rd: RootDatum,
    /// Indexed by reflection number; `None` for unused numbers.
    reflections: Vec<Option<AffineWeylElement>>,
    ids: Vec<usize>,
    /// Echelon basis of the coroot lattice as `(pivot column, row)`.
    coroot_echelon: Vec<(usize, Vec<i64>)>,
    grade_column: Option<usize>,
    bruhat_cache: PairCache,
    word_cache: Mutex<HashMap<AffineWeylElement, Arc<ReducedWord>>>,
}

impl fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineWeylGroup").field("root_datum", &self.rd.name()).finish()
    }
}

impl AffineWeylGroup {
    pub fn new(rd: RootDatum) -> Self {
        let r = rd.semisimple_rank();
        let n_comp = rd.components().len();
        let mut reflections = vec![None; r + n_comp.max(1)];
        for i in 0..r {
            reflections[i + 1] = Some(AffineWeylElement {
                translation: Coweight::zero(rd.rank()),
                finite: rd.weyl().simple(i),
            });
        }
        for c in 0..n_comp {
            let theta = rd.highest_root(c);
            let s0 = AffineWeylElement {
                translation: Coweight::new(theta.coroot.clone()),
                finite: rd.reflection(theta),
            };
            let id = if c == 0 { 0 } else { r + c };
            reflections[id] = Some(s0);
        }
        let ids = (0..reflections.len()).filter(|&i| reflections[i].is_some()).collect();

        let coroot_echelon = echelon(rd.simple_coroots(), rd.rank());
        let grade_column = if coroot_echelon.len() + 1 == rd.rank()
            && coroot_echelon.iter().all(|(p, row)| row[*p] == 1)
        {
            (0..rd.rank()).find(|c| coroot_echelon.iter().all(|(p, _)| p != c))
        } else {
            None
        };

        AffineWeylGroup {
            rd,
            reflections,
            ids,
            coroot_echelon,
            grade_column,
            bruhat_cache: Mutex::new(HashMap::new()),
            word_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement::translation(Coweight::zero(self.rank()))
    }

    pub fn translation(&self, lambda: &Coweight) -> AffineWeylElement {
        AffineWeylElement::translation(lambda.clone())
    }

    /// Numbers of the affine simple reflections, increasing.
    pub fn simple_reflection_ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn simple_reflection(&self, id: usize) -> Result<&AffineWeylElement> {
        self.reflections.get(id).and_then(Option::as_ref).ok_or(Error::UnknownReflection(id))
    }

    fn refl(&self, id: usize) -> &AffineWeylElement {
        self.reflections[id].as_ref().expect("valid reflection id")
    }

    /// The affine reflection numbers belonging to each irreducible component
    /// (its extra reflection first).
    pub fn component_reflections(&self) -> Vec<Vec<usize>> {
        let r = self.rd.semisimple_rank();
        self.rd
            .components()
            .iter()
            .enumerate()
            .map(|(c, simples)| {
                let mut ids = vec![if c == 0 { 0 } else { r + c }];
                ids.extend(simples.iter().map(|i| i + 1));
                ids
            })
            .collect()
    }

    /// `(t_l w)(t_n u) = t_{l + w(n)} (w u)`.
    pub fn multiply(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
        let weyl = self.rd.weyl();
        AffineWeylElement {
            translation: x.translation.add(&weyl.act(x.finite, &y.translation)),
            finite: weyl.mul(x.finite, y.finite),
        }
    }

    pub fn inverse(&self, x: &AffineWeylElement) -> AffineWeylElement {
        let weyl = self.rd.weyl();
        let winv = weyl.inverse(x.finite);
        AffineWeylElement { translation: weyl.act(winv, &x.translation).neg(), finite: winv }
    }

    /// Left multiplication by the affine simple reflection `id`.
    pub fn left_reflect(&self, id: usize, x: &AffineWeylElement) -> AffineWeylElement {
        self.multiply(self.refl(id), x)
    }

    pub fn right_reflect(&self, x: &AffineWeylElement, id: usize) -> AffineWeylElement {
        self.multiply(x, self.refl(id))
    }

    /// Iwahori-Matsumoto length.
    pub fn length(&self, x: &AffineWeylElement) -> usize {
        let weyl = self.rd.weyl();
        self.rd
            .positive_roots()
            .iter()
            .enumerate()
            .map(|(j, r)| {
                let p = x.translation.pair(&r.root);
                if weyl.inverse_flips(x.finite, j) {
                    (p - 1).unsigned_abs()
                } else {
                    p.unsigned_abs()
                }
            })
            .sum::<u64>() as usize
    }

    /// Affine simple reflections `s` with `l(s x) < l(x)`.
    pub fn left_descents(&self, x: &AffineWeylElement) -> Vec<usize> {
        let l = self.length(x);
        self.ids.iter().copied().filter(|&id| self.length(&self.left_reflect(id, x)) < l).collect()
    }

    fn first_left_descent(&self, x: &AffineWeylElement, l: usize) -> Option<(usize, AffineWeylElement)> {
        self.ids.iter().find_map(|&id| {
            let sx = self.left_reflect(id, x);
            (self.length(&sx) < l).then_some((id, sx))
        })
    }

    /// Reduced word and length-zero part: `x = s_{i_1} ... s_{i_k} omega`.
    /// The word is built greedily from the smallest-numbered left descent.
    pub fn reduced_word(&self, x: &AffineWeylElement) -> Arc<ReducedWord> {
        if let Some(w) = self.word_cache.lock().unwrap().get(x) {
            return Arc::clone(w);
        }
        let mut word = Vec::new();
        let mut cur = x.clone();
        let mut l = self.length(&cur);
        while l > 0 {
            let (id, next) = self.first_left_descent(&cur, l).expect("positive length has a descent");
            word.push(id);
            cur = next;
            l -= 1;
        }
        let rw = Arc::new(ReducedWord { word, omega: cur });
        self.word_cache.lock().unwrap().insert(x.clone(), Arc::clone(&rw));
        rw
    }

    /// Evaluates `s_{word[0]} ... s_{word[k-1]} * omega`.
    pub fn evaluate_word(&self, word: &[usize], omega: &AffineWeylElement) -> AffineWeylElement {
        word.iter().rev().fold(omega.clone(), |acc, &id| self.left_reflect(id, &acc))
    }

    /// Canonical representative of `lambda` modulo the coroot lattice.
    pub fn reduce_mod_coroots(&self, lambda: &Coweight) -> Coweight {
        let mut v = lambda.0.clone();
        for (p, row) in &self.coroot_echelon {
            let k = v[*p].div_euclid(row[*p]);
            if k != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= k * b;
                }
            }
        }
        Coweight(v)
    }

    /// Image in `Omega = X_*(T) / Q^v`.
    pub fn kottwitz_image(&self, x: &AffineWeylElement) -> OmegaElement {
        OmegaElement(self.reduce_mod_coroots(&x.translation))
    }

    pub fn omega_of_coweight(&self, lambda: &Coweight) -> OmegaElement {
        OmegaElement(self.reduce_mod_coroots(lambda))
    }

    /// When `Omega` is infinite cyclic with the standard generator read off a
    /// single coordinate (e.g. `GL(n)`, where it is the coordinate sum), the
    /// integer grade of `omega`.
    pub fn omega_grade(&self, omega: &OmegaElement) -> Option<i64> {
        self.grade_column.map(|c| omega.0 .0[c])
    }

    /// A label for `omega`: the integer grade when available, else the
    /// canonical representative.
    pub fn omega_label(&self, omega: &OmegaElement) -> String {
        match self.omega_grade(omega) {
            Some(g) => g.to_string(),
            None => omega.0.to_string(),
        }
    }

    /// The length-zero element of `W~` in the class `omega`.
    pub fn omega_element(&self, omega: &OmegaElement) -> AffineWeylElement {
        self.reduced_word(&self.translation(&omega.0)).omega.clone()
    }

    /// Length-zero elements in the classes of the lattice basis vectors; they
    /// generate `Omega`.
    pub fn omega_generators(&self) -> Vec<AffineWeylElement> {
        let mut seen = BTreeSet::new();
        for i in 0..self.rank() {
            let o = self.omega_of_coweight(&Coweight::basis(self.rank(), i));
            if !o.0.is_zero() {
                seen.insert(self.omega_element(&o));
            }
        }
        seen.into_iter().collect()
    }

    /// Bruhat order. Elements in different `Omega`-components are
    /// incomparable; within a component the recursion uses a left descent
    /// `s` of `y`: `x <= y` iff `min(x, sx) <= sy`.
    pub fn bruhat_leq(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> bool {
        if x == y {
            return true;
        }
        if self.kottwitz_image(x) != self.kottwitz_image(y) {
            return false;
        }
        self.bruhat_leq_same_component(x, y)
    }

    fn bruhat_leq_same_component(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> bool {
        if x == y {
            return true;
        }
        let (lx, ly) = (self.length(x), self.length(y));
        if lx >= ly {
            return false;
        }
        let key = (x.clone(), y.clone());
        if let Some(&b) = self.bruhat_cache.lock().unwrap().get(&key) {
            return b;
        }
        let (s, sy) = self.first_left_descent(y, ly).expect("positive length has a descent");
        let sx = self.left_reflect(s, x);
        let result = if self.length(&sx) < lx {
            self.bruhat_leq_same_component(&sx, &sy)
        } else {
            self.bruhat_leq_same_component(x, &sy)
        };
        self.bruhat_cache.lock().unwrap().insert(key, result);
        result
    }

    /// Elements covered by `y` in the Bruhat order: delete one letter of a
    /// reduced word and keep the results of length `l(y) - 1`.
    pub fn bruhat_coatoms(&self, y: &AffineWeylElement) -> BTreeSet<AffineWeylElement> {
        let rw = self.reduced_word(y);
        let target = rw.word.len().wrapping_sub(1);
        let mut out = BTreeSet::new();
        for j in 0..rw.word.len() {
            let mut w = rw.word.clone();
            w.remove(j);
            let z = self.evaluate_word(&w, &rw.omega);
            if self.length(&z) == target {
                out.insert(z);
            }
        }
        out
    }

    /// Downward Bruhat closure of a set of elements.
    pub fn lower_closure<I: IntoIterator<Item = AffineWeylElement>>(&self, tops: I) -> BTreeSet<AffineWeylElement> {
        let mut seen: BTreeSet<AffineWeylElement> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for t in tops {
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
        while let Some(y) = queue.pop_front() {
            for z in self.bruhat_coatoms(&y) {
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
        seen
    }

    /// `Adm(mu) = { x : x <= t_lambda for some lambda in W_0 mu }`.
    pub fn admissible_set(&self, mu: &Coweight) -> Result<BTreeSet<AffineWeylElement>> {
        self.rd.require_dominant(mu)?;
        Ok(self.lower_closure(self.rd.weyl_orbit(mu).into_iter().map(AffineWeylElement::translation)))
    }

    /// Critical indices `{ j : x <= t_{e_j} }` (1-based) for `GL(n)`.
    pub fn critical_indices(&self, x: &AffineWeylElement) -> Result<BTreeSet<usize>> {
        if self.rd.family() != Family::GL {
            return Err(Error::NotGeneralLinear(self.rd.name().to_string()));
        }
        self.rd.check_rank(&x.translation)?;
        let n = self.rank();
        Ok((0..n)
            .filter(|&j| self.bruhat_leq(x, &self.translation(&Coweight::basis(n, j))))
            .map(|j| j + 1)
            .collect())
    }

    /// All elements of length at most `max_len` in the `W_aff`-cosets of the
    /// given length-zero elements.
    pub fn elements_up_to_length(&self, omegas: &[AffineWeylElement], max_len: usize) -> BTreeSet<AffineWeylElement> {
        let mut seen: HashSet<AffineWeylElement> = omegas.iter().cloned().collect();
        let mut frontier: Vec<AffineWeylElement> = omegas.to_vec();
        for l in 0..max_len {
            let mut next = Vec::new();
            for x in &frontier {
                for &id in &self.ids {
                    let sx = self.left_reflect(id, x);
                    if self.length(&sx) == l + 1 && seen.insert(sx.clone()) {
                        next.push(sx);
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    /// Finite-word representation used in serialized output: 1-based simple
    /// reflection numbers.
    pub fn finite_word(&self, x: &AffineWeylElement) -> Vec<usize> {
        self.rd.weyl().word(x.finite).iter().map(|i| i + 1).collect()
    }

    pub fn element_from_parts(&self, translation: Coweight, finite_word: &[usize]) -> Result<AffineWeylElement> {
        self.rd.check_rank(&translation)?;
        let zero_based: Option<Vec<usize>> = finite_word.iter().map(|&i| i.checked_sub(1)).collect();
        let finite = zero_based
            .and_then(|w| self.rd.weyl().from_word(&w))
            .ok_or_else(|| Error::InvalidArgument(format!("bad finite word {finite_word:?}")))?;
        Ok(AffineWeylElement { translation, finite })
    }

    /// Human-readable form `t(1,0)*s1s2`.
    pub fn display(&self, x: &AffineWeylElement) -> String {
        let word = self.finite_word(x);
        if word.is_empty() {
            format!("t{}", x.translation)
        } else {
            let w: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
            format!("t{}*{}", x.translation, w.join(""))
        }
    }

    /// Sort key used for deterministic output: length, then translation,
    /// then finite word.
    pub fn output_key(&self, x: &AffineWeylElement) -> (usize, Vec<i64>, Vec<usize>) {
        (self.length(x), x.translation.0.clone(), self.finite_word(x))
    }
}

/// Row echelon form over `Z` of linearly independent rows, returned as
/// `(pivot column, row)` with positive pivots and increasing pivot columns.
fn echelon(rows: &[Vec<i64>], n: usize) -> Vec<(usize, Vec<i64>)> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut out = Vec::new();
    let mut col = 0;
    while !m.is_empty() && col < n {
        // Euclid on column `col` until at most one row is nonzero there.
        loop {
            let nonzero: Vec<usize> = (0..m.len()).filter(|&i| m[i][col] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| m[i][col].abs()).unwrap();
            for &i in &nonzero {
                if i != piv {
                    let k = m[i][col].div_euclid(m[piv][col]);
                    let prow = m[piv].clone();
                    for (a, b) in m[i].iter_mut().zip(&prow) {
                        *a -= k * b;
                    }
                }
            }
        }
        if let Some(i) = (0..m.len()).find(|&i| m[i][col] != 0) {
            let mut row = m.remove(i);
            if row[col] < 0 {
                row.iter_mut().for_each(|a| *a = -*a);
            }
            out.push((col, row));
        }
        m.retain(|r| r.iter().any(|&a| a != 0));
        col += 1;
    }
    out
}

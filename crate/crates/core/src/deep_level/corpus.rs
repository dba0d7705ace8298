//! Text corpora of `GL_2(F)` matrices for the Scholze evaluators, a
//! deterministic generator, and CSV output.
//!
//! Format, one item per line, `#` starts a comment:
//!
//! ```text
//! q 2
//! precision 12
//! 1:1 0 0 0:1
//! ```
//!
//! A matrix line lists `a b c d` for `[[a, b], [c, d]]`. An entry is `0` or
//! `v:c0,c1,...` for `t^v (c0 + c1 t + ...)`, exact unless followed by `@N`,
//! which means "known modulo `t^N`". Coefficients are field elements in the
//! integer encoding of [`FiniteField`]. `precision` records the degree
//! bound used when the corpus was generated.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::finite_field::{FiniteField, Fq};
use super::scholze::{scholze_phi, scholze_z};
use super::series::{Matrix2, TruncatedSeries};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub field: Arc<FiniteField>,
    pub precision: u32,
    pub matrices: Vec<Matrix2>,
}

fn parse_error(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("corpus line {line}: {msg}"))
}

pub fn parse_entry(field: &Arc<FiniteField>, s: &str) -> Result<TruncatedSeries> {
    let (body, prec) = match s.split_once('@') {
        Some((b, p)) => (b, Some(p.parse::<i32>().map_err(|_| Error::Parse(format!("bad precision in {s:?}")))?)),
        None => (s, None),
    };
    let (low, coeffs) = if body == "0" {
        (0, Vec::new())
    } else {
        let (v, cs) = body.split_once(':').ok_or_else(|| Error::Parse(format!("expected v:c0,c1,.. in {s:?}")))?;
        let low = v.parse::<i32>().map_err(|_| Error::Parse(format!("bad valuation in {s:?}")))?;
        let coeffs = cs
            .split(',')
            .map(|c| match c.parse::<Fq>() {
                Ok(x) if field.contains(x) => Ok(x),
                _ => Err(Error::Parse(format!("bad coefficient {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        (low, coeffs)
    };
    let zero_low = if coeffs.is_empty() { prec.unwrap_or(0) } else { low };
    Ok(TruncatedSeries::new(field.clone(), zero_low, coeffs, prec))
}

pub fn format_entry(s: &TruncatedSeries) -> String {
    let (low, coeffs) = s.raw();
    let mut out = if coeffs.is_empty() {
        "0".to_string()
    } else {
        let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        format!("{low}:{}", cs.join(","))
    };
    if let Some(p) = s.precision() {
        out.push_str(&format!("@{p}"));
    }
    out
}

pub fn format_matrix(g: &Matrix2) -> String {
    g.entries().map(format_entry).join(" ")
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Corpus> {
        let mut field = None;
        let mut precision = None;
        let mut matrices = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["q", q] => {
                    let q: u32 = q.parse().map_err(|_| parse_error(i + 1, "bad q"))?;
                    field = Some(Arc::new(FiniteField::new(q).map_err(|e| parse_error(i + 1, e))?));
                }
                ["precision", p] => precision = Some(p.parse().map_err(|_| parse_error(i + 1, "bad precision"))?),
                [a, b, c, d] => {
                    let f = field.as_ref().ok_or_else(|| parse_error(i + 1, "matrix before the q line"))?;
                    let e = |s: &str| parse_entry(f, s).map_err(|e| parse_error(i + 1, e));
                    matrices.push(Matrix2::new(e(a)?, e(b)?, e(c)?, e(d)?));
                }
                _ => return Err(parse_error(i + 1, format!("unrecognized line {line:?}"))),
            }
        }
        let field = field.ok_or_else(|| Error::Parse("corpus has no q line".into()))?;
        Ok(Corpus { field, precision: precision.unwrap_or(0), matrices })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("q {}\nprecision {}\n", self.field.order(), self.precision);
        for g in &self.matrices {
            out.push_str(&format_matrix(g));
            out.push('\n');
        }
        out
    }
}

/// A generated matrix together with the simpler matrix it is
/// `GL_2(O)`-conjugate to. `phi_n` depends only on the conjugacy data, so
/// the two must evaluate identically.
#[derive(Clone, Debug)]
pub struct GeneratedMatrix {
    pub matrix: Matrix2,
    pub design: Matrix2,
}

struct Gen<'a> {
    field: &'a Arc<FiniteField>,
    rng: ChaCha8Rng,
    degree: usize,
}

impl Gen<'_> {
    fn unit_const(&mut self) -> Fq {
        self.rng.gen_range(1..self.field.order())
    }

    /// `t^v * (unit + higher terms)` with a few random higher terms.
    fn with_valuation(&mut self, v: i32) -> TruncatedSeries {
        let len = self.rng.gen_range(1..=self.degree.clamp(1, 4));
        let mut coeffs: Vec<Fq> = (0..len).map(|_| self.rng.gen_range(0..self.field.order())).collect();
        coeffs[0] = self.unit_const();
        TruncatedSeries::new(self.field.clone(), v, coeffs, None)
    }

    fn maybe_zero(&mut self, v: Option<i32>) -> TruncatedSeries {
        match v {
            Some(v) => self.with_valuation(v),
            None => TruncatedSeries::zero(self.field.clone()),
        }
    }

    fn mono(&self, c: Fq, k: i32) -> TruncatedSeries {
        TruncatedSeries::monomial(self.field.clone(), c, k)
    }

    fn poly(&mut self, max_len: usize) -> TruncatedSeries {
        let len = self.rng.gen_range(0..=max_len);
        let coeffs = (0..len).map(|_| self.rng.gen_range(0..self.field.order())).collect();
        TruncatedSeries::new(self.field.clone(), 0, coeffs, None)
    }

    fn design(&mut self, kind: usize) -> Matrix2 {
        let f = self.field.clone();
        let one = TruncatedSeries::one(f.clone());
        let zero = TruncatedSeries::zero(f.clone());
        let minus = |s: &TruncatedSeries| -s;
        match kind {
            // companion matrix with prescribed det and trace valuations
            0 => {
                let dv = *[1, 1, 1, 0, 2].choose(&mut self.rng).expect("nonempty");
                let tv = *[None, Some(-1), Some(0), Some(0), Some(1), Some(2)].choose(&mut self.rng).expect("nonempty");
                let det = self.with_valuation(dv);
                let tr = self.maybe_zero(tv);
                Matrix2::new(zero, minus(&det), one, tr)
            }
            // the same, conjugated by diag(t^j, 1) to move k(g)
            1 => {
                let j = self.rng.gen_range(-2..=2);
                let det = self.with_valuation(1);
                let tv = *[None, Some(0), Some(1), Some(-1)].choose(&mut self.rng).expect("nonempty");
                let tr = self.maybe_zero(tv);
                Matrix2::new(zero, minus(&det).shift(j), one.shift(-j), tr)
            }
            // diag(t u, 1 + c t^m) with l(g) = m, or l(g) infinite
            2 => {
                let a = self.with_valuation(1);
                let m = self.rng.gen_range(1..=5);
                let c = self.unit_const();
                let d = if self.rng.gen_bool(0.2) { one.clone() } else { &one + &self.mono(c, m) };
                Matrix2::diag(a, d)
            }
            // trace in pi O
            3 => {
                let (va, vd) = (self.rng.gen_range(1..=2), self.rng.gen_range(1..=2));
                let a = self.with_valuation(va);
                let d = self.with_valuation(vd);
                let c = self.unit_const();
                Matrix2::new(a, self.mono(c, 1), one, d)
            }
            // unstructured
            _ => {
                let mut e = || {
                    let v = self.rng.gen_range(-1..=1);
                    self.with_valuation(v)
                };
                let (a, b, c, d) = (e(), e(), e(), e());
                let g = Matrix2::new(a, b, c, d);
                if g.det().is_exact() && g.det().raw().1.is_empty() {
                    Matrix2::identity(f)
                } else {
                    g
                }
            }
        }
    }

    /// `h` in `GL_2(O)` with polynomial entries and its exact inverse.
    fn conjugator(&mut self) -> (Matrix2, Matrix2) {
        let f = self.field.clone();
        let one = TruncatedSeries::one(f.clone());
        let zero = TruncatedSeries::zero(f.clone());
        let x = self.poly(self.degree / 3);
        let y = self.poly(self.degree / 3);
        let (u1, u2) = (self.unit_const(), self.unit_const());
        let upper = |s: &TruncatedSeries| Matrix2::new(one.clone(), s.clone(), zero.clone(), one.clone());
        let lower = |s: &TruncatedSeries| Matrix2::new(one.clone(), zero.clone(), s.clone(), one.clone());
        let d = Matrix2::diag(TruncatedSeries::constant(f.clone(), u1), TruncatedSeries::constant(f.clone(), u2));
        let d_inv = Matrix2::diag(
            TruncatedSeries::constant(f.clone(), f.inv(u1).expect("unit")),
            TruncatedSeries::constant(f.clone(), f.inv(u2).expect("unit")),
        );
        let h = upper(&x).mul(&lower(&y)).mul(&d);
        let h_inv = d_inv.mul(&lower(&-&y)).mul(&upper(&-&x));
        (h, h_inv)
    }
}

/// `count` matrices over `F_q`, deterministic in `seed`. Entry polynomials
/// stay below degree about `precision`.
pub fn generate(q: u32, count: usize, precision: u32, seed: u64) -> Result<(Corpus, Vec<GeneratedMatrix>)> {
    let field = Arc::new(FiniteField::new(q)?);
    let mut gen = Gen { field: &field, rng: ChaCha8Rng::seed_from_u64(seed), degree: precision as usize };
    let mut items = Vec::with_capacity(count);
    for i in 0..count {
        let design = gen.design(i % 5);
        let (h, h_inv) = gen.conjugator();
        items.push(GeneratedMatrix { matrix: h.mul(&design).mul(&h_inv), design });
    }
    let corpus = Corpus { field: field.clone(), precision, matrices: items.iter().map(|m| m.matrix.clone()).collect() };
    Ok((corpus, items))
}

/// One CSV row of evaluated Scholze data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScholzeRow {
    pub index: usize,
    pub n: u32,
    pub g: String,
    pub phi: String,
    pub z: String,
    pub status: String,
}

pub const INDETERMINATE: &str = "INDETERMINATE";

pub fn evaluate(corpus: &Corpus, n: u32) -> Result<Vec<ScholzeRow>> {
    let mut rows = Vec::with_capacity(corpus.matrices.len());
    for (index, g) in corpus.matrices.iter().enumerate() {
        let row = |phi: String, z: String, status: &str| ScholzeRow {
            index,
            n,
            g: format_matrix(g),
            phi,
            z,
            status: status.to_string(),
        };
        rows.push(match (scholze_phi(n, g), scholze_z(n, g)) {
            (Ok(phi), Ok(z)) => row(phi.to_string(), z.to_string(), "OK"),
            (Err(Error::Indeterminate(_)), _) | (_, Err(Error::Indeterminate(_))) => {
                row(String::new(), String::new(), INDETERMINATE)
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        });
    }
    Ok(rows)
}

pub const SCHOLZE_SCHEMA: &str = "scholze-table/1";

const CSV_HEADER: [&str; 7] = ["schema", "index", "n", "g", "phi", "z", "status"];

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("csv: {e}"))
}

/// CSV with a leading `schema` column; an empty table is just the header.
pub fn rows_to_csv(rows: &[ScholzeRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for r in rows {
        let (index, n) = (r.index.to_string(), r.n.to_string());
        w.write_record([SCHOLZE_SCHEMA, &index, &n, &r.g, &r.phi, &r.z, &r.status]).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

pub fn rows_from_csv(text: &str) -> Result<Vec<ScholzeRow>> {
    type Record = (String, usize, u32, String, String, String, String);
    let mut out = Vec::new();
    for rec in csv::Reader::from_reader(text.as_bytes()).deserialize::<Record>() {
        let (schema, index, n, g, phi, z, status) = rec.map_err(csv_error)?;
        if schema != SCHOLZE_SCHEMA {
            return Err(Error::Parse(format!("unknown table schema {schema:?}")));
        }
        out.push(ScholzeRow { index, n, g, phi, z, status });
    }
    Ok(out)
}

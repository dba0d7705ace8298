//! JSON documents for algebraic objects. Every document carries a
//! `"schema"` tag; lists are sorted by `(length, translation, finite word)`
//! and coefficient maps by exponent, so equal inputs give equal bytes.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::bernstein::SymmetricFunction;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;
use crate::root_datum::{Coweight, RootDatum};
use crate::transfer::GradedFunction;

pub const HECKE_SCHEMA: &str = "hecke-element/1";
pub const ADMISSIBLE_SCHEMA: &str = "admissible-set/1";
pub const SYMMETRIC_SCHEMA: &str = "symmetric-function/1";
pub const GRADED_SCHEMA: &str = "graded-function/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub translation: Vec<i64>,
    pub finite_word: Vec<usize>,
}

pub fn element_json(group: &AffineWeylGroup, x: &AffineWeylElement) -> ElementJson {
    ElementJson { translation: x.translation.0.clone(), finite_word: group.finite_word(x) }
}

pub fn element_from_json(group: &AffineWeylGroup, e: &ElementJson) -> Result<AffineWeylElement> {
    group.element_from_parts(Coweight(e.translation.clone()), &e.finite_word)
}

/// `{ "<v exponent>": coefficient }` in increasing exponent order, or the
/// value at an integer `q` when one is given.
pub fn coeff_json(c: &LaurentPoly, q: Option<i64>) -> Value {
    match q {
        Some(q) => Value::String(c.specialize_q(q).to_string()),
        None => {
            let mut m = Map::new();
            for (e, a) in c.terms() {
                m.insert(e.to_string(), json!(a));
            }
            Value::Object(m)
        }
    }
}

pub fn coeff_from_json(v: &Value) -> Result<LaurentPoly> {
    let obj = v.as_object().ok_or_else(|| Error::Parse(format!("coefficient must be an object, got {v}")))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, a) in obj {
        let e: i32 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
        let a = a.as_i64().ok_or_else(|| Error::Parse(format!("bad coefficient {a}")))?;
        terms.push((e, a));
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn sorted_terms<'a>(group: &AffineWeylGroup, h: &'a HeckeElement) -> Vec<(&'a AffineWeylElement, &'a LaurentPoly)> {
    let mut terms: Vec<_> = h.iter().collect();
    terms.sort_by_cached_key(|(x, _)| group.output_key(x));
    terms
}

/// A Hecke element document. `extra` fields (such as the coweight) are
/// placed after the schema and group name.
pub fn hecke_json(group: &AffineWeylGroup, h: &HeckeElement, extra: &[(&str, Value)], q: Option<i64>) -> Value {
    let terms: Vec<Value> = sorted_terms(group, h)
        .into_iter()
        .map(|(x, c)| {
            json!({
                "element": element_json(group, x),
                "length": group.length(x),
                "coeff": coeff_json(c, q),
            })
        })
        .collect();
    let mut doc = header(HECKE_SCHEMA, group.root_datum(), extra, q);
    doc.insert("terms".into(), Value::Array(terms));
    Value::Object(doc)
}

fn header(schema: &str, rd: &RootDatum, extra: &[(&str, Value)], q: Option<i64>) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(schema));
    doc.insert("group".into(), json!(rd.name()));
    for (k, v) in extra {
        doc.insert((*k).into(), v.clone());
    }
    if let Some(q) = q {
        doc.insert("q".into(), json!(q));
    }
    doc
}

fn check_schema(doc: &Value, schema: &str) -> Result<()> {
    match doc.get("schema").and_then(Value::as_str) {
        Some(s) if s == schema => Ok(()),
        other => Err(Error::Parse(format!("expected schema {schema:?}, found {other:?}"))),
    }
}

/// Reads back a symbolic Hecke element document.
pub fn hecke_from_json(group: &AffineWeylGroup, doc: &Value) -> Result<HeckeElement> {
    check_schema(doc, HECKE_SCHEMA)?;
    let terms = doc.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?;
    let mut h = HeckeElement::zero();
    for t in terms {
        let e: ElementJson = serde_json::from_value(t.get("element").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(e.to_string()))?;
        let c = coeff_from_json(t.get("coeff").unwrap_or(&Value::Null))?;
        h.add_term(element_from_json(group, &e)?, &c);
    }
    Ok(h)
}

pub fn admissible_json(group: &AffineWeylGroup, mu: &Coweight, adm: &[AffineWeylElement]) -> Value {
    let mut sorted: Vec<&AffineWeylElement> = adm.iter().collect();
    sorted.sort_by_cached_key(|x| group.output_key(x));
    let elements: Vec<Value> = sorted
        .into_iter()
        .map(|x| {
            json!({
                "element": element_json(group, x),
                "length": group.length(x),
                "grade": group.omega_label(&group.kottwitz_image(x)),
            })
        })
        .collect();
    let mut doc = header(ADMISSIBLE_SCHEMA, group.root_datum(), &[("mu", json!(mu.0))], None);
    doc.insert("count".into(), json!(elements.len()));
    doc.insert("elements".into(), Value::Array(elements));
    Value::Object(doc)
}

/// Dominant representatives only, in increasing order.
pub fn symmetric_json(rd: &RootDatum, f: &SymmetricFunction, extra: &[(&str, Value)], q: Option<i64>) -> Value {
    let terms: Vec<Value> = f
        .dominant_terms(rd)
        .map(|(l, c)| json!({ "coweight": l.0, "coeff": coeff_json(c, q) }))
        .collect();
    let mut doc = header(SYMMETRIC_SCHEMA, rd, extra, q);
    doc.insert("terms".into(), Value::Array(terms));
    Value::Object(doc)
}

pub fn symmetric_from_json(rd: &RootDatum, doc: &Value) -> Result<SymmetricFunction> {
    check_schema(doc, SYMMETRIC_SCHEMA)?;
    let terms = doc.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?;
    let mut reps = Vec::with_capacity(terms.len());
    for t in terms {
        let l: Vec<i64> = serde_json::from_value(t.get("coweight").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(e.to_string()))?;
        let l = Coweight(l);
        rd.require_dominant(&l)?;
        reps.push((l, coeff_from_json(t.get("coeff").unwrap_or(&Value::Null))?));
    }
    SymmetricFunction::from_orbit_sums(rd, reps)
}

/// `{ "<grade>": coeff }`, keyed by integer grade when `Omega` is `Z` and
/// by the coweight-class label otherwise.
pub fn graded_json(group: &AffineWeylGroup, f: &GradedFunction, extra: &[(&str, Value)], q: Option<i64>) -> Value {
    let mut entries: Vec<_> = f.iter().collect();
    entries.sort_by_key(|(o, _)| (group.omega_grade(o), (*o).clone()));
    let mut values = Map::new();
    for (o, c) in entries {
        values.insert(group.omega_label(o), coeff_json(c, q));
    }
    let mut doc = header(GRADED_SCHEMA, group.root_datum(), extra, q);
    doc.insert("values".into(), Value::Object(values));
    Value::Object(doc)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::monomial_symmetric;
    use crate::hecke::HeckeAlgebra;
    use crate::root_datum::Family;
    use crate::transfer::normalized_transfer;

    fn gl2() -> HeckeAlgebra {
        HeckeAlgebra::new(RootDatum::build(Family::GL, 2).unwrap())
    }

    #[test]
    fn coefficient_maps_are_ordered_numerically() {
        let c = LaurentPoly::from_terms([(10, 1), (2, -3), (-1, 4)]);
        let v = coeff_json(&c, None);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"-1":4,"2":-3,"10":1}"#);
        assert_eq!(coeff_from_json(&v).unwrap(), c);
        assert_eq!(coeff_json(&LaurentPoly::from_terms([(2, 1), (0, 1)]), Some(3)), json!("4"));
    }

    #[test]
    fn hecke_round_trip() {
        let a = gl2();
        let z = a.bernstein_function(&Coweight::new([1, 0])).unwrap().shift(1);
        let doc = hecke_json(a.group(), &z, &[("mu", json!([1, 0]))], None);
        assert_eq!(doc["schema"], HECKE_SCHEMA);
        assert_eq!(doc["terms"].as_array().unwrap().len(), 3);
        // the length-zero element comes first
        assert_eq!(doc["terms"][0]["length"], 0);
        assert_eq!(hecke_from_json(a.group(), &doc).unwrap(), z);
        assert!(hecke_from_json(a.group(), &json!({"schema": "other"})).is_err());
    }

    #[test]
    fn symmetric_round_trip() {
        let rd = RootDatum::build(Family::GL, 3).unwrap();
        let f = monomial_symmetric(&rd, &Coweight::new([1, 0, -1]))
            .unwrap()
            .add(&monomial_symmetric(&rd, &Coweight::new([2, 2, 0])).unwrap().scale(&LaurentPoly::v_pow(-1)));
        let doc = symmetric_json(&rd, &f, &[], None);
        assert_eq!(doc["terms"].as_array().unwrap().len(), 2);
        assert_eq!(symmetric_from_json(&rd, &doc).unwrap(), f);
    }

    #[test]
    fn graded_labels() {
        let a = gl2();
        let f = monomial_symmetric(a.root_datum(), &Coweight::new([0, -1])).unwrap();
        let doc = graded_json(a.group(), &normalized_transfer(a.group(), &f).unwrap(), &[], None);
        assert_eq!(doc["values"], json!({"-1": {"-1": 1, "1": 1}}));
    }

    #[test]
    fn admissible_document() {
        let a = gl2();
        let g = a.group();
        let mu = Coweight::new([1, 0]);
        let adm: Vec<_> = g.admissible_set(&mu).unwrap().into_iter().collect();
        let doc = admissible_json(g, &mu, &adm);
        assert_eq!(doc["count"], 3);
        assert_eq!(doc["elements"][0]["grade"], "1");
    }
}

//! Generates the deterministic Scholze corpus, evaluates `phi_n` on it and
//! prints a value histogram.
//!
//! With an output directory it also writes the regression data:
//!
//! ```text
//! cargo run --example scholze_corpus -- 2 tests/data
//! ```
//!
//! produces `corpus_q2.txt` and `golden_q2_n{1,2,3}.json`. Golden values are
//! computed from the unconjugated design matrices, not the corpus entries.

use std::collections::BTreeMap;
use std::path::PathBuf;

use hecke_center::deep_level::corpus::{evaluate, generate, Corpus};
use hecke_center::json::to_pretty;

const COUNT: usize = 200;
const PRECISION: u32 = 12;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let q: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let out: Option<PathBuf> = args.next().map(PathBuf::from);

    let (corpus, items) = generate(q, COUNT, PRECISION, 1000 + q as u64)?;
    let designs = Corpus { field: corpus.field.clone(), precision: PRECISION, matrices: items.iter().map(|m| m.design.clone()).collect() };

    for n in 1..=3 {
        let rows = evaluate(&corpus, n)?;
        let golden = evaluate(&designs, n)?;
        let mut hist: BTreeMap<String, usize> = BTreeMap::new();
        for (row, want) in rows.iter().zip(&golden) {
            assert_eq!((&row.phi, &row.status), (&want.phi, &want.status), "matrix {}", row.index);
            *hist.entry(format!("{}{}", row.phi, if row.status == "OK" { "" } else { "?" })).or_default() += 1;
        }
        println!("q={q} n={n}: {hist:?}");
        if let Some(dir) = &out {
            let values: Vec<_> = golden.iter().map(|r| serde_json::json!({ "index": r.index, "phi": r.phi, "z": r.z, "status": r.status })).collect();
            let doc = serde_json::json!({ "schema": "scholze-golden/1", "q": q, "n": n, "rows": values });
            std::fs::write(dir.join(format!("golden_q{q}_n{n}.json")), to_pretty(&doc))?;
        }
    }
    if let Some(dir) = &out {
        std::fs::write(dir.join(format!("corpus_q{q}.txt")), corpus.to_text())?;
    }
    Ok(())
}

//! The `hecke` command line: JSON and CSV tables of the library's
//! computations for scripts and regression tests.
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition violation,
//! 4 internal consistency failure (two routes disagree).

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine_weyl::AffineWeylGroup;
use crate::bernstein::{constant_term, monomial_symmetric};
use crate::config::GroupSpec;
use crate::deep_level::corpus::{evaluate, rows_to_csv, Corpus, INDETERMINATE};
use crate::deep_level::scholze::{level_compatibility_check, random_congruence_element, scholze_phi};
use crate::error::Error;
use crate::hecke::HeckeAlgebra;
use crate::json;
use crate::kl::closed_form_bernstein;
use crate::root_datum::{Coweight, Family, RootDatum};
use crate::transfer::{base_change, grassmannian_count, kottwitz_fiber_integrate, normalized_transfer};

#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(name = "hecke", version, about = "Bernstein functions, admissible sets and test functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Theta,
    Closed,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, clap::Args)]
pub struct Common {
    /// `FAMILY:N` (GL, SL, Sp, GSp; N is the matrix size) or `config:PATH`
    #[arg(long)]
    pub group: String,
    /// Coweight coordinates, e.g. `1,0,0`
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Specialize q to this integer after the exact computation
    #[arg(long)]
    pub q: Option<i64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// The admissible set Adm(mu) with lengths and Kottwitz grades
    Adm(Common),
    /// v^{l(t_mu)} z_mu in the T-basis
    Zmu {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "theta")]
        method: Method,
    },
    /// Fiber integral and normalized transfer of z_mu, with the Grassmannian check
    Transfer(Common),
    /// Constant term of z_mu to a standard Levi
    ConstantTerm {
        #[command(flatten)]
        common: Common,
        /// 1-based simple roots generating the Levi; empty for the torus
        #[arg(long, default_value = "")]
        levi: String,
    },
    /// Base change b_r of the orbit sum of mu
    BaseChange {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: u32,
    },
    /// Scholze's phi_n and z_n on a matrix corpus
    Scholze {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        corpus: PathBuf,
        /// Field size; must agree with the corpus header when given
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Also verify level compatibility and bi-invariance under this many
        /// random pairs from K_n per matrix; the report goes to stderr
        #[arg(long, default_value_t = 0)]
        checks: usize,
    },
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

impl Common {
    fn push_args(&self, args: &mut Vec<String>) {
        args.extend(["--group".into(), self.group.clone(), "--mu".into(), self.mu.clone()]);
        if let Some(q) = self.q {
            args.extend(["--q".into(), q.to_string()]);
        }
        if let Some(out) = &self.out {
            args.extend(["--out".into(), out.display().to_string()]);
        }
        args.extend(["--format".into(), format_name(self.format).into()]);
    }
}

impl Cli {
    /// The argument list that parses back to this job.
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec!["hecke".to_string()];
        match &self.command {
            Command::Adm(c) => {
                args.push("adm".into());
                c.push_args(&mut args);
            }
            Command::Zmu { common, method } => {
                args.push("zmu".into());
                common.push_args(&mut args);
                let m = if *method == Method::Theta { "theta" } else { "closed" };
                args.extend(["--method".into(), m.into()]);
            }
            Command::Transfer(c) => {
                args.push("transfer".into());
                c.push_args(&mut args);
            }
            Command::ConstantTerm { common, levi } => {
                args.push("constant-term".into());
                common.push_args(&mut args);
                args.extend(["--levi".into(), levi.clone()]);
            }
            Command::BaseChange { common, r } => {
                args.push("base-change".into());
                common.push_args(&mut args);
                args.extend(["--r".into(), r.to_string()]);
            }
            Command::Scholze { n, corpus, q, out, format, checks } => {
                args.extend(["scholze".into(), "--n".into(), n.to_string(), "--corpus".into(), corpus.display().to_string()]);
                if let Some(q) = q {
                    args.extend(["--q".into(), q.to_string()]);
                }
                if let Some(out) = out {
                    args.extend(["--out".into(), out.display().to_string()]);
                }
                args.extend(["--format".into(), format_name(*format).into(), "--checks".into(), checks.to_string()]);
            }
        }
        args
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::InconsistentExpansion(_) => 4,
            _ => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

fn parse_failure(msg: impl Into<String>) -> CliError {
    CliError { code: 2, message: msg.into() }
}


pub fn parse_coweight(s: &str) -> Result<Coweight, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map(Coweight)
        .map_err(|_| parse_failure(format!("malformed coweight {s:?}")))
}

fn load_group(c: &Common) -> Result<(RootDatum, Coweight), CliError> {
    let spec: GroupSpec = c.group.parse()?;
    let rd = spec.load()?;
    let mu = parse_coweight(&c.mu)?;
    rd.check_rank(&mu)?;
    Ok((rd, mu))
}

fn require_json(format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError { code: 3, message: "this command only writes JSON".into() }),
    }
}

fn mu_fields(mu: &Coweight) -> Vec<(&'static str, Value)> {
    vec![("mu", json!(mu.0))]
}

/// `v^{l(t_mu)} z_mu` by the requested route.
pub fn normalized_bernstein(alg: &HeckeAlgebra, mu: &Coweight, method: Method) -> crate::error::Result<crate::hecke::HeckeElement> {
    alg.root_datum().require_dominant(mu)?;
    match method {
        Method::Theta => {
            let g = alg.group();
            let l = g.length(&g.translation(mu)) as i32;
            Ok(alg.bernstein_function(mu)?.shift(l))
        }
        Method::Closed => closed_form_bernstein(alg, mu),
    }
}

/// `(n, m)` when `mu = (1^m, 0^{n-m})` in `GL(n)` with `0 < m < n`.
fn grassmannian_shape(rd: &RootDatum, mu: &Coweight) -> Option<(usize, usize)> {
    if rd.family() != Family::GL {
        return None;
    }
    let n = rd.rank();
    let m = mu.coords().iter().take_while(|&&c| c == 1).count();
    let rest_zero = mu.coords()[m..].iter().all(|&c| c == 0);
    (rest_zero && 0 < m && m < n).then_some((n, m))
}

fn transfer_report(group: &AffineWeylGroup, alg: &HeckeAlgebra, mu: &Coweight, q: Option<i64>) -> Result<(Value, bool), CliError> {
    let rd = group.root_datum();
    let l = group.length(&group.translation(mu)) as i32;
    let z = normalized_bernstein(alg, mu, Method::Theta)?;
    let integral = kottwitz_fiber_integrate(group, &z);
    let transfer = normalized_transfer(group, &monomial_symmetric(rd, mu)?)?.shift(l);
    let routes_agree = integral == transfer;
    let grade = group.omega_of_coweight(mu);
    let coefficient = integral.coeff(&grade);
    let mut ok = routes_agree;
    let grassmannian = match grassmannian_shape(rd, mu) {
        Some((n, m)) => {
            let count = grassmannian_count(n, m)?;
            let matches = count.to_laurent() == coefficient;
            ok &= matches;
            json!({ "n": n, "m": m, "count": count.to_string(), "status": if matches { "PASS" } else { "FAIL" } })
        }
        None => Value::Null,
    };
    let doc = json!({
        "schema": "transfer-report/1",
        "group": rd.name(),
        "mu": mu.0,
        "grade": group.omega_label(&grade),
        "coefficient": json::coeff_json(&coefficient, q),
        "fiber_integral": json::graded_json(group, &integral, &[], q)["values"],
        "normalized_transfer": json::graded_json(group, &transfer, &[], q)["values"],
        "routes_agree": routes_agree,
        "grassmannian": grassmannian,
        "status": if ok { "PASS" } else { "FAIL" },
    });
    Ok((doc, ok))
}

fn parse_levi(s: &str) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(parse_failure(format!("malformed Levi index {x:?}"))),
        })
        .collect()
}

struct Output {
    body: String,
    ok: bool,
    report: Option<String>,
}

fn execute(cmd: &Command) -> Result<(Output, Option<&PathBuf>), CliError> {
    let done = |body: String| Output { body, ok: true, report: None };
    match cmd {
        Command::Adm(c) => {
            require_json(c.format)?;
            let (rd, mu) = load_group(c)?;
            let g = AffineWeylGroup::new(rd);
            let adm: Vec<_> = g.admissible_set(&mu)?.into_iter().collect();
            Ok((done(json::to_pretty(&json::admissible_json(&g, &mu, &adm))), c.out.as_ref()))
        }
        Command::Zmu { common: c, method } => {
            require_json(c.format)?;
            let (rd, mu) = load_group(c)?;
            let alg = HeckeAlgebra::new(rd);
            let z = normalized_bernstein(&alg, &mu, *method)?;
            let mut extra = mu_fields(&mu);
            extra.push(("normalization", json!("v^l(t_mu) z_mu")));
            Ok((done(json::to_pretty(&json::hecke_json(alg.group(), &z, &extra, c.q))), c.out.as_ref()))
        }
        Command::Transfer(c) => {
            require_json(c.format)?;
            let (rd, mu) = load_group(c)?;
            let alg = HeckeAlgebra::new(rd);
            let (doc, ok) = transfer_report(alg.group(), &alg, &mu, c.q)?;
            let report = (!ok).then(|| "transfer routes or Grassmannian count disagree".to_string());
            Ok((Output { body: json::to_pretty(&doc), ok, report }, c.out.as_ref()))
        }
        Command::ConstantTerm { common: c, levi } => {
            require_json(c.format)?;
            let (rd, mu) = load_group(c)?;
            let levi_rd = rd.levi(&parse_levi(levi)?)?;
            let height = rd.height(&mu);
            let alg = HeckeAlgebra::new(rd);
            let levi_alg = HeckeAlgebra::new(levi_rd);
            let z = alg.bernstein_function(&mu)?;
            let c_z = constant_term(&alg, &z, &levi_alg, height)?;
            let mut extra = mu_fields(&mu);
            extra.push(("ambient", json!(alg.root_datum().name())));
            Ok((done(json::to_pretty(&json::hecke_json(levi_alg.group(), &c_z, &extra, c.q))), c.out.as_ref()))
        }
        Command::BaseChange { common: c, r } => {
            require_json(c.format)?;
            let (rd, mu) = load_group(c)?;
            let f = base_change(&monomial_symmetric(&rd, &mu)?, *r)?;
            let mut extra = mu_fields(&mu);
            extra.push(("r", json!(r)));
            Ok((done(json::to_pretty(&json::symmetric_json(&rd, &f, &extra, c.q))), c.out.as_ref()))
        }
        Command::Scholze { n, corpus, q, out, format, checks } => {
            let text = fs::read_to_string(corpus).map_err(|e| parse_failure(format!("{}: {e}", corpus.display())))?;
            let corpus = Corpus::parse(&text)?;
            if let Some(q) = q.filter(|&q| q != corpus.field.order()) {
                return Err(CliError { code: 3, message: format!("--q {q} but the corpus is over F_{}", corpus.field.order()) });
            }
            let rows = evaluate(&corpus, *n)?;
            let body = match format {
                Format::Csv => rows_to_csv(&rows)?,
                Format::Json => json::to_pretty(&json!({
                    "schema": "scholze-table/1",
                    "q": corpus.field.order(),
                    "n": n,
                    "rows": rows,
                })),
            };
            let (ok, report) = if *checks > 0 { scholze_checks(&corpus, *n, *checks)? } else { (true, None) };
            Ok((Output { body, ok, report }, out.as_ref()))
        }
    }
}

fn scholze_checks(corpus: &Corpus, n: u32, samples: usize) -> Result<(bool, Option<String>), CliError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(n as u64);
    let (mut compat_ok, mut inv_ok, mut skipped) = (0, 0, 0);
    let total = corpus.matrices.len();
    for g in &corpus.matrices {
        let Ok(phi) = scholze_phi(n, g) else {
            skipped += 1;
            continue;
        };
        if level_compatibility_check(n, g)? {
            compat_ok += 1;
        }
        let degree = corpus.precision.max(1) as usize;
        let invariant = (0..samples).all(|_| {
            let u = random_congruence_element(&corpus.field, n, degree, &mut rng);
            let v = random_congruence_element(&corpus.field, n, degree, &mut rng);
            scholze_phi(n, &u.mul(g).mul(&v)).ok() == Some(phi)
        });
        if invariant {
            inv_ok += 1;
        }
    }
    let checked = total - skipped;
    let ok = compat_ok == checked && inv_ok == checked;
    let verdict = |k| if k == checked { "PASS" } else { "FAIL" };
    let report = format!(
        "level compatibility: {} ({compat_ok}/{checked})\nK_{n} bi-invariance: {} ({inv_ok}/{checked})\n{INDETERMINATE}: {skipped}\n",
        verdict(compat_ok),
        verdict(inv_ok)
    );
    Ok((ok, Some(report)))
}

/// Runs the command line, writing results to `stdout` (or `--out`) and
/// diagnostics to `stderr`; returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok((out, path)) => {
            let written = match path {
                Some(p) => fs::write(p, &out.body).map_err(|e| e.to_string()),
                None => stdout.write_all(out.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 3;
            }
            if let Some(r) = &out.report {
                let _ = write!(stderr, "{r}");
            }
            if out.ok {
                0
            } else {
                4
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hecke").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn jobs_round_trip_through_their_arguments() {
        for args in [
            vec!["adm", "--group", "GL:2", "--mu", "1,0"],
            vec!["zmu", "--group", "GSp:4", "--mu", "-1,0,2", "--q", "3", "--method", "closed", "--out", "z.json"],
            vec!["transfer", "--group", "config:a.toml", "--mu", "1"],
            vec!["constant-term", "--group", "GL:3", "--mu", "1,0,0", "--levi", ""],
            vec!["base-change", "--group", "GL:2", "--mu", "1,0", "--r", "3", "--format", "csv"],
            vec!["scholze", "--n", "2", "--corpus", "c.txt", "--q", "3", "--checks", "4"],
        ] {
            let job = Cli::try_parse_from(std::iter::once("hecke").chain(args)).unwrap();
            assert_eq!(Cli::try_parse_from(job.to_args()).unwrap(), job);
        }
    }

    #[test]
    fn coweight_parsing() {
        assert_eq!(parse_coweight("1,0,-1").unwrap(), Coweight::new([1, 0, -1]));
        assert_eq!(parse_coweight("1,x").unwrap_err().code, 2);
    }

    #[test]
    fn adm_counts() {
        let (code, out, _) = run_str(&["adm", "--group", "GL:2", "--mu", "1,0"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 3);
        let (_, out, _) = run_str(&["adm", "--group", "GL:2", "--mu", "0,0"]);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["count"], 1);
        assert_eq!(run_str(&["adm", "--group", "GL:2", "--mu", "1;0"]).0, 2);
        assert_eq!(run_str(&["adm", "--group", "GL:2", "--mu", "0,1"]).0, 3);
        assert_eq!(run_str(&["adm", "--group", "GL:2", "--mu", "1,0,0"]).0, 3);
        assert_eq!(run_str(&["adm", "--group", "XX:2", "--mu", "1,0"]).0, 3);
        assert_eq!(run_str(&["adm", "--group", "GL:2"]).0, 2);
    }

    #[test]
    fn zmu_methods_agree_byte_for_byte() {
        let (c1, theta, _) = run_str(&["zmu", "--group", "GL:3", "--mu", "1,1,0", "--method", "theta"]);
        let (c2, closed, _) = run_str(&["zmu", "--group", "GL:3", "--mu", "1,1,0", "--method", "closed"]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(theta, closed);
        let (code, _, err) = run_str(&["zmu", "--group", "GL:2", "--mu", "2,0", "--method", "closed"]);
        assert_eq!(code, 3, "{err}");
        let (_, zero, _) = run_str(&["zmu", "--group", "GL:2", "--mu", "0,0"]);
        assert_eq!(serde_json::from_str::<Value>(&zero).unwrap()["terms"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn negative_coweights_parse() {
        let (code, out, err) = run_str(&["zmu", "--group", "GL:2", "--mu", "0,-1", "--q", "2"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("\"q\": 2"));
    }

    #[test]
    fn transfer_report_passes() {
        let (code, out, _) = run_str(&["transfer", "--group", "GL:2", "--mu", "1,0"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["coefficient"], json!({"0": 1, "2": 1}));
        let (_, out, _) = run_str(&["transfer", "--group", "GL:3", "--mu", "0,0,0"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficient"], json!({"0": 1}));
        assert_eq!(v["grassmannian"], Value::Null);
    }

    #[test]
    fn csv_only_for_scholze() {
        assert_eq!(run_str(&["adm", "--group", "GL:2", "--mu", "1,0", "--format", "csv"]).0, 3);
    }

    #[test]
    fn levi_and_base_change() {
        let (code, out, err) = run_str(&["constant-term", "--group", "GL:3", "--mu", "1,0,0", "--levi", "1"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("levi 1"));
        assert_eq!(run_str(&["constant-term", "--group", "GL:3", "--mu", "1,0,0", "--levi", "7"]).0, 3);
        assert_eq!(run_str(&["constant-term", "--group", "GL:3", "--mu", "1,0,0", "--levi", "a"]).0, 2);
        let (code, out, _) = run_str(&["base-change", "--group", "GL:2", "--mu", "1,0", "--r", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["terms"], json!([{"coweight": [2, 0], "coeff": {"0": 1}}]));
    }
}

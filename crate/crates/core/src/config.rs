//! Group specifications (`GL:3`, `GSp:4`, `config:path.toml`) and the TOML
//! file format for custom root data.
//!
//! ```toml
//! name = "PGL(2)"
//! rank = 1
//! simple_roots = [[1]]
//! simple_coroots = [[2]]
//! cartan = [[2]]        # optional; checked against the pairings if present
//! ```
//!
//! Roots are written in the dual basis of the coweight lattice, coroots in
//! the lattice basis itself.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_datum::{Family, RootDatum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumConfig {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
}

impl RootDatumConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("root datum config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain integer tables serialize")
    }

    pub fn from_root_datum(rd: &RootDatum) -> Self {
        RootDatumConfig {
            name: rd.name().to_string(),
            rank: rd.rank(),
            simple_roots: rd.simple_roots().to_vec(),
            simple_coroots: rd.simple_coroots().to_vec(),
            cartan: Some(rd.cartan_matrix().to_vec()),
        }
    }

    /// Validates and expands the root datum.
    pub fn build(&self) -> Result<RootDatum> {
        let rd = RootDatum::from_simple(
            Family::Custom,
            self.name.clone(),
            self.rank,
            self.simple_roots.clone(),
            self.simple_coroots.clone(),
        )?;
        if let Some(c) = &self.cartan {
            if c.as_slice() != rd.cartan_matrix() {
                return Err(Error::InvalidRootDatum(format!(
                    "declared Cartan matrix {c:?} does not match the pairings {:?}",
                    rd.cartan_matrix()
                )));
            }
        }
        Ok(rd)
    }
}

/// How a command names its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Standard(Family, usize),
    Config(PathBuf),
}

impl GroupSpec {
    pub fn load(&self) -> Result<RootDatum> {
        match self {
            GroupSpec::Standard(f, n) => RootDatum::build(*f, *n),
            GroupSpec::Config(path) => RootDatumConfig::load(path)?.build(),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:N or config:PATH, got {s:?}")))?;
        if head == "config" {
            return Ok(GroupSpec::Config(PathBuf::from(tail)));
        }
        let family: Family = head.parse()?;
        let n = tail.trim().parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        Ok(GroupSpec::Standard(family, n))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Standard(fam, n) => write!(f, "{fam}:{n}"),
            GroupSpec::Config(p) => write!(f, "config:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::Coweight;

    #[test]
    fn group_specs_round_trip() {
        for s in ["GL:2", "SL:3", "Sp:4", "GSp:4", "config:data/pgl2.toml"] {
            let g: GroupSpec = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!("GL".parse::<GroupSpec>().is_err());
        assert!("GL:x".parse::<GroupSpec>().is_err());
        assert!("E:8".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn pgl2_config() {
        let text = "name = \"PGL(2)\"\nrank = 1\nsimple_roots = [[1]]\nsimple_coroots = [[2]]\ncartan = [[2]]\n";
        let rd = RootDatumConfig::parse(text).unwrap().build().unwrap();
        assert_eq!(rd.positive_roots().len(), 1);
        assert!(rd.is_minuscule(&Coweight::new([1])).unwrap());
    }

    #[test]
    fn rejects_bad_configs() {
        let wrong_cartan = "name = \"x\"\nrank = 1\nsimple_roots = [[1]]\nsimple_coroots = [[2]]\ncartan = [[3]]\n";
        assert!(matches!(RootDatumConfig::parse(wrong_cartan).unwrap().build(), Err(Error::InvalidRootDatum(_))));
        let not_cartan = "name = \"x\"\nrank = 1\nsimple_roots = [[1]]\nsimple_coroots = [[1]]\n";
        assert!(RootDatumConfig::parse(not_cartan).unwrap().build().is_err());
        assert!(matches!(RootDatumConfig::parse("rank = \"one\""), Err(Error::Parse(_))));
        assert!(matches!(RootDatumConfig::parse("name=\"x\"\nrank=1\nsimple_roots=[]\nsimple_coroots=[]\nextra=1"), Err(Error::Parse(_))));
    }

    #[test]
    fn standard_data_survive_a_round_trip() {
        for (f, n) in [(Family::GL, 3), (Family::Sp, 4), (Family::GSp, 4), (Family::SL, 3)] {
            let rd = RootDatum::build(f, n).unwrap();
            let cfg = RootDatumConfig::from_root_datum(&rd);
            let back = RootDatumConfig::parse(&cfg.to_toml()).unwrap().build().unwrap();
            assert_eq!(back.positive_roots().len(), rd.positive_roots().len());
            assert_eq!(back.weyl().order(), rd.weyl().order());
            assert_eq!(back.simple_roots(), rd.simple_roots());
        }
    }
}

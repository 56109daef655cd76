use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cyclosieve::families::{FamilySpec, GraphVariant};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// Which forms of the check to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Checks {
    Pointwise,
    Coefficient,
    #[default]
    Both,
}

/// A run as read from `--config`, or assembled from flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum RunConfig {
    Verify(VerifyConfig),
    Scan(ScanConfig),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub triple: FamilySpec,
    #[serde(default)]
    pub checks: Checks,
    #[serde(default)]
    pub allow_even: bool,
    #[serde(default)]
    pub output: Output,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub n: usize,
    pub k: KRange,
    #[serde(default = "default_variant")]
    pub variant: GraphVariant,
    #[serde(default)]
    pub output: Output,
}

fn default_variant() -> GraphVariant {
    GraphVariant::IV
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    #[serde(default)]
    pub json: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

/// `k` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRange {
    pub lo: usize,
    pub hi: usize,
}

impl KRange {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for KRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad edge count {x:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(KRange { lo, hi })
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl Serialize for KRange {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.lo == self.hi {
            s.serialize_u64(self.lo as u64)
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for KRange {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            One(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::One(k) => Ok(KRange { lo: k, hi: k }),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

pub fn read_config(path: &std::path::Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_to_canonical_json() {
        let text = r#"{"command":"verify","triple":{"family":"graphs","n":3,"k":3,"variant":"iii"},"checks":"both"}"#;
        let cfg: RunConfig = serde_json::from_str(text).unwrap();
        let canon = serde_json::to_value(&cfg).unwrap();
        let again: RunConfig = serde_json::from_value(canon.clone()).unwrap();
        assert_eq!(again, cfg);
        assert_eq!(serde_json::to_value(&again).unwrap(), canon);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let bad = r#"{"command":"verify","triple":{"family":"words","n":3,"len":2},"colour":"red"}"#;
        assert!(serde_json::from_str::<RunConfig>(bad).is_err());
        let bad = r#"{"command":"scan","n":6,"k":"2..4","output":{"json":true,"pretty":true}}"#;
        assert!(serde_json::from_str::<RunConfig>(bad).is_err());
    }

    #[test]
    fn k_ranges() {
        assert_eq!("2..4".parse::<KRange>().unwrap(), KRange { lo: 2, hi: 4 });
        assert_eq!("2..=4".parse::<KRange>().unwrap(), KRange { lo: 2, hi: 4 });
        assert_eq!("3".parse::<KRange>().unwrap().iter().collect::<Vec<_>>(), vec![3]);
        assert!("4..2".parse::<KRange>().is_err());
        let cfg: RunConfig = serde_json::from_str(r#"{"command":"scan","n":6,"k":"2..4"}"#).unwrap();
        assert!(matches!(cfg, RunConfig::Scan(ScanConfig { k: KRange { lo: 2, hi: 4 }, variant: GraphVariant::IV, .. })));
    }
}

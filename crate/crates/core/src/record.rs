//! JSON record written next to every CLI result file.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::SearchStats;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    /// Flags as given, in argument order.
    pub flags: Vec<String>,
    pub seeds: Vec<u64>,
    pub family: String,
    pub stats: SearchStats,
    /// Found graphs, graph6.
    pub results: Vec<String>,
    pub wall_seconds: f64,
    pub version: String,
    /// Command-specific counters such as `matrices_tested`.
    #[serde(default)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl RunRecord {
    pub fn new(command: impl Into<String>, flags: Vec<String>, family: impl Into<String>) -> Self {
        RunRecord {
            command: command.into(),
            flags,
            seeds: Vec::new(),
            family: family.into(),
            stats: SearchStats::default(),
            results: Vec::new(),
            wall_seconds: 0.0,
            version: env!("CARGO_PKG_VERSION").to_string(),
            extra: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("run record: {e}")))
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json() + "\n").map_err(|e| Error::io(path, e))
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = RunRecord::new("search-exact", vec!["--order".into(), "5".into()], "all:3");
        r.seeds = vec![1, u64::MAX];
        r.stats.subiso_calls = 99;
        r.results = vec!["DCs".into()];
        r.wall_seconds = 0.25;
        r.extra.insert("matrices_tested".into(), 12.into());
        assert_eq!(RunRecord::from_json(&r.to_json()).unwrap(), r);
        assert!(RunRecord::from_json("{").is_err());
    }
}

//! Versioned scenario grids in TOML.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::{HarnessError, Scenario};

/// The grid `verify --all` runs when no manifest is given.
pub const DEFAULT_MANIFEST: &str = include_str!("default_manifest.toml");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: u32,
    pub seed: u64,
    #[serde(rename = "run", default)]
    pub runs: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Entry {
    pub scenario: String,
    /// Overrides the manifest seed for this entry.
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub parameters: BTreeMap<String, i64>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, HarnessError> {
        toml::from_str(text).map_err(|e| HarnessError::Manifest(e.to_string()))
    }

    pub fn default_grid() -> Manifest {
        Manifest::parse(DEFAULT_MANIFEST).expect("embedded manifest is valid")
    }

    /// The configured scenarios in manifest order. `seed` replaces every seed.
    pub fn scenarios(&self, seed: Option<u64>) -> Result<Vec<Scenario>, HarnessError> {
        self.runs
            .iter()
            .map(|e| Scenario::new(&e.scenario, &e.parameters, seed.or(e.seed).unwrap_or(self.seed)))
            .collect()
    }
}

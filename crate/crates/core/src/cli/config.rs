use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::theorems::SweepBounds;
use crate::Limits;

/// Sweep configuration, read from TOML:
///
/// ```toml
/// max_factors = 4
/// max_proper_ideals = 5
/// zmod_list = [12, 30, 60, 64, 210, 720]
/// graph_vertex_cap = 20000
/// witness_cap = 64
/// search_budget = 20000000
/// workers = 4
/// max_order = 4096
///
/// [output]
/// atlas = "atlas.jsonl"
/// ```
///
/// Every key is optional. `COMAXIMAL_MAX_ORDER` and `COMAXIMAL_WORKERS`
/// override `max_order` and `workers`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub max_factors: usize,
    pub max_proper_ideals: usize,
    pub zmod_list: Vec<u64>,
    pub graph_vertex_cap: usize,
    pub witness_cap: usize,
    pub search_budget: u64,
    pub workers: usize,
    pub max_order: usize,
    pub output: OutputConfig,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub atlas: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        let limits = Limits::default();
        SweepConfig {
            max_factors: 4,
            max_proper_ideals: 5,
            zmod_list: vec![12, 30, 60, 64, 210, 720],
            graph_vertex_cap: limits.graph_vertex_cap,
            witness_cap: limits.witness_cap,
            search_budget: limits.search_budget,
            workers: 4,
            max_order: limits.max_order,
            output: OutputConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let config: SweepConfig =
            toml::from_str(text).map_err(|e| ConfigError(format!("malformed config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let caps = [
            ("max_factors", self.max_factors as u64),
            ("max_proper_ideals", self.max_proper_ideals as u64),
            ("graph_vertex_cap", self.graph_vertex_cap as u64),
            ("witness_cap", self.witness_cap as u64),
            ("search_budget", self.search_budget),
            ("workers", self.workers as u64),
            ("max_order", self.max_order as u64),
        ];
        if let Some((name, _)) = caps.iter().find(|(_, v)| *v == 0) {
            return Err(ConfigError(format!("{name} must be positive")));
        }
        if self.max_factors > 64 {
            return Err(ConfigError("max_factors must be at most 64".into()));
        }
        if let Some(n) = self.zmod_list.iter().find(|&&n| n < 2) {
            return Err(ConfigError(format!("zmod entry {n} must be at least 2")));
        }
        Ok(())
    }

    /// Applies `COMAXIMAL_MAX_ORDER` / `COMAXIMAL_WORKERS` from `lookup`.
    pub fn apply_env(
        &mut self,
        lookup: impl Fn(&str) -> Option<String>,
    ) -> Result<(), ConfigError> {
        if let Some(v) = lookup("COMAXIMAL_MAX_ORDER") {
            self.max_order = parse_positive("COMAXIMAL_MAX_ORDER", &v)?;
        }
        if let Some(v) = lookup("COMAXIMAL_WORKERS") {
            self.workers = parse_positive("COMAXIMAL_WORKERS", &v)?;
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order,
            graph_vertex_cap: self.graph_vertex_cap,
            witness_cap: self.witness_cap,
            search_budget: self.search_budget,
        }
    }

    pub fn bounds(&self) -> SweepBounds {
        SweepBounds {
            max_factors: self.max_factors,
            max_proper_ideals: self.max_proper_ideals,
        }
    }
}

fn parse_positive(name: &str, value: &str) -> Result<usize, ConfigError> {
    match value.trim().parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(ConfigError(format!(
            "{name} must be a positive integer, got {value:?}"
        ))),
    }
}

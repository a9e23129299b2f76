//! Plain `key=value` configuration files.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub max_level: Option<u32>,
    pub max_weight: Option<u32>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("line {}: expected key=value", n + 1);
            };
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut cfg = Config::default();
        for (k, v) in map {
            let value: u32 = v
                .parse()
                .with_context(|| format!("{k}: expected a non-negative integer"))?;
            match k.as_str() {
                "max_level" => cfg.max_level = Some(value),
                "max_weight" => cfg.max_weight = Some(value),
                other => bail!("unknown key {other:?}"),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text)
    }
}

//! Flat `key = value` configuration files. Keys mirror the sweep flags;
//! explicit flags override file values, which override built-in defaults.

use std::path::{Path, PathBuf};

use crate::output::Format;
use crate::sweep::CouplingMode;

#[derive(Debug, Default)]
pub struct FileConfig {
    pub n_list: Option<Vec<usize>>,
    pub mass: Option<f64>,
    pub mode: Option<CouplingMode>,
    pub grid: Option<String>,
    pub kinds: Option<Vec<String>>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut cfg = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {} is not key = value", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "n-list" => {
                    let list: Result<Vec<usize>, _> =
                        value.split(',').map(|s| s.trim().parse()).collect();
                    cfg.n_list = Some(list.map_err(|_| format!("bad n-list '{value}'"))?);
                }
                "mass" => {
                    cfg.mass = Some(value.parse().map_err(|_| format!("bad mass '{value}'"))?);
                }
                "mode" => {
                    cfg.mode = Some(match value {
                        "raw" => CouplingMode::Raw,
                        "rescaled" => CouplingMode::Rescaled,
                        _ => return Err(format!("bad mode '{value}' (raw|rescaled)")),
                    });
                }
                "grid" => cfg.grid = Some(value.to_string()),
                "kinds" => {
                    cfg.kinds = Some(value.split(',').map(|s| s.trim().to_string()).collect());
                }
                "format" => {
                    cfg.format = Some(match value {
                        "csv" => Format::Csv,
                        "json" => Format::Json,
                        _ => return Err(format!("bad format '{value}' (csv|json)")),
                    });
                }
                "out" => cfg.out = Some(PathBuf::from(value)),
                other => return Err(format!("unknown config key '{other}'")),
            }
        }
        Ok(cfg)
    }
}

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lid::{GateConfig, TokenLidConfig};

pub const CONFIG_VERSION: u32 = 1;

/// Thresholds separating borrowings from code-switches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorConfig {
    /// Neighbourhood radius, in tokens, for the local LU ratio.
    pub window: usize,
    /// Longest foreign run that can still hold a borrowing.
    pub max_borrow_run: usize,
    /// Shortest foreign run treated as a code-switch.
    pub min_cs_run: usize,
    /// Minimum local LU ratio for a borrowing.
    pub min_lu_ratio: f64,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig {
            window: 3,
            max_borrow_run: 2,
            min_cs_run: 4,
            min_lu_ratio: 0.5,
        }
    }
}

impl DetectorConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.window >= 1
            && self.max_borrow_run >= 1
            && self.max_borrow_run < self.min_cs_run
            && self.min_lu_ratio > 0.0
            && self.min_lu_ratio <= 1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("invalid detector configuration {self:?}")))
        }
    }
}

/// Everything the annotation pipeline reads from its config file.
///
/// The file is UTF-8 `key = value` lines; `#` starts a comment. Recognised
/// keys are `version`, `window`, `max_borrow_run`, `min_cs_run`,
/// `min_lu_ratio`, `gate.base_threshold`, `gate.max_threshold`,
/// `gate.short_len`, `gate.long_len`, `gate.matrix_fallback` and
/// `token.fallback_threshold`. Missing
/// keys keep their defaults.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PipelineConfig {
    pub detector: DetectorConfig,
    pub gate: GateConfig,
    pub token: TokenLidConfig,
}

impl PipelineConfig {
    pub fn parse(text: &str) -> Result<PipelineConfig> {
        let mut cfg = PipelineConfig::default();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::line(line_no, "expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: &dyn std::fmt::Display| Error::line(line_no, format!("{key}: {e}"));
            let usize_of = |v: &str| v.parse::<usize>().map_err(|e| bad(&e));
            let f64_of = |v: &str| v.parse::<f64>().map_err(|e| bad(&e));
            match key {
                "version" => {
                    let v = value.parse::<u32>().map_err(|e| bad(&e))?;
                    if v != CONFIG_VERSION {
                        return Err(Error::line(line_no, format!("unsupported config version {v}")));
                    }
                }
                "window" => cfg.detector.window = usize_of(value)?,
                "max_borrow_run" => cfg.detector.max_borrow_run = usize_of(value)?,
                "min_cs_run" => cfg.detector.min_cs_run = usize_of(value)?,
                "min_lu_ratio" => cfg.detector.min_lu_ratio = f64_of(value)?,
                "gate.base_threshold" => cfg.gate.base_threshold = f64_of(value)?,
                "gate.max_threshold" => cfg.gate.max_threshold = f64_of(value)?,
                "gate.short_len" => cfg.gate.short_len = usize_of(value)?,
                "gate.long_len" => cfg.gate.long_len = usize_of(value)?,
                "gate.matrix_fallback" => {
                    cfg.gate.matrix_fallback = value.parse::<bool>().map_err(|e| bad(&e))?
                }
                "token.fallback_threshold" => cfg.token.fallback_threshold = f64_of(value)?,
                other => return Err(Error::line(line_no, format!("unknown key {other:?}"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<PipelineConfig> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        PipelineConfig::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.detector.validate()?;
        self.gate.validate()?;
        let t = self.token.fallback_threshold;
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Config(format!("token.fallback_threshold {t} outside [0, 1]")));
        }
        Ok(())
    }

    /// Canonical file form; parsing it gives back the same configuration.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let d = &self.detector;
        let g = &self.gate;
        let _ = writeln!(s, "version = {CONFIG_VERSION}");
        let _ = writeln!(s, "window = {}", d.window);
        let _ = writeln!(s, "max_borrow_run = {}", d.max_borrow_run);
        let _ = writeln!(s, "min_cs_run = {}", d.min_cs_run);
        let _ = writeln!(s, "min_lu_ratio = {}", d.min_lu_ratio);
        let _ = writeln!(s, "gate.base_threshold = {}", g.base_threshold);
        let _ = writeln!(s, "gate.max_threshold = {}", g.max_threshold);
        let _ = writeln!(s, "gate.short_len = {}", g.short_len);
        let _ = writeln!(s, "gate.long_len = {}", g.long_len);
        let _ = writeln!(s, "gate.matrix_fallback = {}", g.matrix_fallback);
        let _ = writeln!(s, "token.fallback_threshold = {}", self.token.fallback_threshold);
        s
    }
}

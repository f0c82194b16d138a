use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use chrono::{SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{input, internal, CliResult};

pub const MANIFEST_FILE: &str = "manifest.json";

/// Provenance record written next to every command's outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Input path to SHA-256 of its contents.
    pub inputs: BTreeMap<String, String>,
    /// Settings that shape the output, including the digest of the
    /// effective pipeline configuration where there is one.
    pub config: BTreeMap<String, String>,
    pub lexicon_version: Option<String>,
    pub started_at: String,
    pub finished_at: String,
}

impl RunManifest {
    pub fn start(command: &str) -> RunManifest {
        RunManifest {
            tool: "borrowkit".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            inputs: BTreeMap::new(),
            config: BTreeMap::new(),
            lexicon_version: None,
            started_at: now(),
            finished_at: String::new(),
        }
    }

    pub fn input(&mut self, path: &Path) -> CliResult<()> {
        let digest = file_digest(path)?;
        self.inputs.insert(path.display().to_string(), digest);
        Ok(())
    }

    pub fn setting(&mut self, key: &str, value: impl ToString) {
        self.config.insert(key.into(), value.to_string());
    }

    pub fn write(mut self, out_dir: &Path) -> CliResult<()> {
        self.finished_at = now();
        let mut text = serde_json::to_string_pretty(&self).map_err(internal)?;
        text.push('\n');
        let tmp = out_dir.join(format!(".{MANIFEST_FILE}.tmp"));
        fs::write(&tmp, text).map_err(|e| internal(format!("{}: {e}", tmp.display())))?;
        fs::rename(&tmp, out_dir.join(MANIFEST_FILE)).map_err(|e| internal(format!("{}: {e}", out_dir.display())))
    }
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true)
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn file_digest(path: &Path) -> CliResult<String> {
    let mut file = fs::File::open(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let mut hasher = Sha256::new();
    let mut buf = vec![0u8; 1 << 16];
    loop {
        let n = file.read(&mut buf).map_err(|e| input(format!("{}: {e}", path.display())))?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}

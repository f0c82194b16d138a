use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use super::{parse_pattern, AdaptationPattern, PatternClass, PatternIndex};
use crate::error::{Error, Result};
use crate::lang::Donor;

/// The registry shipped with the crate.
pub const BUILTIN_REGISTRY: &str = include_str!("../../data/patterns.tsv");

const HEADER: [&str; 4] = ["id", "spec", "klass", "donor_langs"];

/// Pattern registry as loaded from its tab-separated file.
///
/// Lines starting with `#` are comments; `# version: N` names the registry
/// version. The header row is `id spec klass donor_langs [corpus_count]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternRegistry {
    pub version: Option<String>,
    pub patterns: Vec<AdaptationPattern>,
    /// Reported corpus frequency per pattern id, where known.
    pub corpus_counts: Vec<(String, Option<u64>)>,
}

impl PatternRegistry {
    pub fn builtin() -> PatternRegistry {
        PatternRegistry::parse(BUILTIN_REGISTRY).expect("built-in registry is valid")
    }

    pub fn load(path: &Path) -> Result<PatternRegistry> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        PatternRegistry::parse(&text)
    }

    pub fn parse(text: &str) -> Result<PatternRegistry> {
        let mut version = None;
        let mut patterns: Vec<AdaptationPattern> = Vec::new();
        let mut corpus_counts = Vec::new();
        let mut header_seen = false;
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("version:") {
                    version = Some(v.trim().to_owned());
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if !header_seen {
                if cols.len() < 4 || cols[..4] != HEADER {
                    return Err(Error::line(line_no, format!("expected header {:?}", HEADER.join("\t"))));
                }
                header_seen = true;
                continue;
            }
            if cols.len() < 4 {
                return Err(Error::line(line_no, "expected at least 4 columns"));
            }
            let mut pattern = parse_pattern(cols[1]).map_err(|e| Error::line(line_no, e.to_string()))?;
            pattern.id = cols[0].trim().to_owned();
            if pattern.id.is_empty() {
                return Err(Error::line(line_no, "empty pattern id"));
            }
            pattern.klass = cols[2].parse::<PatternClass>().map_err(|e| Error::line(line_no, e))?;
            if (pattern.klass == PatternClass::Lexical) != pattern.edits.is_empty() {
                return Err(Error::line(line_no, "only the edit-free pattern may be LEXICAL"));
            }
            pattern.donor_langs = cols[3]
                .split(',')
                .map(str::parse::<Donor>)
                .collect::<std::result::Result<BTreeSet<_>, _>>()
                .map_err(|e| Error::line(line_no, e))?;
            let count = match cols.get(4).map(|c| c.trim()) {
                None | Some("") => None,
                Some(c) => Some(c.parse::<u64>().map_err(|e| Error::line(line_no, format!("corpus_count: {e}")))?),
            };
            if patterns.iter().any(|p| p.id == pattern.id) {
                return Err(Error::line(line_no, format!("duplicate pattern id {:?}", pattern.id)));
            }
            corpus_counts.push((pattern.id.clone(), count));
            patterns.push(pattern);
        }
        if !header_seen {
            return Err(Error::line(1, "missing header"));
        }
        Ok(PatternRegistry {
            version,
            patterns,
            corpus_counts,
        })
    }

    pub fn compile(&self) -> Result<PatternIndex> {
        PatternIndex::compile(self.patterns.clone())
    }

    pub fn get(&self, id: &str) -> Option<&AdaptationPattern> {
        self.patterns.iter().find(|p| p.id == id)
    }
}

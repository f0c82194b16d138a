use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lang::Donor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pos {
    #[serde(rename = "NOUN")]
    Noun,
    #[serde(rename = "VERB")]
    Verb,
    #[serde(rename = "ADJ")]
    Adj,
    #[serde(rename = "OTHER")]
    Other,
}

impl Pos {
    pub fn name(self) -> &'static str {
        match self {
            Pos::Noun => "NOUN",
            Pos::Verb => "VERB",
            Pos::Adj => "ADJ",
            Pos::Other => "OTHER",
        }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pos {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NOUN" => Ok(Pos::Noun),
            "VERB" => Ok(Pos::Verb),
            "ADJ" => Ok(Pos::Adj),
            "OTHER" => Ok(Pos::Other),
            other => Err(format!("unknown part of speech {other:?}")),
        }
    }
}

/// One headword of the bilingual dictionary dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DictionaryEntry {
    pub headword: String,
    pub pos: Pos,
    #[serde(default)]
    pub proper_noun: bool,
    #[serde(default)]
    pub translations: BTreeMap<Donor, Vec<String>>,
    #[serde(default)]
    pub variants: Vec<String>,
}

impl DictionaryEntry {
    fn validate(&self) -> std::result::Result<(), String> {
        if self.headword.trim().is_empty() {
            return Err("empty headword".into());
        }
        for (donor, words) in &self.translations {
            if words.iter().any(|w| w.trim().is_empty()) {
                return Err(format!("empty {donor} translation for {:?}", self.headword));
            }
        }
        Ok(())
    }
}

/// Reads a JSON-lines dictionary dump. Invalid lines are errors: the dump is
/// curated input, not scraped text.
pub fn read_dictionary<R: BufRead>(input: R) -> Result<Vec<DictionaryEntry>> {
    let mut out = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<dictionary>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: DictionaryEntry =
            serde_json::from_str(&line).map_err(|e| Error::line(n + 1, e.to_string()))?;
        entry.validate().map_err(|e| Error::line(n + 1, e))?;
        out.push(entry);
    }
    Ok(out)
}

/// Keeps non-proper nouns, verbs and adjectives.
pub fn filter_candidates<I>(entries: I) -> impl Iterator<Item = DictionaryEntry>
where
    I: IntoIterator<Item = DictionaryEntry>,
{
    entries
        .into_iter()
        .filter(|e| matches!(e.pos, Pos::Noun | Pos::Verb | Pos::Adj) && !e.proper_noun)
}

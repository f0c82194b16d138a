use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Pos;
use crate::error::{Error, Result};
use crate::lang::Donor;
use crate::text::fold;

/// Header row of the lexicon TSV.
pub const LEXICON_HEADER: &str = "lu_form\tvariants\tdonor\tsource_form\tpattern_id\tpos\tprovenance";
pub const LEXICON_VERSION_LINE: &str = "# borrowkit-lexicon 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "AUTO")]
    Auto,
    #[serde(rename = "HUMAN_ADDED")]
    HumanAdded,
    #[serde(rename = "HUMAN_EDITED")]
    HumanEdited,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Auto => "AUTO",
            Provenance::HumanAdded => "HUMAN_ADDED",
            Provenance::HumanEdited => "HUMAN_EDITED",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "AUTO" => Ok(Provenance::Auto),
            "HUMAN_ADDED" => Ok(Provenance::HumanAdded),
            "HUMAN_EDITED" => Ok(Provenance::HumanEdited),
            other => Err(format!("unknown provenance {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub lu_form: String,
    pub variants: Vec<String>,
    pub donor: Donor,
    pub source_form: String,
    pub pattern_id: String,
    pub pos: Pos,
    pub provenance: Provenance,
}

/// A donor-tagged loanword lexicon, unique on `(lu_form, donor)`.
///
/// Entries are kept sorted by case-folded form, then form, then donor, which
/// is also the serialization order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<(String, String, Donor), LexiconEntry>,
}

fn sort_key(lu_form: &str, donor: Donor) -> (String, String, Donor) {
    (fold(lu_form), lu_form.to_owned(), donor)
}

impl Lexicon {
    pub fn new() -> Lexicon {
        Lexicon::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    pub fn get(&self, lu_form: &str, donor: Donor) -> Option<&LexiconEntry> {
        self.entries.get(&sort_key(lu_form, donor))
    }

    pub fn get_mut(&mut self, lu_form: &str, donor: Donor) -> Option<&mut LexiconEntry> {
        self.entries.get_mut(&sort_key(lu_form, donor))
    }

    /// Inserts or replaces; returns the previous entry for the same key.
    pub fn insert(&mut self, entry: LexiconEntry) -> Option<LexiconEntry> {
        self.entries.insert(sort_key(&entry.lu_form, entry.donor), entry)
    }

    pub fn remove(&mut self, lu_form: &str, donor: Donor) -> Option<LexiconEntry> {
        self.entries.remove(&sort_key(lu_form, donor))
    }

    /// All entries with this exact Luxembourgish form.
    pub fn by_form_mut(&mut self, lu_form: &str) -> impl Iterator<Item = &mut LexiconEntry> {
        let lu_form = lu_form.to_owned();
        self.entries.values_mut().filter(move |e| e.lu_form == lu_form)
    }

    pub fn donor_totals(&self) -> BTreeMap<Donor, usize> {
        let mut out: BTreeMap<Donor, usize> = Donor::ALL.into_iter().map(|d| (d, 0)).collect();
        for e in self.entries() {
            *out.entry(e.donor).or_default() += 1;
        }
        out
    }

    /// Entries plus their listed spelling variants.
    pub fn surface_form_count(&self) -> usize {
        self.entries().map(|e| 1 + e.variants.len()).sum()
    }

    pub fn to_tsv(&self) -> Result<String> {
        let mut out = String::new();
        out.push_str(LEXICON_VERSION_LINE);
        out.push('\n');
        out.push_str(LEXICON_HEADER);
        out.push('\n');
        for e in self.entries() {
            let fields = [&e.lu_form, &e.source_form, &e.pattern_id];
            for f in fields.iter().copied().chain(e.variants.iter()) {
                if f.contains(['\t', '\n', '\r', '|']) || f.is_empty() {
                    return Err(Error::Config(format!("lexicon field {f:?} cannot be written as TSV")));
                }
            }
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                e.lu_form,
                e.variants.join("|"),
                e.donor,
                e.source_form,
                e.pattern_id,
                e.pos,
                e.provenance
            ));
        }
        Ok(out)
    }

    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(self.to_tsv()?.as_bytes()).map_err(|e| Error::io("<lexicon>", e))
    }

    pub fn from_tsv(text: &str) -> Result<Lexicon> {
        let mut lexicon = Lexicon::new();
        let mut header_seen = false;
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            if !header_seen {
                if line != LEXICON_HEADER {
                    return Err(Error::line(line_no, "expected lexicon header"));
                }
                header_seen = true;
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 7 {
                return Err(Error::line(line_no, format!("expected 7 columns, found {}", cols.len())));
            }
            let entry = LexiconEntry {
                lu_form: cols[0].to_owned(),
                variants: cols[1].split('|').filter(|v| !v.is_empty()).map(str::to_owned).collect(),
                donor: cols[2].parse().map_err(|e| Error::line(line_no, e))?,
                source_form: cols[3].to_owned(),
                pattern_id: cols[4].to_owned(),
                pos: cols[5].parse().map_err(|e| Error::line(line_no, e))?,
                provenance: cols[6].parse().map_err(|e| Error::line(line_no, e))?,
            };
            if entry.lu_form.is_empty() {
                return Err(Error::line(line_no, "empty lu_form"));
            }
            if lexicon.get(&entry.lu_form, entry.donor).is_some() {
                return Err(Error::line(line_no, format!("duplicate entry {} ({})", entry.lu_form, entry.donor)));
            }
            lexicon.insert(entry);
        }
        if !header_seen {
            return Err(Error::line(1, "missing lexicon header"));
        }
        Ok(lexicon)
    }

    pub fn load(path: &Path) -> Result<Lexicon> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Lexicon::from_tsv(&text)
    }
}

impl FromIterator<LexiconEntry> for Lexicon {
    fn from_iter<I: IntoIterator<Item = LexiconEntry>>(iter: I) -> Self {
        let mut lexicon = Lexicon::new();
        for e in iter {
            lexicon.insert(e);
        }
        lexicon
    }
}

//! Donor-to-Luxembourgish adaptation patterns.
//!
//! A pattern is written as `exact` or as one or more affix edits joined by
//! `+`. Each edit reads `donor>recipient`; a leading `^` makes it a prefix
//! edit, and `-e` is shorthand for deleting a final `e`. The first edit is
//! anchored at the word edge. Further edits rewrite every occurrence of their
//! donor affix in the stem that the first edit leaves behind, which is what
//! `on>oun+c>k` needs for `collection` / `Kollektioun`.

mod index;
mod registry;

pub use index::PatternIndex;
pub use registry::{PatternRegistry, BUILTIN_REGISTRY};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lang::Donor;
use crate::text::{fold, fold_stem_accents};

/// Identifier of the unadapted pattern.
pub const EXACT: &str = "exact";

/// Cap on the number of inverse rewrites tried for stem-wide edits.
const MAX_STEM_SITES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EditPosition {
    #[serde(rename = "SUFFIX")]
    Suffix,
    #[serde(rename = "PREFIX")]
    Prefix,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edit {
    pub position: EditPosition,
    pub donor_affix: String,
    pub recipient_affix: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternClass {
    #[serde(rename = "MORPHOLOGICAL")]
    Morphological,
    #[serde(rename = "ORTHOGRAPHIC")]
    Orthographic,
    #[serde(rename = "LEXICAL")]
    Lexical,
}

impl PatternClass {
    pub fn name(self) -> &'static str {
        match self {
            PatternClass::Morphological => "MORPHOLOGICAL",
            PatternClass::Orthographic => "ORTHOGRAPHIC",
            PatternClass::Lexical => "LEXICAL",
        }
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "MORPHOLOGICAL" => Ok(PatternClass::Morphological),
            "ORTHOGRAPHIC" => Ok(PatternClass::Orthographic),
            "LEXICAL" => Ok(PatternClass::Lexical),
            other => Err(format!("unknown pattern class {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdaptationPattern {
    pub id: String,
    pub edits: Vec<Edit>,
    pub klass: PatternClass,
    pub donor_langs: BTreeSet<Donor>,
}

/// Parses the pattern DSL.
///
/// The returned pattern uses the spec string as its id, accepts every donor
/// language, and is `LEXICAL` for `exact` and `MORPHOLOGICAL` otherwise; the
/// registry supplies the real id, class and donor restriction.
pub fn parse_pattern(spec: &str) -> Result<AdaptationPattern> {
    let err = |position: usize, message: &str| Error::PatternParse {
        spec: spec.to_owned(),
        position,
        message: message.to_owned(),
    };
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Err(err(0, "empty pattern"));
    }
    let all_donors: BTreeSet<Donor> = Donor::ALL.into_iter().collect();
    if trimmed == EXACT {
        return Ok(AdaptationPattern {
            id: EXACT.to_owned(),
            edits: Vec::new(),
            klass: PatternClass::Lexical,
            donor_langs: all_donors,
        });
    }

    let mut edits = Vec::new();
    let mut offset = 0;
    for part in trimmed.split('+') {
        let part_chars = part.chars().count();
        let edit = parse_edit(part).map_err(|(pos, msg)| err(offset + pos, msg))?;
        if !edits.is_empty() && (edit.donor_affix.is_empty() || edit.recipient_affix.is_empty()) {
            return Err(err(offset, "secondary edits need both affixes"));
        }
        edits.push(edit);
        offset += part_chars + 1;
    }
    Ok(AdaptationPattern {
        id: trimmed.to_owned(),
        edits,
        klass: PatternClass::Morphological,
        donor_langs: all_donors,
    })
}

fn parse_edit(part: &str) -> std::result::Result<Edit, (usize, &'static str)> {
    if part.is_empty() {
        return Err((0, "empty edit"));
    }
    let (position, body, skip) = match part.strip_prefix('^') {
        Some(rest) => (EditPosition::Prefix, rest, 1),
        None => (EditPosition::Suffix, part, 0),
    };
    let (donor, recipient) = if let Some(deleted) = body.strip_prefix('-') {
        let deleted = deleted.strip_suffix('>').unwrap_or(deleted);
        if deleted.contains('>') {
            return Err((skip + 1, "deletion edits take no recipient affix"));
        }
        (deleted, "")
    } else {
        match body.split_once('>') {
            Some((d, r)) => (d, r),
            None => return Err((skip + body.chars().count(), "expected '>'")),
        }
    };
    if let Some(pos) = body.find(|c: char| c.is_whitespace() || c == '^') {
        return Err((skip + body[..pos].chars().count(), "unexpected character"));
    }
    if recipient.contains('>') {
        let pos = skip + donor.chars().count() + 1 + recipient.find('>').map_or(0, |p| recipient[..p].chars().count());
        return Err((pos, "more than one '>'"));
    }
    if donor.is_empty() && recipient.is_empty() {
        return Err((skip, "edit with neither donor nor recipient affix"));
    }
    if donor == recipient {
        return Err((skip, "donor and recipient affixes are identical"));
    }
    Ok(Edit {
        position,
        donor_affix: donor.to_owned(),
        recipient_affix: recipient.to_owned(),
    })
}

impl AdaptationPattern {
    pub fn is_lexical(&self) -> bool {
        self.edits.is_empty()
    }

    pub fn accepts_donor(&self, donor: Donor) -> bool {
        self.donor_langs.contains(&donor)
    }

    /// Whether rewriting `donor_word` with this pattern yields `lu_word`.
    ///
    /// Comparison is case-folded, and the stem left between the affixes is
    /// also compared with accents on `e` dropped. A prefix edit whose recipient
    /// affix is spelled with capitals (`É>E`) requires that exact spelling at
    /// the start of `lu_word`.
    pub fn matches(&self, lu_word: &str, donor_word: &str) -> bool {
        if lu_word.is_empty() || donor_word.is_empty() {
            return false;
        }
        if self.is_lexical() {
            return fold(lu_word) == fold(donor_word);
        }
        let donor = fold(donor_word);
        let Some((donor_stem, lu_stem)) = self.split_primary(lu_word, &donor) else {
            return false;
        };
        if lu_stem.is_empty() {
            return false;
        }
        let mut stem = donor_stem;
        for edit in &self.edits[1..] {
            let from = fold(&edit.donor_affix);
            if !stem.contains(&from) {
                return false;
            }
            stem = stem.replace(&from, &fold(&edit.recipient_affix));
        }
        fold_stem_accents(&stem) == fold_stem_accents(&lu_stem)
    }

    /// Strips the primary edit's affixes; returns the donor stem and the
    /// case-folded Luxembourgish stem.
    fn split_primary(&self, lu_word: &str, donor: &str) -> Option<(String, String)> {
        let edit = &self.edits[0];
        let donor_affix = fold(&edit.donor_affix);
        match edit.position {
            EditPosition::Suffix => {
                let lu = fold(lu_word);
                let recipient = fold(&edit.recipient_affix);
                let donor_stem = donor.strip_suffix(donor_affix.as_str())?;
                let lu_stem = lu.strip_suffix(recipient.as_str())?;
                Some((donor_stem.to_owned(), lu_stem.to_owned()))
            }
            EditPosition::Prefix => {
                let donor_stem = donor.strip_prefix(donor_affix.as_str())?;
                let lu_rest = strip_prefix_edit(lu_word, &edit.recipient_affix)?;
                Some((donor_stem.to_owned(), fold(lu_rest)))
            }
        }
    }

    /// Every donor form that this pattern would rewrite into `lu_word`.
    ///
    /// The Luxembourgish spelling of the stem is kept where possible, so the
    /// results are meant to be compared case-folded. Stem accents dropped by
    /// the adaptation cannot be recovered.
    pub fn donor_candidates(&self, lu_word: &str) -> Vec<String> {
        if lu_word.is_empty() {
            return Vec::new();
        }
        if self.is_lexical() {
            return vec![lu_word.to_owned()];
        }
        let edit = &self.edits[0];
        let (stem, rebuild): (String, Box<dyn Fn(&str) -> String>) = match edit.position {
            EditPosition::Suffix => {
                let Some(stem) = strip_suffix_folded(lu_word, &edit.recipient_affix) else {
                    return Vec::new();
                };
                let affix = edit.donor_affix.clone();
                (stem, Box::new(move |s: &str| format!("{s}{affix}")))
            }
            EditPosition::Prefix => {
                let Some(rest) = strip_prefix_edit(lu_word, &edit.recipient_affix) else {
                    return Vec::new();
                };
                let affix = edit.donor_affix.clone();
                (rest.to_owned(), Box::new(move |s: &str| format!("{affix}{s}")))
            }
        };
        if stem.is_empty() {
            return Vec::new();
        }

        let mut stems = vec![stem];
        for edit in self.edits[1..].iter().rev() {
            let from = fold(&edit.recipient_affix);
            let to = fold(&edit.donor_affix);
            let mut next = Vec::new();
            for s in &stems {
                next.extend(unreplace_some(&fold(s), &from, &to));
            }
            stems = next;
        }
        let mut out: Vec<String> = stems.iter().map(|s| rebuild(s)).collect();
        out.dedup();
        out
    }
}

/// Strips `affix` from the end of `word`, comparing case-folded but returning
/// the stem in the word's own spelling when the fold preserves character
/// boundaries.
fn strip_suffix_folded(word: &str, affix: &str) -> Option<String> {
    let folded = fold(word);
    let affix = fold(affix);
    let stem = folded.strip_suffix(affix.as_str())?;
    let keep = stem.chars().count();
    let original: String = word.chars().take(keep).collect();
    if fold(&original) == stem {
        Some(original)
    } else {
        Some(stem.to_owned())
    }
}

/// Prefix recipient affixes with capitals must appear verbatim; lowercase
/// ones match case-insensitively.
fn strip_prefix_edit<'a>(lu_word: &'a str, recipient: &str) -> Option<&'a str> {
    if recipient.chars().any(char::is_uppercase) {
        return lu_word.strip_prefix(recipient);
    }
    let n = recipient.chars().count();
    let split = lu_word.char_indices().nth(n).map_or(lu_word.len(), |(i, _)| i);
    if lu_word.chars().count() >= n && fold(&lu_word[..split]) == fold(recipient) {
        Some(&lu_word[split..])
    } else {
        None
    }
}

/// All strings obtained by turning a non-empty subset of the occurrences of
/// `from` in `s` back into `to`.
fn unreplace_some(s: &str, from: &str, to: &str) -> Vec<String> {
    let sites: Vec<usize> = s.match_indices(from).map(|(i, _)| i).take(MAX_STEM_SITES).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << sites.len()) {
        let mut rebuilt = String::with_capacity(s.len());
        let mut last = 0;
        for (bit, &site) in sites.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rebuilt.push_str(&s[last..site]);
                rebuilt.push_str(to);
                last = site + from.len();
            }
        }
        rebuilt.push_str(&s[last..]);
        out.push(rebuilt);
    }
    out
}

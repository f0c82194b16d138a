use log::warn;

use super::{Lexicon, LexiconEntry, Pos, Provenance};
use crate::error::{Error, Result};
use crate::lang::Donor;
use crate::pattern::PatternIndex;

/// Pattern id given to human additions that no registry pattern explains.
pub const MANUAL_PATTERN: &str = "manual";

/// One curation command.
///
/// The file format is one command per line with tab-separated arguments:
///
/// ```text
/// ADD          lu_form  donor  source_form  [pos]  [pattern_id]
/// REMOVE       lu_form  donor
/// ADD_VARIANT  lu_form  variant
/// ```
///
/// Blank lines and lines starting with `#` are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverrideOp {
    Add {
        lu_form: String,
        donor: Donor,
        source_form: String,
        pos: Pos,
        pattern_id: Option<String>,
    },
    Remove {
        lu_form: String,
        donor: Donor,
    },
    AddVariant {
        lu_form: String,
        variant: String,
    },
}

pub fn parse_overrides(text: &str) -> Result<Vec<OverrideOp>> {
    let mut ops = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let trimmed = line.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = trimmed.split('\t').map(str::trim).collect();
        if cols.iter().skip(1).any(|c| c.is_empty()) {
            return Err(Error::line(line_no, "empty argument"));
        }
        let donor = |s: &str| s.parse::<Donor>().map_err(|e| Error::line(line_no, e));
        let op = match (cols[0], cols.len()) {
            ("ADD", 4..=6) => OverrideOp::Add {
                lu_form: cols[1].to_owned(),
                donor: donor(cols[2])?,
                source_form: cols[3].to_owned(),
                pos: match cols.get(4) {
                    Some(p) => p.parse().map_err(|e| Error::line(line_no, e))?,
                    None => Pos::Noun,
                },
                pattern_id: cols.get(5).map(|s| (*s).to_owned()),
            },
            ("REMOVE", 3) => OverrideOp::Remove {
                lu_form: cols[1].to_owned(),
                donor: donor(cols[2])?,
            },
            ("ADD_VARIANT", 3) => OverrideOp::AddVariant {
                lu_form: cols[1].to_owned(),
                variant: cols[2].to_owned(),
            },
            ("ADD" | "REMOVE" | "ADD_VARIANT", n) => {
                return Err(Error::line(line_no, format!("wrong number of arguments for {}: {}", cols[0], n - 1)))
            }
            (other, _) => return Err(Error::line(line_no, format!("unknown command {other:?}"))),
        };
        ops.push(op);
    }
    Ok(ops)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OverrideStats {
    pub added: usize,
    pub edited: usize,
    pub removed: usize,
    pub variants_added: usize,
    pub noops: usize,
}

/// Applies curation commands in order.
///
/// `ADD` of a new `(lu_form, donor)` creates a `HUMAN_ADDED` entry; `ADD` of an
/// existing one replaces it as `HUMAN_EDITED`. Without an explicit pattern id
/// the first registry pattern that matches is recorded, else `manual`.
/// Removing a missing entry or adding a variant to a missing form only warns.
pub fn apply_overrides(lexicon: &mut Lexicon, ops: &[OverrideOp], patterns: &PatternIndex) -> OverrideStats {
    let mut stats = OverrideStats::default();
    for op in ops {
        match op {
            OverrideOp::Add {
                lu_form,
                donor,
                source_form,
                pos,
                pattern_id,
            } => {
                let pattern_id = pattern_id.clone().unwrap_or_else(|| {
                    patterns
                        .matching(lu_form, source_form)
                        .into_iter()
                        .find(|p| p.accepts_donor(*donor))
                        .map_or_else(|| MANUAL_PATTERN.to_owned(), |p| p.id.clone())
                });
                let previous = lexicon.get(lu_form, *donor).cloned();
                let provenance = if previous.is_some() {
                    stats.edited += 1;
                    Provenance::HumanEdited
                } else {
                    stats.added += 1;
                    Provenance::HumanAdded
                };
                lexicon.insert(LexiconEntry {
                    lu_form: lu_form.clone(),
                    variants: previous.map(|p| p.variants).unwrap_or_default(),
                    donor: *donor,
                    source_form: source_form.clone(),
                    pattern_id,
                    pos: *pos,
                    provenance,
                });
            }
            OverrideOp::Remove { lu_form, donor } => {
                if lexicon.remove(lu_form, *donor).is_some() {
                    stats.removed += 1;
                } else {
                    warn!("override REMOVE {lu_form} ({donor}): no such entry");
                    stats.noops += 1;
                }
            }
            OverrideOp::AddVariant { lu_form, variant } => {
                let mut touched = false;
                for entry in lexicon.by_form_mut(lu_form) {
                    touched = true;
                    if !entry.variants.contains(variant) {
                        entry.variants.push(variant.clone());
                        if entry.provenance == Provenance::Auto {
                            entry.provenance = Provenance::HumanEdited;
                        }
                    }
                }
                if touched {
                    stats.variants_added += 1;
                } else {
                    warn!("override ADD_VARIANT {lu_form}: no such entry");
                    stats.noops += 1;
                }
            }
        }
    }
    stats
}

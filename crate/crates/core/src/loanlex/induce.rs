use std::collections::{BTreeMap, BTreeSet};

use log::debug;
use serde::{Deserialize, Serialize};

use super::{
    apply_overrides, filter_candidates, DictionaryEntry, DonorChainList, InheritanceList, Lexicon, LexiconEntry,
    OverrideOp, Provenance,
};
use crate::error::Result;
use crate::lang::Donor;
use crate::pattern::PatternIndex;

/// Per donor, every `(pattern_id, source_form)` that links the headword to a
/// translation, in registry order and then translation order.
pub type DonorMatches = BTreeMap<Donor, Vec<(String, String)>>;

/// Records every pattern match between a headword and its translations.
pub fn match_entry(entry: &DictionaryEntry, index: &PatternIndex) -> DonorMatches {
    let candidates = index.lookup(&entry.headword);
    let mut out = DonorMatches::new();
    for (&donor, translations) in &entry.translations {
        let mut found = Vec::new();
        for pattern in candidates.iter().filter(|p| p.accepts_donor(donor)) {
            for source in translations {
                if pattern.matches(&entry.headword, source) {
                    found.push((pattern.id.clone(), source.clone()));
                }
            }
        }
        if !found.is_empty() {
            out.insert(donor, found);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Resolution {
    /// Only one donor matched.
    Single(Donor),
    /// Two donors matched and one form is a known borrowing from the other;
    /// carries the original donor.
    Chained(Donor),
    /// Several donors matched and nothing says which one is original.
    Parallel(Vec<Donor>),
}

/// Decides which donor a multi-donor match belongs to.
///
/// Only two-donor conflicts can be chain-resolved. A conflict is resolved when
/// the chain lists point to exactly one of the two donors as the origin.
pub fn resolve_parallel(matches: &DonorMatches, chains: &[DonorChainList]) -> Resolution {
    let donors: Vec<Donor> = matches.keys().copied().collect();
    match donors.as_slice() {
        [only] => Resolution::Single(*only),
        [a, b] => {
            let mut origins = BTreeSet::new();
            for chain in chains {
                let dir = chain.direction;
                let pair = (dir.borrower(), dir.origin());
                if pair != (*a, *b) && pair != (*b, *a) {
                    continue;
                }
                let borrowed = matches[&dir.borrower()].iter().any(|(_, source)| chain.contains(source));
                if borrowed {
                    origins.insert(dir.origin());
                }
            }
            match origins.len() {
                1 => Resolution::Chained(*origins.iter().next().unwrap()),
                _ => Resolution::Parallel(donors),
            }
        }
        _ => Resolution::Parallel(donors),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InheritanceDecision {
    Keep,
    ReclassifyNative,
}

/// Drops German candidates whose source lemma is inherited from Old High
/// German. Candidates from other donors are always kept.
pub fn inheritance_filter(donor: Donor, source_form: &str, inheritance: &InheritanceList) -> InheritanceDecision {
    if donor == Donor::De && inheritance.contains(source_form) {
        InheritanceDecision::ReclassifyNative
    } else {
        InheritanceDecision::Keep
    }
}

/// Matches that lost to the first match in registry order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternate {
    pub lu_form: String,
    pub donor: Donor,
    pub chosen: (String, String),
    pub alternates: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionReport {
    pub dictionary_entries: usize,
    pub candidates: usize,
    pub unmatched: usize,
    pub matched: usize,
    pub parallel_excluded: usize,
    pub chain_resolved: usize,
    pub inheritance_reclassified: usize,
    pub emitted: usize,
    pub duplicates_merged: usize,
    pub human_added: usize,
    pub human_edited: usize,
    pub human_removed: usize,
    pub human_variants_added: usize,
    pub override_noops: usize,
    /// Final lexicon entries per donor.
    pub per_donor: BTreeMap<Donor, usize>,
    /// Final lexicon entries per pattern id.
    pub per_pattern: BTreeMap<String, usize>,
    pub lexicon_entries: usize,
    /// Entries plus listed spelling variants.
    pub lexicon_surface_forms: usize,
    pub parallel: Vec<String>,
    pub chained: Vec<(String, Donor)>,
    pub reclassified: Vec<String>,
    pub alternates: Vec<Alternate>,
}

/// Runs the whole induction pipeline.
pub fn induce<I>(
    dictionary: I,
    patterns: &PatternIndex,
    chains: &[DonorChainList],
    inheritance: &InheritanceList,
    overrides: &[OverrideOp],
) -> Result<(Lexicon, InductionReport)>
where
    I: IntoIterator<Item = DictionaryEntry>,
{
    let mut report = InductionReport::default();
    let mut lexicon = Lexicon::new();
    let dictionary = dictionary.into_iter().inspect(|_| report.dictionary_entries += 1);
    let candidates: Vec<DictionaryEntry> = filter_candidates(dictionary).collect();
    report.candidates = candidates.len();

    for entry in candidates {
        let matches = match_entry(&entry, patterns);
        if matches.is_empty() {
            report.unmatched += 1;
            continue;
        }
        report.matched += 1;
        let donor = match resolve_parallel(&matches, chains) {
            Resolution::Single(d) => d,
            Resolution::Chained(d) => {
                report.chain_resolved += 1;
                report.chained.push((entry.headword.clone(), d));
                d
            }
            Resolution::Parallel(donors) => {
                debug!("{}: parallel match {:?}", entry.headword, donors);
                report.parallel_excluded += 1;
                report.parallel.push(entry.headword.clone());
                continue;
            }
        };
        let found = &matches[&donor];
        let (pattern_id, source_form) = found[0].clone();
        if found.len() > 1 {
            report.alternates.push(Alternate {
                lu_form: entry.headword.clone(),
                donor,
                chosen: found[0].clone(),
                alternates: found[1..].to_vec(),
            });
        }
        if inheritance_filter(donor, &source_form, inheritance) == InheritanceDecision::ReclassifyNative {
            report.inheritance_reclassified += 1;
            report.reclassified.push(entry.headword.clone());
            continue;
        }
        report.emitted += 1;
        match lexicon.get_mut(&entry.headword, donor) {
            Some(existing) => {
                report.duplicates_merged += 1;
                for v in entry.variants {
                    if !existing.variants.contains(&v) && v != existing.lu_form {
                        existing.variants.push(v);
                    }
                }
            }
            None => {
                lexicon.insert(LexiconEntry {
                    lu_form: entry.headword,
                    variants: entry.variants,
                    donor,
                    source_form,
                    pattern_id,
                    pos: entry.pos,
                    provenance: Provenance::Auto,
                });
            }
        }
    }

    let stats = apply_overrides(&mut lexicon, overrides, patterns);
    report.human_added = stats.added;
    report.human_edited = stats.edited;
    report.human_removed = stats.removed;
    report.human_variants_added = stats.variants_added;
    report.override_noops = stats.noops;

    report.per_donor = lexicon.donor_totals();
    for e in lexicon.entries() {
        *report.per_pattern.entry(e.pattern_id.clone()).or_default() += 1;
    }
    report.lexicon_entries = lexicon.len();
    report.lexicon_surface_forms = lexicon.surface_form_count();
    Ok((lexicon, report))
}

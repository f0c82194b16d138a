use std::collections::{HashMap, HashSet};

use super::{AdaptationPattern, EditPosition};
use crate::error::{Error, Result};
use crate::text::fold;

/// Affix-keyed lookup over a compiled pattern set.
///
/// Every pattern is filed under its primary edit's recipient affix and its
/// donor affix (case-folded, by position). Patterns with an empty affix on a
/// side, and the lexical pattern, apply to any word on that side and live in
/// a catch-all list. A lookup probes each suffix and prefix of the word up to
/// the longest key, so its cost is bounded by the affix length, not by the
/// number of patterns.
#[derive(Debug, Clone, Default)]
pub struct PatternIndex {
    patterns: Vec<AdaptationPattern>,
    by_id: HashMap<String, usize>,
    recipient: AffixMap,
    donor: AffixMap,
}

#[derive(Debug, Clone, Default)]
struct AffixMap {
    suffix: HashMap<String, Vec<usize>>,
    prefix: HashMap<String, Vec<usize>>,
    any: Vec<usize>,
    longest: usize,
}

impl AffixMap {
    fn insert(&mut self, position: Option<EditPosition>, affix: &str, slot: usize) {
        let key = fold(affix);
        if key.is_empty() || position.is_none() {
            self.any.push(slot);
            return;
        }
        self.longest = self.longest.max(key.chars().count());
        let map = match position {
            Some(EditPosition::Suffix) => &mut self.suffix,
            _ => &mut self.prefix,
        };
        map.entry(key).or_default().push(slot);
    }

    fn lookup(&self, word: &str) -> Vec<usize> {
        let word = fold(word);
        let mut slots: Vec<usize> = self.any.clone();
        let boundaries: Vec<usize> = word.char_indices().map(|(i, _)| i).chain([word.len()]).collect();
        let n = boundaries.len() - 1;
        for len in 1..=self.longest.min(n) {
            if let Some(hit) = self.suffix.get(&word[boundaries[n - len]..]) {
                slots.extend(hit);
            }
            if let Some(hit) = self.prefix.get(&word[..boundaries[len]]) {
                slots.extend(hit);
            }
        }
        slots.sort_unstable();
        slots.dedup();
        slots
    }
}

impl PatternIndex {
    /// Compiles `patterns`, keeping their order as the registry order.
    pub fn compile(patterns: Vec<AdaptationPattern>) -> Result<PatternIndex> {
        let mut index = PatternIndex::default();
        let mut seen = HashSet::new();
        for (slot, pattern) in patterns.iter().enumerate() {
            if !seen.insert(pattern.id.clone()) {
                return Err(Error::Config(format!("duplicate pattern id {:?}", pattern.id)));
            }
            index.by_id.insert(pattern.id.clone(), slot);
            match pattern.edits.first() {
                None => {
                    index.recipient.insert(None, "", slot);
                    index.donor.insert(None, "", slot);
                }
                Some(edit) => {
                    index.recipient.insert(Some(edit.position), &edit.recipient_affix, slot);
                    index.donor.insert(Some(edit.position), &edit.donor_affix, slot);
                }
            }
        }
        index.patterns = patterns;
        Ok(index)
    }

    pub fn patterns(&self) -> &[AdaptationPattern] {
        &self.patterns
    }

    pub fn get(&self, id: &str) -> Option<&AdaptationPattern> {
        self.by_id.get(id).map(|&slot| &self.patterns[slot])
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Patterns that may rewrite some donor word into `lu_word`, in registry order.
    pub fn lookup(&self, lu_word: &str) -> Vec<&AdaptationPattern> {
        self.recipient.lookup(lu_word).into_iter().map(|s| &self.patterns[s]).collect()
    }

    /// Patterns that may apply to `donor_word`, in registry order.
    pub fn lookup_donor(&self, donor_word: &str) -> Vec<&AdaptationPattern> {
        self.donor.lookup(donor_word).into_iter().map(|s| &self.patterns[s]).collect()
    }

    /// Patterns matching the pair, in registry order.
    pub fn matching(&self, lu_word: &str, donor_word: &str) -> Vec<&AdaptationPattern> {
        self.lookup(lu_word)
            .into_iter()
            .filter(|p| p.matches(lu_word, donor_word))
            .collect()
    }
}

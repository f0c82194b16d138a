use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::{Lexicon, LexiconEntry};
use crate::text::fold;

/// Bidirectional exact-match index over a lexicon.
///
/// The Luxembourgish side is keyed by every case-folded form and variant, the
/// donor side by the case-folded source form. Both sides share the entries.
#[derive(Debug, Clone, Default)]
pub struct LexiconIndex {
    entries: Arc<[LexiconEntry]>,
    lu: FxHashMap<String, Vec<u32>>,
    donor: FxHashMap<String, Vec<u32>>,
}

impl LexiconIndex {
    pub fn build(lexicon: &Lexicon) -> LexiconIndex {
        let entries: Arc<[LexiconEntry]> = lexicon.entries().cloned().collect();
        let mut lu: FxHashMap<String, Vec<u32>> = FxHashMap::default();
        let mut donor: FxHashMap<String, Vec<u32>> = FxHashMap::default();
        for (i, e) in entries.iter().enumerate() {
            let slot = i as u32;
            for form in std::iter::once(&e.lu_form).chain(e.variants.iter()) {
                let ids = lu.entry(fold(form)).or_default();
                if !ids.contains(&slot) {
                    ids.push(slot);
                }
            }
            donor.entry(fold(&e.source_form)).or_default().push(slot);
        }
        LexiconIndex { entries, lu, donor }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn lookup_lu(&self, form: &str) -> Vec<&LexiconEntry> {
        self.get(&self.lu, form)
    }

    pub fn lookup_donor(&self, form: &str) -> Vec<&LexiconEntry> {
        self.get(&self.donor, form)
    }

    /// Looks up an already case-folded Luxembourgish key without allocating.
    pub fn lookup_lu_folded(&self, key: &str) -> Option<&LexiconEntry> {
        self.lu.get(key).and_then(|ids| ids.first()).map(|&i| &self.entries[i as usize])
    }

    fn get(&self, map: &FxHashMap<String, Vec<u32>>, form: &str) -> Vec<&LexiconEntry> {
        map.get(&fold(form))
            .map(|ids| ids.iter().map(|&i| &self.entries[i as usize]).collect())
            .unwrap_or_default()
    }
}

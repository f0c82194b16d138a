use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lang::Donor;
use crate::text::fold;

/// Which way a known borrowing went between two donor languages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainDirection {
    /// English words borrowed from French.
    EnFromFr,
    FrFromEn,
    DeFromFr,
    DeFromEn,
}

impl ChainDirection {
    pub const ALL: [ChainDirection; 4] = [
        ChainDirection::EnFromFr,
        ChainDirection::FrFromEn,
        ChainDirection::DeFromFr,
        ChainDirection::DeFromEn,
    ];

    /// Language whose word is the borrowing.
    pub fn borrower(self) -> Donor {
        match self {
            ChainDirection::EnFromFr => Donor::En,
            ChainDirection::FrFromEn => Donor::Fr,
            ChainDirection::DeFromFr | ChainDirection::DeFromEn => Donor::De,
        }
    }

    /// Language the borrowing came from.
    pub fn origin(self) -> Donor {
        match self {
            ChainDirection::EnFromFr | ChainDirection::DeFromFr => Donor::Fr,
            ChainDirection::FrFromEn | ChainDirection::DeFromEn => Donor::En,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChainDirection::EnFromFr => "EN_FROM_FR",
            ChainDirection::FrFromEn => "FR_FROM_EN",
            ChainDirection::DeFromFr => "DE_FROM_FR",
            ChainDirection::DeFromEn => "DE_FROM_EN",
        }
    }

    /// Conventional file name inside a chain-list directory.
    pub fn file_name(self) -> String {
        format!("{}.txt", self.name().to_ascii_lowercase())
    }
}

impl fmt::Display for ChainDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainDirection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ChainDirection::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown chain direction {s:?}"))
    }
}

/// Words of one language known to be borrowed from another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DonorChainList {
    pub direction: ChainDirection,
    words: HashSet<String>,
}

impl DonorChainList {
    pub fn new<I, S>(direction: ChainDirection, words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        DonorChainList {
            direction,
            words: words.into_iter().map(|w| fold(w.as_ref().trim())).filter(|w| !w.is_empty()).collect(),
        }
    }

    pub fn load(direction: ChainDirection, path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(DonorChainList::new(direction, word_lines(&text)))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&fold(word))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// German lemmas descending from Old High German.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InheritanceList {
    words: HashSet<String>,
}

impl InheritanceList {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        InheritanceList {
            words: words.into_iter().map(|w| fold(w.as_ref().trim())).filter(|w| !w.is_empty()).collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(InheritanceList::new(word_lines(&text)))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&fold(word))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn word_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_is_case_folded() {
        let list = DonorChainList::new(ChainDirection::EnFromFr, ["Succession", "  ballet "]);
        assert!(list.contains("succession"));
        assert!(list.contains("BALLET"));
        assert!(!list.contains("motivation"));
        let inh = InheritanceList::new(["haus"]);
        assert!(inh.contains("Haus"));
    }

    #[test]
    fn directions() {
        assert_eq!(ChainDirection::EnFromFr.borrower(), Donor::En);
        assert_eq!(ChainDirection::EnFromFr.origin(), Donor::Fr);
        assert_eq!("de_from_en".parse::<ChainDirection>().unwrap(), ChainDirection::DeFromEn);
        assert_eq!(ChainDirection::FrFromEn.file_name(), "fr_from_en.txt");
    }
}

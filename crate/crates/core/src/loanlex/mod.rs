//! Loanword lexicon induction from bilingual dictionary data.
//!
//! The pipeline is [`filter_candidates`] → [`match_entry`] →
//! [`resolve_parallel`] → [`inheritance_filter`] → [`apply_overrides`], with
//! [`induce`] composing the stages and counting what each one keeps.

mod dictionary;
mod index;
mod induce;
mod lexicon;
mod lists;
mod overrides;

pub use dictionary::{filter_candidates, read_dictionary, DictionaryEntry, Pos};
pub use index::LexiconIndex;
pub use induce::{
    induce, inheritance_filter, match_entry, resolve_parallel, Alternate, DonorMatches, InductionReport,
    InheritanceDecision, Resolution,
};
pub use lexicon::{Lexicon, LexiconEntry, Provenance, LEXICON_HEADER, LEXICON_VERSION_LINE};
pub use lists::{ChainDirection, DonorChainList, InheritanceList};
pub use overrides::{apply_overrides, parse_overrides, OverrideOp, OverrideStats};

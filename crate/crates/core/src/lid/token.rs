use super::LanguageClassifier;
use crate::corpus::Token;
use crate::lang::LanguageTag;
use crate::loanlex::LexiconIndex;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TokenLidConfig {
    /// Below this token-level posterior the sentence language is used.
    pub fallback_threshold: f64,
}

impl Default for TokenLidConfig {
    fn default() -> Self {
        TokenLidConfig {
            fallback_threshold: 0.4,
        }
    }
}

/// Language of a single token inside a sentence whose language is `sentence_lang`.
///
/// A loanword lexicon hit decides first: a donor-side hit yields the donor's
/// language, a Luxembourgish-side hit yields LU. Otherwise the classifier
/// picks among LU, DE, FR and EN, and low-confidence tokens take the sentence
/// language.
pub fn token_lid(
    model: &dyn LanguageClassifier,
    lexicon: &LexiconIndex,
    config: &TokenLidConfig,
    token: &Token,
    sentence_lang: LanguageTag,
) -> LanguageTag {
    if token.is_neutral() {
        return LanguageTag::Neutral;
    }
    if let Some(entry) = lexicon.lookup_donor(&token.surface).first() {
        return entry.donor.tag();
    }
    if !lexicon.lookup_lu(&token.surface).is_empty() || !lexicon.lookup_lu(&token.normalized).is_empty() {
        return LanguageTag::Lu;
    }
    let (tag, posterior) = model.token_posteriors(&token.surface).best();
    if posterior < config.fallback_threshold || posterior == 0.0 {
        sentence_lang
    } else {
        tag
    }
}

use super::Normalizer;
use crate::corpus::Sentence;
use crate::lang::LoanLabel;
use crate::loanlex::LexiconIndex;
use crate::text::fold;

/// Assigns loan labels to the non-neutral tokens of a gated sentence.
///
/// The normalizer's candidates are tried against the Luxembourgish side of
/// the lexicon; the first hit gives the donor's loan label and the entry's
/// pattern. Tokens without such a hit are `NATIVE`, but a donor-side hit is
/// still recorded as the token's matched pattern.
pub fn label_tokens(sentence: &mut Sentence, lexicon: &LexiconIndex, normalizer: &dyn Normalizer) {
    for token in sentence.tokens.iter_mut().filter(|t| !t.is_neutral()) {
        token.loan_label = LoanLabel::Native;
        token.matched_pattern = None;
        let hit = normalizer.candidates(&token.surface).into_iter().find_map(|c| {
            let key = fold(&c);
            lexicon.lookup_lu_folded(&key).map(|e| (key, e))
        });
        match hit {
            Some((key, entry)) => {
                token.normalized = key;
                token.loan_label = entry.donor.loan_label();
                token.matched_pattern = Some(entry.pattern_id.clone());
            }
            None => {
                token.normalized = normalizer.normalize(&token.surface);
                if let Some(entry) = lexicon.lookup_donor(&token.surface).first() {
                    token.matched_pattern = Some(entry.pattern_id.clone());
                }
            }
        }
    }
}

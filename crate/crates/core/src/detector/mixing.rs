use super::runs::{lu_ratio_of, runs_of};
use super::DetectorConfig;
use crate::corpus::Sentence;
use crate::lang::{LanguageTag, MixingRole};

/// Assigns mixing roles from token languages, loan labels and lexicon hits.
///
/// LU tokens are `MATRIX` (loans among them stay `MATRIX` and are counted as
/// borrowed by the metrics). A foreign token is a `BORROWING` when its run is
/// at most `max_borrow_run` long, its local LU ratio reaches `min_lu_ratio`
/// and the lexicon knows it. Every token of a run of at least `min_cs_run` is
/// a `CODE_SWITCH`. Everything else foreign is `AMBIGUOUS`.
pub fn classify_mixing(sentence: &mut Sentence, config: &DetectorConfig) {
    let tags: Vec<LanguageTag> = sentence.tokens.iter().map(|t| t.lang).collect();
    for (i, token) in sentence.tokens.iter_mut().enumerate() {
        token.mixing_role = match tags[i] {
            LanguageTag::Lu => MixingRole::Matrix,
            LanguageTag::Neutral => MixingRole::Neutral,
            _ => MixingRole::Ambiguous,
        };
    }
    for run in runs_of(&tags) {
        for i in run.start..run.end {
            if tags[i] == LanguageTag::Neutral {
                continue;
            }
            let token = &mut sentence.tokens[i];
            if run.len >= config.min_cs_run {
                token.mixing_role = MixingRole::CodeSwitch;
            } else if run.len <= config.max_borrow_run
                && (token.loan_label.is_loan() || token.matched_pattern.is_some())
                && lu_ratio_of(&tags, i, config.window) >= config.min_lu_ratio
            {
                token.mixing_role = MixingRole::Borrowing;
            }
        }
    }
}

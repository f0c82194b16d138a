use serde::{Deserialize, Serialize};

use super::{classify_sentence, LanguageClassifier};
use crate::corpus::{GateDecision, Sentence};
use crate::error::{Error, Result};
use crate::lang::LanguageTag;

/// Length-adaptive posterior threshold for admitting Luxembourgish sentences.
///
/// Sentences of at most `short_len` tokens need `max_threshold`, sentences of
/// at least `long_len` tokens need `base_threshold`, and the requirement falls
/// linearly in between.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GateConfig {
    pub base_threshold: f64,
    pub max_threshold: f64,
    pub short_len: usize,
    pub long_len: usize,
    /// Re-gate a rejected sentence with its longest foreign insertion cut out.
    #[serde(default = "default_true")]
    pub matrix_fallback: bool,
}

fn default_true() -> bool {
    true
}

impl Default for GateConfig {
    fn default() -> Self {
        GateConfig {
            base_threshold: 0.50,
            max_threshold: 0.80,
            short_len: 3,
            long_len: 15,
            matrix_fallback: true,
        }
    }
}

impl GateConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = 0.0 < self.base_threshold
            && self.base_threshold <= self.max_threshold
            && self.max_threshold < 1.0
            && self.short_len < self.long_len;
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("invalid gate configuration {self:?}")))
        }
    }
}

pub fn gate_threshold(config: &GateConfig, token_count: usize) -> f64 {
    if token_count <= config.short_len {
        return config.max_threshold;
    }
    if token_count >= config.long_len {
        return config.base_threshold;
    }
    let span = (config.long_len - config.short_len) as f64;
    let progress = (token_count - config.short_len) as f64 / span;
    let t = config.max_threshold - (config.max_threshold - config.base_threshold) * progress;
    t.clamp(config.base_threshold, config.max_threshold)
}

/// Classifies the sentence and decides whether it proceeds to borrowing
/// detection. The threshold is chosen from the number of non-neutral tokens.
pub fn gate(model: &dyn LanguageClassifier, config: &GateConfig, sentence: &mut Sentence) -> GateDecision {
    let (lang, posterior) = classify_sentence(model, &sentence.text);
    let length = sentence.content_tokens().count();
    sentence.sent_lang = lang;
    sentence.posterior = posterior;
    sentence.gate_decision = decide(config, lang, posterior, length);
    sentence.gate_decision
}

/// Gates the sentence again without the tokens in `span`.
///
/// Meant for sentences rejected because a long foreign stretch outweighs a
/// Luxembourgish frame, as in an inserted French clause. Only the decision
/// can change to `PROCESS`; a sentence that passes keeps LU as its language
/// and takes the posterior of the remainder.
pub fn regate_without(
    model: &dyn LanguageClassifier,
    config: &GateConfig,
    sentence: &mut Sentence,
    span: std::ops::Range<usize>,
) -> GateDecision {
    let rest: Vec<&str> = sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|(i, _)| !span.contains(i))
        .map(|(_, t)| t.surface.as_str())
        .collect();
    let length = sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|(i, t)| !span.contains(i) && !t.is_neutral())
        .count();
    let (lang, posterior) = classify_sentence(model, &rest.join(" "));
    if decide(config, lang, posterior, length) == GateDecision::Process {
        sentence.sent_lang = LanguageTag::Lu;
        sentence.posterior = posterior;
        sentence.gate_decision = GateDecision::Process;
    }
    sentence.gate_decision
}

pub(crate) fn decide(config: &GateConfig, lang: LanguageTag, posterior: f64, length: usize) -> GateDecision {
    if lang == LanguageTag::Lu && posterior >= gate_threshold(config, length) {
        GateDecision::Process
    } else {
        GateDecision::RouteOther
    }
}

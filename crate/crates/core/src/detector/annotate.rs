use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{classify_mixing, label_tokens, DefaultNormalizer, Normalizer, PipelineConfig};
use crate::corpus::{Document, GateDecision};
use crate::lang::{LanguageTag, LoanLabel, MixingRole};
use crate::corpus::Sentence;
use crate::lid::{gate, regate_without, token_lid, LanguageClassifier};
use crate::loanlex::LexiconIndex;

/// Everything the two-stage pipeline needs, shared read-only across workers.
pub struct Annotator {
    pub model: Box<dyn LanguageClassifier>,
    pub config: PipelineConfig,
    pub lexicon: LexiconIndex,
    pub normalizer: Box<dyn Normalizer>,
}

impl Annotator {
    pub fn new(model: Box<dyn LanguageClassifier>, config: PipelineConfig, lexicon: LexiconIndex) -> Annotator {
        Annotator {
            model,
            config,
            lexicon,
            normalizer: Box::new(DefaultNormalizer),
        }
    }

    pub fn annotate(&self, document: &mut Document) -> AnnotationSummary {
        annotate_document(document, self)
    }
}

/// Counts over annotated documents. Summaries of disjoint document sets add up.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotationSummary {
    pub documents: u64,
    pub sentences_process: u64,
    pub sentences_route_other: u64,
    pub tokens: u64,
    pub labels: BTreeMap<LoanLabel, u64>,
    pub roles: BTreeMap<MixingRole, u64>,
    /// Foreign runs that ended up as code switches.
    pub code_switch_runs: u64,
    pub errors: u64,
}

impl AnnotationSummary {
    pub fn merge(&mut self, other: &AnnotationSummary) {
        self.documents += other.documents;
        self.sentences_process += other.sentences_process;
        self.sentences_route_other += other.sentences_route_other;
        self.tokens += other.tokens;
        for (k, v) in &other.labels {
            *self.labels.entry(*k).or_default() += v;
        }
        for (k, v) in &other.roles {
            *self.roles.entry(*k).or_default() += v;
        }
        self.code_switch_runs += other.code_switch_runs;
        self.errors += other.errors;
    }

    pub fn role(&self, role: MixingRole) -> u64 {
        self.roles.get(&role).copied().unwrap_or(0)
    }

    pub fn label(&self, label: LoanLabel) -> u64 {
        self.labels.get(&label).copied().unwrap_or(0)
    }
}

/// Runs the gate on every sentence and token-level LID on every token.
///
/// A rejected sentence gets a second chance when it holds a foreign run long
/// enough to be a code switch: the run is cut out and the rest is gated
/// again (see [`GateConfig::matrix_fallback`](crate::lid::GateConfig)).
///
/// Sentences that pass the gate are labelled and get mixing roles; the others
/// keep only their token languages, with loan labels and roles unset (neutral
/// tokens stay `NEUTRAL`). Any earlier annotation is discarded first.
pub fn annotate_document(document: &mut Document, annotator: &Annotator) -> AnnotationSummary {
    let mut summary = AnnotationSummary {
        documents: 1,
        ..Default::default()
    };
    for sentence in &mut document.sentences {
        for token in &mut sentence.tokens {
            let neutral = crate::corpus::is_neutral_surface(&token.surface);
            token.lang = if neutral { LanguageTag::Neutral } else { LanguageTag::Other };
            token.loan_label = LoanLabel::Unset;
            token.mixing_role = if neutral { MixingRole::Neutral } else { MixingRole::Unset };
            token.matched_pattern = None;
        }
        let mut decision = gate(annotator.model.as_ref(), &annotator.config.gate, sentence);
        tag_tokens(annotator, sentence);
        if decision == GateDecision::RouteOther && annotator.config.gate.matrix_fallback {
            let insertion = super::foreign_runs(sentence)
                .into_iter()
                .filter(|r| r.len >= annotator.config.detector.min_cs_run)
                .max_by_key(|r| (r.len, std::cmp::Reverse(r.start)));
            if let Some(run) = insertion {
                decision = regate_without(
                    annotator.model.as_ref(),
                    &annotator.config.gate,
                    sentence,
                    run.start..run.end,
                );
                if decision == GateDecision::Process {
                    tag_tokens(annotator, sentence);
                }
            }
        }
        match decision {
            GateDecision::Process => {
                summary.sentences_process += 1;
                label_tokens(sentence, &annotator.lexicon, annotator.normalizer.as_ref());
                classify_mixing(sentence, &annotator.config.detector);
                summary.code_switch_runs += super::foreign_runs(sentence)
                    .iter()
                    .filter(|r| sentence.tokens[r.start].mixing_role == MixingRole::CodeSwitch)
                    .count() as u64;
            }
            GateDecision::RouteOther => summary.sentences_route_other += 1,
        }
        for token in &sentence.tokens {
            summary.tokens += 1;
            *summary.labels.entry(token.loan_label).or_default() += 1;
            *summary.roles.entry(token.mixing_role).or_default() += 1;
        }
    }
    summary
}

fn tag_tokens(annotator: &Annotator, sentence: &mut Sentence) {
    let sentence_lang = sentence.sent_lang;
    for token in &mut sentence.tokens {
        token.lang = token_lid(
            annotator.model.as_ref(),
            &annotator.lexicon,
            &annotator.config.token,
            token,
            sentence_lang,
        );
    }
}

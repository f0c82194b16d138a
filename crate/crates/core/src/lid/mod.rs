//! Sentence-level language identification, the length-adaptive gate, and
//! token-level refinement.

mod gate;
mod model;
mod token;

pub use gate::{gate, gate_threshold, regate_without, GateConfig};
pub use model::{train, CharNgramModel, TrainOptions, MODEL_MAGIC};
pub use token::{token_lid, TokenLidConfig};

use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lang::LanguageTag;

/// One line of a training file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSentence {
    pub text: String,
    pub lang: LanguageTag,
}

/// Reads `{text, lang}` JSON lines. Blank lines are skipped; anything else
/// that does not parse is an error with its line number.
pub fn read_labeled<R: BufRead>(input: R) -> Result<Vec<LabeledSentence>> {
    let mut out = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<training data>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let row: LabeledSentence = serde_json::from_str(&line).map_err(|e| Error::line(n + 1, e.to_string()))?;
        out.push(row);
    }
    Ok(out)
}

/// Classes a sentence classifier distinguishes, in table order.
pub const CLASSES: [LanguageTag; 5] = [
    LanguageTag::Lu,
    LanguageTag::De,
    LanguageTag::Fr,
    LanguageTag::En,
    LanguageTag::Other,
];

pub(crate) fn class_index(tag: LanguageTag) -> Option<usize> {
    CLASSES.iter().position(|&c| c == tag)
}

/// Posterior distribution over [`CLASSES`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Posteriors(pub [f64; 5]);

impl Posteriors {
    pub fn get(&self, tag: LanguageTag) -> f64 {
        class_index(tag).map_or(0.0, |i| self.0[i])
    }

    /// Most probable class; ties go to the earlier class in [`CLASSES`].
    pub fn best(&self) -> (LanguageTag, f64) {
        let mut best = 0;
        for i in 1..CLASSES.len() {
            if self.0[i] > self.0[best] {
                best = i;
            }
        }
        (CLASSES[best], self.0[best])
    }

    /// Renormalizes over `allowed`, zeroing every other class.
    pub fn restricted(&self, allowed: &[LanguageTag]) -> Posteriors {
        let mut out = [0.0; 5];
        let mut total = 0.0;
        for &tag in allowed {
            if let Some(i) = class_index(tag) {
                out[i] = self.0[i];
                total += self.0[i];
            }
        }
        if total > 0.0 {
            out.iter_mut().for_each(|p| *p /= total);
        }
        Posteriors(out)
    }
}

/// A sentence-level language identifier.
///
/// [`CharNgramModel`] is the built-in implementation; anything else that can
/// produce class posteriors can stand in for it.
pub trait LanguageClassifier: Send + Sync {
    /// Posteriors for a sentence. Must sum to 1 unless the text has no
    /// letters, in which case all zeros is allowed.
    fn posteriors(&self, text: &str) -> Posteriors;

    /// Posteriors for a single token over the four inventory languages.
    fn token_posteriors(&self, token: &str) -> Posteriors {
        self.posteriors(token).restricted(&LanguageTag::INVENTORY)
    }
}

/// Most probable language of `text` and its posterior; `(OTHER, 0.0)` when
/// the text is empty or has nothing to classify.
pub fn classify_sentence(model: &dyn LanguageClassifier, text: &str) -> (LanguageTag, f64) {
    if text.trim().is_empty() {
        return (LanguageTag::Other, 0.0);
    }
    let post = model.posteriors(text);
    if post.0.iter().all(|&p| p == 0.0) {
        return (LanguageTag::Other, 0.0);
    }
    post.best()
}

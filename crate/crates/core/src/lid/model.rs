use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{class_index, LanguageClassifier, Posteriors, CLASSES};
use crate::error::{Error, Result};
use crate::lang::LanguageTag;

/// First line of a serialized model.
pub const MODEL_MAGIC: &str = "BKLID1";

const MIN_N: usize = 1;
const MAX_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainOptions {
    /// Additive smoothing constant.
    pub alpha: f64,
    /// Minimum number of sentences for every class present.
    pub min_per_class: usize,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions {
            alpha: 0.1,
            min_per_class: 50,
        }
    }
}

/// Multinomial naive Bayes over character 1- to 4-grams of space-padded,
/// lowercased words.
#[derive(Debug, Clone)]
pub struct CharNgramModel {
    alpha: f64,
    sentences: [u64; 5],
    totals: [u64; 5],
    counts: BTreeMap<String, [u64; 5]>,
    log_prior: [f64; 5],
    table: FxHashMap<u128, [f64; 5]>,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    alpha: f64,
    ngram_min: usize,
    ngram_max: usize,
    classes: Vec<LanguageTag>,
    sentences: Vec<u64>,
    ngrams: BTreeMap<String, Vec<u64>>,
}

/// Trains a model from labelled sentences. Only counts are accumulated, so
/// the result does not depend on input order.
pub fn train<'a, I>(labeled: I, options: TrainOptions) -> Result<CharNgramModel>
where
    I: IntoIterator<Item = (&'a str, LanguageTag)>,
{
    if !(options.alpha > 0.0 && options.alpha.is_finite()) {
        return Err(Error::Config(format!("smoothing constant must be positive, got {}", options.alpha)));
    }
    let mut sentences = [0u64; 5];
    let mut counts: BTreeMap<String, [u64; 5]> = BTreeMap::new();
    let mut gram = String::new();
    for (text, tag) in labeled {
        let class = class_index(tag).ok_or_else(|| Error::Config(format!("cannot train on label {tag}")))?;
        sentences[class] += 1;
        for_each_ngram(text, |chars| {
            gram.clear();
            gram.extend(chars);
            match counts.get_mut(gram.as_str()) {
                Some(c) => c[class] += 1,
                None => {
                    let mut c = [0u64; 5];
                    c[class] = 1;
                    counts.insert(gram.clone(), c);
                }
            }
        });
    }
    let present: Vec<LanguageTag> = CLASSES.iter().zip(sentences).filter(|(_, n)| *n > 0).map(|(&t, _)| t).collect();
    if present.len() < 2 {
        return Err(Error::Config(format!("need at least 2 classes, found {}", present.len())));
    }
    for (tag, n) in CLASSES.iter().zip(sentences) {
        if n > 0 && (n as usize) < options.min_per_class {
            return Err(Error::Config(format!(
                "class {tag} has {n} sentences, need at least {}",
                options.min_per_class
            )));
        }
    }
    Ok(CharNgramModel::from_counts(options.alpha, sentences, counts))
}

/// Calls `f` with every n-gram of every padded word of `text`.
fn for_each_ngram(text: &str, mut f: impl FnMut(&[char])) {
    let mut word: Vec<char> = Vec::with_capacity(32);
    let mut flush = |word: &mut Vec<char>| {
        if word.len() > 2 {
            for n in MIN_N..=MAX_N {
                for window in word.windows(n) {
                    if n == 1 && window[0] == ' ' {
                        continue;
                    }
                    f(window);
                }
            }
        }
        word.clear();
        word.push(' ');
    };
    word.push(' ');
    for c in text.chars() {
        if c.is_alphabetic() || c == '\'' || c == '’' {
            let c = if c == '’' { '\'' } else { c };
            word.extend(c.to_lowercase());
        } else {
            word.push(' ');
            flush(&mut word);
        }
    }
    word.push(' ');
    flush(&mut word);
}

fn key(chars: &[char]) -> u128 {
    chars.iter().fold(chars.len() as u128, |k, &c| (k << 21) | c as u128)
}

impl CharNgramModel {
    fn from_counts(alpha: f64, sentences: [u64; 5], counts: BTreeMap<String, [u64; 5]>) -> CharNgramModel {
        let mut totals = [0u64; 5];
        for c in counts.values() {
            for i in 0..5 {
                totals[i] += c[i];
            }
        }
        let vocab = counts.len() as f64;
        let all: u64 = sentences.iter().sum();
        let mut log_prior = [f64::NEG_INFINITY; 5];
        for i in 0..5 {
            if sentences[i] > 0 {
                log_prior[i] = (sentences[i] as f64 / all as f64).ln();
            }
        }
        let mut table = FxHashMap::default();
        table.reserve(counts.len());
        for (gram, c) in &counts {
            let chars: Vec<char> = gram.chars().collect();
            let mut logp = [0.0; 5];
            for i in 0..5 {
                logp[i] = ((c[i] as f64 + alpha) / (totals[i] as f64 + alpha * vocab)).ln();
            }
            table.insert(key(&chars), logp);
        }
        CharNgramModel {
            alpha,
            sentences,
            totals,
            counts,
            log_prior,
            table,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Training sentences per class, in [`CLASSES`] order.
    pub fn class_sentences(&self) -> [u64; 5] {
        self.sentences
    }

    /// Total n-gram tokens seen per class.
    pub fn class_ngrams(&self) -> [u64; 5] {
        self.totals
    }

    pub fn vocabulary_size(&self) -> usize {
        self.counts.len()
    }

    fn log_likelihoods(&self, text: &str) -> ([f64; 5], usize) {
        let mut scores = [0.0; 5];
        let mut seen = 0;
        for_each_ngram(text, |chars| {
            if let Some(logp) = self.table.get(&key(chars)) {
                seen += 1;
                for i in 0..5 {
                    scores[i] += logp[i];
                }
            }
        });
        (scores, seen)
    }

    fn normalize(scores: [f64; 5]) -> Posteriors {
        let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if !max.is_finite() {
            return Posteriors([0.0; 5]);
        }
        let mut out = [0.0; 5];
        let mut total = 0.0;
        for i in 0..5 {
            out[i] = (scores[i] - max).exp();
            total += out[i];
        }
        out.iter_mut().for_each(|p| *p /= total);
        Posteriors(out)
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        let file = ModelFile {
            alpha: self.alpha,
            ngram_min: MIN_N,
            ngram_max: MAX_N,
            classes: CLASSES.to_vec(),
            sentences: self.sentences.to_vec(),
            ngrams: self.counts.iter().map(|(g, c)| (g.clone(), c.to_vec())).collect(),
        };
        writeln!(out, "{MODEL_MAGIC}").map_err(|e| Error::io("<model>", e))?;
        serde_json::to_writer(&mut out, &file)?;
        writeln!(out).map_err(|e| Error::io("<model>", e))?;
        Ok(())
    }

    pub fn read<R: BufRead>(mut input: R) -> Result<CharNgramModel> {
        let mut magic = String::new();
        input.read_line(&mut magic).map_err(|e| Error::io("<model>", e))?;
        if magic.trim_end() != MODEL_MAGIC {
            return Err(Error::Model(format!("expected magic {MODEL_MAGIC:?}, found {:?}", magic.trim_end())));
        }
        let file: ModelFile = serde_json::from_reader(input)?;
        if file.classes != CLASSES || file.sentences.len() != 5 {
            return Err(Error::Model("unexpected class table".into()));
        }
        if file.ngram_min != MIN_N || file.ngram_max != MAX_N {
            return Err(Error::Model(format!("unsupported n-gram range {}..={}", file.ngram_min, file.ngram_max)));
        }
        if !(file.alpha > 0.0) {
            return Err(Error::Model("smoothing constant must be positive".into()));
        }
        let mut sentences = [0u64; 5];
        sentences.copy_from_slice(&file.sentences);
        let mut counts = BTreeMap::new();
        for (gram, c) in file.ngrams {
            let arr: [u64; 5] = c
                .try_into()
                .map_err(|_| Error::Model(format!("n-gram {gram:?} needs 5 counts")))?;
            counts.insert(gram, arr);
        }
        Ok(CharNgramModel::from_counts(file.alpha, sentences, counts))
    }
}

impl LanguageClassifier for CharNgramModel {
    fn posteriors(&self, text: &str) -> Posteriors {
        let (ll, seen) = self.log_likelihoods(text);
        if seen == 0 {
            return Posteriors([0.0; 5]);
        }
        let mut scores = [0.0; 5];
        for i in 0..5 {
            scores[i] = self.log_prior[i] + ll[i];
        }
        Self::normalize(scores)
    }

    /// Uniform prior over the classes the model was trained on, restricted
    /// to the inventory languages.
    fn token_posteriors(&self, token: &str) -> Posteriors {
        let (ll, seen) = self.log_likelihoods(token);
        if seen == 0 {
            return Posteriors([0.0; 5]);
        }
        let mut scores = [f64::NEG_INFINITY; 5];
        for tag in LanguageTag::INVENTORY {
            let i = class_index(tag).unwrap();
            if self.sentences[i] > 0 {
                scores[i] = ll[i];
            }
        }
        Self::normalize(scores)
    }
}

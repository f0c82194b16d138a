use crate::corpus::Sentence;
use crate::lang::LanguageTag;

/// A maximal stretch of non-Luxembourgish tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForeignRun {
    /// Index of the first foreign token.
    pub start: usize,
    /// One past the last foreign token.
    pub end: usize,
    /// Foreign tokens in the run; neutral tokens inside do not count.
    pub len: usize,
    pub lang: LanguageTag,
}

/// Foreign runs of a sentence with assigned token languages.
///
/// Neutral tokens are transparent: they neither break a run nor lengthen it.
/// The run language is the majority language, ties going to the language of
/// the run's first token.
pub fn foreign_runs(sentence: &Sentence) -> Vec<ForeignRun> {
    let tags: Vec<LanguageTag> = sentence.tokens.iter().map(|t| t.lang).collect();
    runs_of(&tags)
}

pub(crate) fn runs_of(tags: &[LanguageTag]) -> Vec<ForeignRun> {
    let mut runs = Vec::new();
    let mut current: Option<(usize, usize, Vec<LanguageTag>)> = None;
    for (i, &tag) in tags.iter().enumerate() {
        match tag {
            LanguageTag::Neutral => {}
            LanguageTag::Lu => {
                if let Some((start, end, langs)) = current.take() {
                    runs.push(close(start, end, &langs));
                }
            }
            foreign => match current.as_mut() {
                Some((_, end, langs)) => {
                    *end = i + 1;
                    langs.push(foreign);
                }
                None => current = Some((i, i + 1, vec![foreign])),
            },
        }
    }
    if let Some((start, end, langs)) = current {
        runs.push(close(start, end, &langs));
    }
    runs
}

fn close(start: usize, end: usize, langs: &[LanguageTag]) -> ForeignRun {
    let mut best = langs[0];
    let mut best_count = 0;
    for &candidate in langs {
        let count = langs.iter().filter(|&&l| l == candidate).count();
        if count > best_count {
            best = candidate;
            best_count = count;
        }
    }
    ForeignRun {
        start,
        end,
        len: langs.len(),
        lang: best,
    }
}

/// Share of LU tokens among the non-neutral tokens within `window` positions
/// of `token_index`, the token itself excluded. An empty neighbourhood counts
/// as fully Luxembourgish.
pub fn local_lu_ratio(sentence: &Sentence, token_index: usize, window: usize) -> f64 {
    let tags: Vec<LanguageTag> = sentence.tokens.iter().map(|t| t.lang).collect();
    lu_ratio_of(&tags, token_index, window)
}

pub(crate) fn lu_ratio_of(tags: &[LanguageTag], index: usize, window: usize) -> f64 {
    let lo = index.saturating_sub(window);
    let hi = (index + window).min(tags.len().saturating_sub(1));
    let mut total = 0usize;
    let mut lu = 0usize;
    for (i, &tag) in tags.iter().enumerate().take(hi + 1).skip(lo) {
        if i == index || tag == LanguageTag::Neutral {
            continue;
        }
        total += 1;
        if tag == LanguageTag::Lu {
            lu += 1;
        }
    }
    if total == 0 {
        1.0
    } else {
        lu as f64 / total as f64
    }
}

//! Annotated corpus model and JSON-lines ingestion.

mod ingest;
mod segment;

pub use ingest::{ingest_corpus, CorpusFormat, CorpusReader, RawRecord, MAX_DATE, MIN_DATE};
pub use segment::{is_neutral_surface, split_sentences, tokenize};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::lang::{LanguageTag, LoanLabel, MixingRole};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub normalized: String,
    /// Byte offsets into the owning sentence's text.
    pub char_span: (usize, usize),
    pub lang: LanguageTag,
    pub loan_label: LoanLabel,
    pub mixing_role: MixingRole,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matched_pattern: Option<String>,
}

impl Token {
    /// A freshly segmented token. Neutral shapes are tagged immediately; every
    /// other token waits for language identification as `OTHER`.
    pub fn new(surface: &str, start: usize) -> Token {
        let neutral = is_neutral_surface(surface);
        Token {
            surface: surface.to_owned(),
            normalized: crate::text::fold(surface),
            char_span: (start, start + surface.len()),
            lang: if neutral {
                LanguageTag::Neutral
            } else {
                LanguageTag::Other
            },
            loan_label: LoanLabel::Unset,
            mixing_role: if neutral {
                MixingRole::Neutral
            } else {
                MixingRole::Unset
            },
            matched_pattern: None,
        }
    }

    pub fn is_neutral(&self) -> bool {
        self.lang == LanguageTag::Neutral
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum GateDecision {
    #[serde(rename = "PROCESS")]
    Process,
    #[default]
    #[serde(rename = "ROUTE_OTHER")]
    RouteOther,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sentence {
    pub text: String,
    pub tokens: Vec<Token>,
    pub sent_lang: LanguageTag,
    pub posterior: f64,
    pub gate_decision: GateDecision,
}

impl Sentence {
    pub fn new(text: &str) -> Sentence {
        Sentence {
            text: text.to_owned(),
            tokens: tokenize(text)
                .into_iter()
                .map(|(start, surface)| Token::new(surface, start))
                .collect(),
            sent_lang: LanguageTag::Other,
            posterior: 0.0,
            gate_decision: GateDecision::RouteOther,
        }
    }

    /// Tokens that carry a language, i.e. everything but punctuation and the like.
    pub fn content_tokens(&self) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(|t| !t.is_neutral())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub date: NaiveDate,
    pub section: String,
    pub sentences: Vec<Sentence>,
    pub token_count: usize,
}

impl Document {
    /// Segments `text` into sentences and tokens.
    pub fn from_text(id: impl Into<String>, date: NaiveDate, section: impl Into<String>, text: &str) -> Document {
        let sentences: Vec<Sentence> = split_sentences(text)
            .into_iter()
            .map(|(_, s)| Sentence::new(s))
            .collect();
        let token_count = sentences.iter().map(|s| s.tokens.len()).sum();
        Document {
            id: id.into(),
            date,
            section: section.into(),
            sentences,
            token_count,
        }
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flat_map(|s| s.tokens.iter())
    }

    /// Serializes back into the ingestion record shape. Sentences are joined
    /// with a single space, which re-segments to the same sentences.
    pub fn to_record(&self) -> RawRecord {
        let text = self
            .sentences
            .iter()
            .map(|s| s.text.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        RawRecord {
            id: self.id.clone(),
            date: self.date.format("%Y-%m-%d").to_string(),
            section: self.section.clone(),
            text,
        }
    }
}

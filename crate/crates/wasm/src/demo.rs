use std::sync::OnceLock;

use borrowkit::corpus::Document;
use borrowkit::detector::{Annotator, PipelineConfig};
use borrowkit::lid::{gate_threshold, read_labeled, train, GateConfig, TrainOptions};
use borrowkit::loanlex::{induce, parse_overrides, read_dictionary, InheritanceList, LexiconIndex};
use borrowkit::metrics::{document_metrics, BorrowingDiagnostics, MetricsConfig, MixingMetrics};
use borrowkit::pattern::{parse_pattern, PatternRegistry};
use serde::Serialize;

const SEED: &str = include_str!("../../../data/lid_seed.jsonl");
const DICTIONARY: &str = include_str!("../../../data/appendix/dictionary.jsonl");
const OVERRIDES: &str = include_str!("../../../data/sample/overrides.tsv");

/// Longest text the demo annotates, in bytes.
pub const MAX_TEXT: usize = 20_000;

pub fn gate_curve(base: f64, max: f64, short_len: usize, long_len: usize, up_to: usize) -> Result<Vec<f64>, String> {
    let config = GateConfig {
        base_threshold: base,
        max_threshold: max,
        short_len,
        long_len,
        matrix_fallback: true,
    };
    config.validate().map_err(|e| e.to_string())?;
    Ok((0..=up_to.min(1000)).map(|n| gate_threshold(&config, n)).collect())
}

#[derive(Serialize)]
struct Exploration {
    id: String,
    edits: usize,
    matches: bool,
    donor_candidates: Vec<String>,
    registry_matches: Vec<String>,
}

pub fn explore_pattern(spec: &str, lu_word: &str, donor_word: &str) -> Result<String, String> {
    let pattern = parse_pattern(spec).map_err(|e| e.to_string())?;
    let registry = PatternRegistry::builtin();
    let out = Exploration {
        id: pattern.id.clone(),
        edits: pattern.edits.len(),
        matches: !lu_word.is_empty() && !donor_word.is_empty() && pattern.matches(lu_word, donor_word),
        donor_candidates: if lu_word.is_empty() { Vec::new() } else { pattern.donor_candidates(lu_word) },
        registry_matches: registry
            .patterns
            .iter()
            .filter(|p| p.matches(lu_word, donor_word))
            .map(|p| p.id.clone())
            .collect(),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct RegistryRow {
    id: String,
    class: &'static str,
    donors: Vec<&'static str>,
    corpus_count: Option<u64>,
}

pub fn registry_patterns() -> String {
    let registry = PatternRegistry::builtin();
    let rows: Vec<RegistryRow> = registry
        .patterns
        .iter()
        .zip(&registry.corpus_counts)
        .map(|(p, (_, count))| RegistryRow {
            id: p.id.clone(),
            class: p.klass.name(),
            donors: p.donor_langs.iter().map(|d| d.code()).collect(),
            corpus_count: *count,
        })
        .collect();
    serde_json::to_string(&rows).expect("registry serializes")
}

fn annotator() -> Result<&'static Annotator, String> {
    static ANNOTATOR: OnceLock<Result<Annotator, String>> = OnceLock::new();
    ANNOTATOR
        .get_or_init(|| {
            let err = |e: borrowkit::Error| e.to_string();
            let rows = read_labeled(SEED.as_bytes()).map_err(err)?;
            let model = train(rows.iter().map(|r| (r.text.as_str(), r.lang)), TrainOptions::default()).map_err(err)?;
            let dictionary = read_dictionary(DICTIONARY.as_bytes()).map_err(err)?;
            let patterns = PatternRegistry::builtin().compile().map_err(err)?;
            let overrides = parse_overrides(OVERRIDES).map_err(err)?;
            let (lexicon, _) =
                induce(dictionary, &patterns, &[], &InheritanceList::default(), &overrides).map_err(err)?;
            Ok(Annotator::new(Box::new(model), PipelineConfig::default(), LexiconIndex::build(&lexicon)))
        })
        .as_ref()
        .map_err(Clone::clone)
}

#[derive(Serialize)]
struct TokenView<'a> {
    surface: &'a str,
    lang: &'static str,
    label: borrowkit::LoanLabel,
    role: borrowkit::MixingRole,
    pattern: Option<&'a str>,
}

#[derive(Serialize)]
struct SentenceView<'a> {
    text: &'a str,
    lang: &'static str,
    posterior: f64,
    gate: borrowkit::corpus::GateDecision,
    tokens: Vec<TokenView<'a>>,
}

#[derive(Serialize)]
struct TextView<'a> {
    sentences: Vec<SentenceView<'a>>,
    mixing: MixingMetrics,
    borrowing: BorrowingDiagnostics,
}

pub fn text_metrics(text: &str) -> Result<String, String> {
    if text.len() > MAX_TEXT {
        return Err(format!("text longer than {MAX_TEXT} bytes"));
    }
    let annotator = annotator()?;
    let date = borrowkit::corpus::MIN_DATE;
    let mut doc = Document::from_text("demo", date, "demo", text);
    annotator.annotate(&mut doc);
    let m = document_metrics(&doc, &MetricsConfig::default());
    let view = TextView {
        sentences: doc
            .sentences
            .iter()
            .map(|s| SentenceView {
                text: &s.text,
                lang: s.sent_lang.code(),
                posterior: s.posterior,
                gate: s.gate_decision,
                tokens: s
                    .tokens
                    .iter()
                    .map(|t| TokenView {
                        surface: &t.surface,
                        lang: t.lang.code(),
                        label: t.loan_label,
                        role: t.mixing_role,
                        pattern: t.matched_pattern.as_deref(),
                    })
                    .collect(),
            })
            .collect(),
        mixing: m.mixing,
        borrowing: m.borrowing,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

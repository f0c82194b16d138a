#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use borrowkit::lid::{read_labeled, train, CharNgramModel, TrainOptions};

pub fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

/// Model trained on the whole shipped seed set.
pub fn seed_model() -> &'static CharNgramModel {
    static MODEL: OnceLock<CharNgramModel> = OnceLock::new();
    MODEL.get_or_init(|| {
        let file = std::fs::File::open(data("lid_seed.jsonl")).unwrap();
        let rows = read_labeled(std::io::BufReader::new(file)).unwrap();
        train(rows.iter().map(|r| (r.text.as_str(), r.lang)), TrainOptions::default()).unwrap()
    })
}

use borrowkit::corpus::{Document, GateDecision};
use borrowkit::{LanguageTag, LoanLabel, MixingRole};
use chrono::NaiveDate;
use rand::Rng;

/// A document whose content tokens carry exactly `langs`, in order, plus one
/// trailing full stop.
pub fn tagged_document(id: &str, date: NaiveDate, section: &str, langs: &[LanguageTag]) -> Document {
    let text: Vec<String> = (0..langs.len()).map(|i| format!("w{i}")).collect();
    let mut doc = Document::from_text(id, date, section, &format!("{}.", text.join(" ")));
    let mut content = langs.iter();
    for s in &mut doc.sentences {
        s.gate_decision = GateDecision::Process;
        s.sent_lang = LanguageTag::Lu;
        for t in &mut s.tokens {
            if t.is_neutral() {
                t.mixing_role = MixingRole::Neutral;
                continue;
            }
            let lang = *content.next().unwrap();
            t.lang = lang;
            t.loan_label = LoanLabel::Native;
            t.mixing_role = if lang == LanguageTag::Lu { MixingRole::Matrix } else { MixingRole::Ambiguous };
        }
    }
    doc
}

/// Random annotated document: 0 to 60 content tokens, random languages,
/// some labelled as loans or code switches, dated 1999 to 2025.
pub fn random_document<R: Rng>(rng: &mut R, id: usize) -> Document {
    const SECTIONS: [&str; 4] = ["National", "International", "Kultur", "Sport"];
    const PATTERNS: [&str; 4] = ["exact", "on>oun", "er>éieren", "manual"];
    let n = rng.gen_range(0..=60);
    let langs: Vec<LanguageTag> = (0..n)
        .map(|_| match rng.gen_range(0..10) {
            0..=5 => LanguageTag::Lu,
            6 => LanguageTag::De,
            7 => LanguageTag::Fr,
            8 => LanguageTag::En,
            _ => LanguageTag::Other,
        })
        .collect();
    let date = NaiveDate::from_ymd_opt(rng.gen_range(1999..=2025), rng.gen_range(1..=12), rng.gen_range(1..=28)).unwrap();
    let section = SECTIONS[rng.gen_range(0..SECTIONS.len())];
    let mut doc = tagged_document(&format!("d{id}"), date, section, &langs);
    for s in &mut doc.sentences {
        for t in &mut s.tokens {
            if t.is_neutral() {
                continue;
            }
            match (t.lang, rng.gen_range(0..4)) {
                (LanguageTag::Fr, 0) => {
                    t.loan_label = LoanLabel::FrLoan;
                    t.mixing_role = MixingRole::Borrowing;
                    t.matched_pattern = Some(PATTERNS[rng.gen_range(0..PATTERNS.len())].into());
                }
                (LanguageTag::De, 0) => {
                    t.loan_label = LoanLabel::DeLoan;
                    t.mixing_role = MixingRole::Borrowing;
                    t.matched_pattern = Some("exact".into());
                }
                (LanguageTag::En | LanguageTag::Fr, 1) => t.mixing_role = MixingRole::CodeSwitch,
                _ => {}
            }
        }
    }
    doc
}

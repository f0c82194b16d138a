//! Per-document code-mixing indices and borrowing diagnostics.
//!
//! Language proportions are taken over the four-language inventory
//! (LU, DE, FR, EN, in that order). Neutral and `OTHER` tokens never enter
//! the proportions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::corpus::{Document, Token};
use crate::lang::{Donor, LanguageTag, MixingRole};
use crate::pattern::EXACT;
use crate::text::fold;

/// Token counts over LU, DE, FR, EN.
pub type LangCounts = [u64; 4];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsConfig {
    pub entropy_base: f64,
    /// Inventory size in the M-index denominator.
    pub inventory_k: usize,
}

impl Default for MetricsConfig {
    fn default() -> Self {
        MetricsConfig {
            entropy_base: 2.0,
            inventory_k: 4,
        }
    }
}

pub fn lang_counts<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> LangCounts {
    let mut counts = [0u64; 4];
    for t in tokens {
        if let Some(i) = t.lang.inventory_index() {
            counts[i] += 1;
        }
    }
    counts
}

pub fn distribution(counts: &LangCounts) -> [f64; 4] {
    let n: u64 = counts.iter().sum();
    if n == 0 {
        return [0.0; 4];
    }
    counts.map(|c| c as f64 / n as f64)
}

pub fn lang_distribution(document: &Document) -> [f64; 4] {
    distribution(&lang_counts(document.tokens()))
}

/// `100 * (N - max) / N`, 0 for an empty count vector.
pub fn cmi(counts: &[u64]) -> f64 {
    let n: u64 = counts.iter().sum();
    if n == 0 {
        return 0.0;
    }
    let max = counts.iter().copied().max().unwrap_or(0);
    100.0 * (n - max) as f64 / n as f64
}

/// Shannon entropy in bits.
pub fn entropy(dist: &[f64]) -> f64 {
    entropy_with_base(dist, 2.0)
}

pub fn entropy_with_base(dist: &[f64], base: f64) -> f64 {
    let h: f64 = dist.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.log(base)).sum();
    // -0.0 and round-off just below zero for monolingual input
    h.max(0.0)
}

/// M-index over a fixed inventory of four languages.
pub fn m_index(dist: &[f64]) -> f64 {
    m_index_with_k(dist, 4)
}

pub fn m_index_with_k(dist: &[f64], k: usize) -> f64 {
    let sum_sq: f64 = dist.iter().map(|p| p * p).sum();
    if sum_sq == 0.0 || k < 2 {
        return 0.0;
    }
    ((1.0 - sum_sq) / ((k - 1) as f64 * sum_sq)).max(0.0)
}

/// How many languages beyond Luxembourgish a document uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Scope {
    #[serde(rename = "LU_ONLY")]
    LuOnly,
    #[serde(rename = "LU_PLUS_1")]
    LuPlus1,
    #[serde(rename = "LU_PLUS_2")]
    LuPlus2,
    #[serde(rename = "LU_PLUS_3")]
    LuPlus3,
}

impl Scope {
    pub const ALL: [Scope; 4] = [Scope::LuOnly, Scope::LuPlus1, Scope::LuPlus2, Scope::LuPlus3];

    pub fn name(self) -> &'static str {
        match self {
            Scope::LuOnly => "LU_ONLY",
            Scope::LuPlus1 => "LU_PLUS_1",
            Scope::LuPlus2 => "LU_PLUS_2",
            Scope::LuPlus3 => "LU_PLUS_3",
        }
    }

    fn from_foreign_count(n: usize) -> Scope {
        match n {
            0 => Scope::LuOnly,
            1 => Scope::LuPlus1,
            2 => Scope::LuPlus2,
            _ => Scope::LuPlus3,
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scope::ALL
            .into_iter()
            .find(|scope| scope.name() == s)
            .ok_or_else(|| format!("unknown scope {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScopeCombo {
    pub scope: Scope,
    pub combo_key: String,
    /// Foreign material without any Luxembourgish token.
    pub anomaly: bool,
}

/// Scope from the number of non-LU languages present; combo key from the
/// sorted codes of every language present. A document with nothing to count
/// is `LU_ONLY` / `"LU"`.
pub fn scope_and_combo(counts: &LangCounts) -> ScopeCombo {
    let present: Vec<LanguageTag> = LanguageTag::INVENTORY
        .into_iter()
        .zip(counts)
        .filter(|(_, &c)| c > 0)
        .map(|(tag, _)| tag)
        .collect();
    if present.is_empty() {
        return ScopeCombo {
            scope: Scope::LuOnly,
            combo_key: "LU".to_owned(),
            anomaly: false,
        };
    }
    let foreign = present.iter().filter(|&&t| t != LanguageTag::Lu).count();
    let mut codes: Vec<&str> = present.iter().map(|t| t.code()).collect();
    codes.sort_unstable();
    ScopeCombo {
        scope: Scope::from_foreign_count(foreign),
        combo_key: codes.join("+"),
        anomaly: counts[0] == 0,
    }
}

/// Share of non-neutral tokens not tagged LU.
pub fn cs_rate<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> f64 {
    let (mut total, mut foreign) = (0u64, 0u64);
    for t in tokens {
        if t.is_neutral() {
            continue;
        }
        total += 1;
        if t.lang != LanguageTag::Lu {
            foreign += 1;
        }
    }
    if total == 0 {
        0.0
    } else {
        foreign as f64 / total as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingMetrics {
    pub counts: LangCounts,
    pub cmi: f64,
    pub entropy: f64,
    pub m_index: f64,
    pub scope: Scope,
    pub combo_key: String,
    pub scope_anomaly: bool,
    pub cs_rate: f64,
}

pub fn mixing_metrics(document: &Document, config: &MetricsConfig) -> MixingMetrics {
    let counts = lang_counts(document.tokens());
    let dist = distribution(&counts);
    let sc = scope_and_combo(&counts);
    MixingMetrics {
        counts,
        cmi: cmi(&counts),
        entropy: entropy_with_base(&dist, config.entropy_base),
        m_index: m_index_with_k(&dist, config.inventory_k),
        scope: sc.scope,
        combo_key: sc.combo_key,
        scope_anomaly: sc.anomaly,
        cs_rate: cs_rate(document.tokens()),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BorrowingDiagnostics {
    pub content_tokens: u64,
    pub borrowed_tokens: u64,
    pub borrowed_token_rate: f64,
    pub borrowed_types: u64,
    pub borrowed_type_rate: f64,
    pub donor_entropy: f64,
    /// Borrowed tokens whose pattern is anything but `exact`.
    pub adapted_tokens: u64,
    pub assimilation_ratio: f64,
    pub code_switch_tokens: u64,
    pub ambiguous_tokens: u64,
    pub borrowing_share: f64,
    pub per_donor: BTreeMap<Donor, u64>,
    pub per_pattern: BTreeMap<String, u64>,
}

/// Donor a token is borrowed from, if it counts as borrowed at all.
///
/// Loan-labelled tokens count through their label. Tokens in the
/// `BORROWING` role without a label count through their token language.
pub fn borrowed_donor(token: &Token) -> Option<Donor> {
    token.loan_label.donor().or_else(|| {
        if token.mixing_role == MixingRole::Borrowing {
            Donor::from_tag(token.lang)
        } else {
            None
        }
    })
}

pub fn borrowing_diagnostics(document: &Document, config: &MetricsConfig) -> BorrowingDiagnostics {
    let mut d = BorrowingDiagnostics::default();
    let mut all_types: BTreeSet<String> = BTreeSet::new();
    let mut borrowed_types: BTreeSet<String> = BTreeSet::new();
    for token in document.tokens() {
        if token.is_neutral() {
            continue;
        }
        d.content_tokens += 1;
        let key = fold(&token.surface);
        match token.mixing_role {
            MixingRole::CodeSwitch => d.code_switch_tokens += 1,
            MixingRole::Ambiguous => d.ambiguous_tokens += 1,
            _ => {}
        }
        if let Some(donor) = borrowed_donor(token) {
            d.borrowed_tokens += 1;
            *d.per_donor.entry(donor).or_default() += 1;
            if let Some(p) = &token.matched_pattern {
                *d.per_pattern.entry(p.clone()).or_default() += 1;
                if p != EXACT {
                    d.adapted_tokens += 1;
                }
            }
            borrowed_types.insert(key.clone());
        }
        all_types.insert(key);
    }
    d.borrowed_types = borrowed_types.len() as u64;
    d.borrowed_token_rate = ratio(d.borrowed_tokens, d.content_tokens);
    d.borrowed_type_rate = ratio(d.borrowed_types, all_types.len() as u64);
    d.assimilation_ratio = ratio(d.adapted_tokens, d.borrowed_tokens);
    d.borrowing_share = ratio(d.borrowed_tokens, d.borrowed_tokens + d.code_switch_tokens + d.ambiguous_tokens);
    let donor_dist: Vec<f64> = d
        .per_donor
        .values()
        .map(|&c| c as f64 / d.borrowed_tokens as f64)
        .collect();
    d.donor_entropy = entropy_with_base(&donor_dist, config.entropy_base);
    d
}

pub(crate) fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Everything the aggregator needs from one annotated document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentMetrics {
    pub id: String,
    pub date: NaiveDate,
    pub section: String,
    pub tokens: u64,
    pub mixing: MixingMetrics,
    pub borrowing: BorrowingDiagnostics,
}

pub fn document_metrics(document: &Document, config: &MetricsConfig) -> DocumentMetrics {
    DocumentMetrics {
        id: document.id.clone(),
        date: document.date,
        section: document.section.clone(),
        tokens: document.token_count as u64,
        mixing: mixing_metrics(document, config),
        borrowing: borrowing_diagnostics(document, config),
    }
}

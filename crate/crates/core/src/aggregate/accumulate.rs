use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PeriodScheme;
use crate::lang::Donor;
use crate::metrics::{ratio, DocumentMetrics};

/// Groups at or below this many articles are flagged as small samples.
pub const SMALL_SAMPLE_MAX: u64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupBy {
    Period,
    Section,
    PeriodSection,
    Scope,
    Combo,
    Month,
}

impl GroupBy {
    pub const ALL: [GroupBy; 6] = [
        GroupBy::Period,
        GroupBy::Section,
        GroupBy::PeriodSection,
        GroupBy::Scope,
        GroupBy::Combo,
        GroupBy::Month,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupBy::Period => "period",
            GroupBy::Section => "section",
            GroupBy::PeriodSection => "period-section",
            GroupBy::Scope => "scope",
            GroupBy::Combo => "combo",
            GroupBy::Month => "month",
        }
    }

    pub fn key(self, scheme: &PeriodScheme, doc: &DocumentMetrics) -> String {
        match self {
            GroupBy::Period => scheme.bucket(doc.date).to_owned(),
            GroupBy::Section => doc.section.clone(),
            GroupBy::PeriodSection => format!("{}|{}", scheme.bucket(doc.date), doc.section),
            GroupBy::Scope => doc.mixing.scope.name().to_owned(),
            GroupBy::Combo => doc.mixing.combo_key.clone(),
            GroupBy::Month => doc.date.format("%Y-%m").to_string(),
        }
    }
}

impl fmt::Display for GroupBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupBy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "period" => Ok(GroupBy::Period),
            "section" => Ok(GroupBy::Section),
            "period-section" | "period_section" | "period×section" | "periodxsection" => Ok(GroupBy::PeriodSection),
            "scope" => Ok(GroupBy::Scope),
            "combo" => Ok(GroupBy::Combo),
            "month" => Ok(GroupBy::Month),
            other => Err(format!(
                "unknown grouping {other:?}; expected one of period, section, period-section, scope, combo, month"
            )),
        }
    }
}

/// How per-document values are averaged within a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Weighting {
    /// Every document counts once.
    #[default]
    Document,
    /// Documents weigh by their number of inventory-language tokens.
    Token,
}

/// Mergeable per-group state.
///
/// Per-document values are kept rather than running sums, so medians are
/// exact and the finished row does not depend on how the input was chunked:
/// values are sorted before they are summed.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GroupStats {
    pub articles: u64,
    pub tokens: u64,
    pub content_tokens: u64,
    pub borrowed_tokens: u64,
    pub adapted_tokens: u64,
    pub code_switch_tokens: u64,
    pub ambiguous_tokens: u64,
    pub per_donor: BTreeMap<Donor, u64>,
    pub per_pattern: BTreeMap<String, u64>,
    /// (value, weight) per document.
    cmi: Vec<(f64, f64)>,
    entropy: Vec<(f64, f64)>,
    m_index: Vec<(f64, f64)>,
    cs_rate: Vec<(f64, f64)>,
}

impl GroupStats {
    pub fn add(&mut self, doc: &DocumentMetrics) {
        let weight = doc.mixing.counts.iter().sum::<u64>() as f64;
        let b = &doc.borrowing;
        self.articles += 1;
        self.tokens += doc.tokens;
        self.content_tokens += b.content_tokens;
        self.borrowed_tokens += b.borrowed_tokens;
        self.adapted_tokens += b.adapted_tokens;
        self.code_switch_tokens += b.code_switch_tokens;
        self.ambiguous_tokens += b.ambiguous_tokens;
        for (d, c) in &b.per_donor {
            *self.per_donor.entry(*d).or_default() += c;
        }
        for (p, c) in &b.per_pattern {
            *self.per_pattern.entry(p.clone()).or_default() += c;
        }
        self.cmi.push((doc.mixing.cmi, weight));
        self.entropy.push((doc.mixing.entropy, weight));
        self.m_index.push((doc.mixing.m_index, weight));
        self.cs_rate.push((doc.mixing.cs_rate, weight));
    }

    pub fn merge(&mut self, other: &GroupStats) {
        self.articles += other.articles;
        self.tokens += other.tokens;
        self.content_tokens += other.content_tokens;
        self.borrowed_tokens += other.borrowed_tokens;
        self.adapted_tokens += other.adapted_tokens;
        self.code_switch_tokens += other.code_switch_tokens;
        self.ambiguous_tokens += other.ambiguous_tokens;
        for (d, c) in &other.per_donor {
            *self.per_donor.entry(*d).or_default() += c;
        }
        for (p, c) in &other.per_pattern {
            *self.per_pattern.entry(p.clone()).or_default() += c;
        }
        self.cmi.extend_from_slice(&other.cmi);
        self.entropy.extend_from_slice(&other.entropy);
        self.m_index.extend_from_slice(&other.m_index);
        self.cs_rate.extend_from_slice(&other.cs_rate);
    }

    pub fn donor(&self, donor: Donor) -> u64 {
        self.per_donor.get(&donor).copied().unwrap_or(0)
    }

    /// Borrowed tokens against everything foreign that was not borrowed.
    pub fn borrowing_share(&self) -> f64 {
        ratio(
            self.borrowed_tokens,
            self.borrowed_tokens + self.code_switch_tokens + self.ambiguous_tokens,
        )
    }

    pub fn cmi_mean(&self, w: Weighting) -> f64 {
        mean(&self.cmi, w)
    }

    pub fn entropy_mean(&self, w: Weighting) -> f64 {
        mean(&self.entropy, w)
    }

    pub fn m_index_mean(&self, w: Weighting) -> f64 {
        mean(&self.m_index, w)
    }

    pub fn cs_rate_mean(&self, w: Weighting) -> f64 {
        mean(&self.cs_rate, w)
    }

    /// Per-document CMI values in ascending order.
    pub fn cmi_sorted(&self) -> Vec<f64> {
        sorted(self.cmi.iter().map(|&(v, _)| v))
    }

    pub fn row(&self, group: String, weighting: Weighting) -> AggregateRow {
        let cmi = self.cmi_sorted();
        AggregateRow {
            group,
            articles: self.articles,
            tokens: self.tokens,
            cmi_mean: self.cmi_mean(weighting),
            cmi_median: quantile(&cmi, 0.5),
            cmi_iqr_lo: quantile(&cmi, 0.25),
            cmi_iqr_hi: quantile(&cmi, 0.75),
            entropy_mean: self.entropy_mean(weighting),
            m_index_mean: self.m_index_mean(weighting),
            cs_rate_mean: self.cs_rate_mean(weighting),
            borrowed_tokens: self.borrowed_tokens,
            borrowing_share: self.borrowing_share(),
            donor_fr: self.donor(Donor::Fr),
            donor_de: self.donor(Donor::De),
            donor_en: self.donor(Donor::En),
            small_sample: self.articles <= SMALL_SAMPLE_MAX,
        }
    }
}

fn sorted(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Compensated sum of already ordered values.
fn neumaier(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut c) = (0.0f64, 0.0f64);
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            c += (sum - t) + x;
        } else {
            c += (x - t) + sum;
        }
        sum = t;
    }
    sum + c
}

fn mean(pairs: &[(f64, f64)], weighting: Weighting) -> f64 {
    if pairs.is_empty() {
        return 0.0;
    }
    match weighting {
        Weighting::Document => neumaier(sorted(pairs.iter().map(|&(v, _)| v)).into_iter()) / pairs.len() as f64,
        Weighting::Token => {
            let mut sorted_pairs = pairs.to_vec();
            sorted_pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
            let total = neumaier(sorted_pairs.iter().map(|&(_, w)| w));
            if total == 0.0 {
                0.0
            } else {
                neumaier(sorted_pairs.iter().map(|&(v, w)| v * w)) / total
            }
        }
    }
}

/// Linear-interpolation quantile of ascending values; 0 for no values.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    match sorted.len() {
        0 => 0.0,
        1 => sorted[0],
        n => {
            let h = (n - 1) as f64 * q.clamp(0.0, 1.0);
            let lo = h.floor() as usize;
            let hi = h.ceil() as usize;
            sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
        }
    }
}

/// One output row; field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub group: String,
    pub articles: u64,
    pub tokens: u64,
    pub cmi_mean: f64,
    pub cmi_median: f64,
    pub cmi_iqr_lo: f64,
    pub cmi_iqr_hi: f64,
    pub entropy_mean: f64,
    pub m_index_mean: f64,
    pub cs_rate_mean: f64,
    pub borrowed_tokens: u64,
    pub borrowing_share: f64,
    #[serde(rename = "donor_FR")]
    pub donor_fr: u64,
    #[serde(rename = "donor_DE")]
    pub donor_de: u64,
    #[serde(rename = "donor_EN")]
    pub donor_en: u64,
    pub small_sample: bool,
}

pub const AGGREGATE_HEADER: [&str; 16] = [
    "group",
    "articles",
    "tokens",
    "cmi_mean",
    "cmi_median",
    "cmi_iqr_lo",
    "cmi_iqr_hi",
    "entropy_mean",
    "m_index_mean",
    "cs_rate_mean",
    "borrowed_tokens",
    "borrowing_share",
    "donor_FR",
    "donor_DE",
    "donor_EN",
    "small_sample",
];

/// Single-pass grouped aggregation that can be split across workers and merged.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregator {
    scheme: PeriodScheme,
    group_by: GroupBy,
    groups: BTreeMap<String, GroupStats>,
    total: GroupStats,
}

impl Aggregator {
    pub fn new(scheme: PeriodScheme, group_by: GroupBy) -> Aggregator {
        Aggregator {
            scheme,
            group_by,
            groups: BTreeMap::new(),
            total: GroupStats::default(),
        }
    }

    pub fn add(&mut self, doc: &DocumentMetrics) {
        let key = self.group_by.key(&self.scheme, doc);
        self.groups.entry(key).or_default().add(doc);
        self.total.add(doc);
    }

    /// Folds in another aggregator over the same scheme and grouping.
    pub fn merge(&mut self, other: &Aggregator) {
        debug_assert_eq!(self.group_by, other.group_by);
        for (k, g) in &other.groups {
            self.groups.entry(k.clone()).or_default().merge(g);
        }
        self.total.merge(&other.total);
    }

    pub fn scheme(&self) -> &PeriodScheme {
        &self.scheme
    }

    pub fn group_by(&self) -> GroupBy {
        self.group_by
    }

    pub fn groups(&self) -> &BTreeMap<String, GroupStats> {
        &self.groups
    }

    /// Statistics over every document added, regardless of group.
    pub fn total(&self) -> &GroupStats {
        &self.total
    }

    /// Rows sorted by group key.
    pub fn rows(&self, weighting: Weighting) -> Vec<AggregateRow> {
        self.groups
            .iter()
            .map(|(k, g)| g.row(k.clone(), weighting))
            .collect()
    }
}

pub fn aggregate<'a>(
    docs: impl IntoIterator<Item = &'a DocumentMetrics>,
    scheme: &PeriodScheme,
    group_by: GroupBy,
) -> Vec<AggregateRow> {
    let mut agg = Aggregator::new(scheme.clone(), group_by);
    for d in docs {
        agg.add(d);
    }
    agg.rows(Weighting::Document)
}

/// One calendar month of the diachronic series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonthlyRow {
    pub month: String,
    pub articles: u64,
    pub tokens: u64,
    pub cs_rate_mean: f64,
    pub borrowed_tokens: u64,
    pub borrowing_share: f64,
    #[serde(rename = "donor_FR")]
    pub donor_fr: u64,
    #[serde(rename = "donor_DE")]
    pub donor_de: u64,
    #[serde(rename = "donor_EN")]
    pub donor_en: u64,
}

pub const MONTHLY_HEADER: [&str; 9] = [
    "month",
    "articles",
    "tokens",
    "cs_rate_mean",
    "borrowed_tokens",
    "borrowing_share",
    "donor_FR",
    "donor_DE",
    "donor_EN",
];

impl MonthlyRow {
    pub fn from_stats(month: String, g: &GroupStats) -> MonthlyRow {
        MonthlyRow {
            month,
            articles: g.articles,
            tokens: g.tokens,
            cs_rate_mean: g.cs_rate_mean(Weighting::Document),
            borrowed_tokens: g.borrowed_tokens,
            borrowing_share: g.borrowing_share(),
            donor_fr: g.donor(Donor::Fr),
            donor_de: g.donor(Donor::De),
            donor_en: g.donor(Donor::En),
        }
    }
}

/// Months with at least one document, in increasing order.
pub fn monthly_series<'a>(docs: impl IntoIterator<Item = &'a DocumentMetrics>) -> Vec<MonthlyRow> {
    let mut agg = Aggregator::new(PeriodScheme::six(), GroupBy::Month);
    for d in docs {
        agg.add(d);
    }
    monthly_rows(&agg)
}

pub fn monthly_rows(month_aggregator: &Aggregator) -> Vec<MonthlyRow> {
    month_aggregator
        .groups()
        .iter()
        .map(|(k, g)| MonthlyRow::from_stats(k.clone(), g))
        .collect()
}

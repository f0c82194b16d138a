//! Chunked aggregation, scope proportions and report schemas.

mod common;

use std::collections::BTreeMap;

use borrowkit::aggregate::{
    emit_reports, monthly_series, Aggregator, GroupBy, PeriodScheme, ReportFormat, Reports, Weighting,
    AGGREGATE_HEADER, MONTHLY_HEADER,
};
use borrowkit::metrics::{document_metrics, scope_and_combo, DocumentMetrics, MetricsConfig, Scope};
use borrowkit::LanguageTag::{self, De, En, Fr, Lu};
use chrono::NaiveDate;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus(n: usize, seed: u64) -> Vec<DocumentMetrics> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = MetricsConfig::default();
    (0..n)
        .map(|i| document_metrics(&common::random_document(&mut rng, i), &config))
        .collect()
}

fn chunked(docs: &[DocumentMetrics], chunks: usize, group_by: GroupBy) -> Aggregator {
    let scheme = PeriodScheme::six();
    let size = docs.len().div_ceil(chunks);
    let mut total = Aggregator::new(scheme.clone(), group_by);
    for part in docs.chunks(size) {
        let mut a = Aggregator::new(scheme.clone(), group_by);
        for d in part {
            a.add(d);
        }
        total.merge(&a);
    }
    total
}

#[test]
fn chunking_does_not_change_rows() {
    let docs = corpus(1000, 7);
    for group_by in GroupBy::ALL {
        for w in [Weighting::Document, Weighting::Token] {
            let one = chunked(&docs, 1, group_by).rows(w);
            for chunks in [4, 16] {
                let many = chunked(&docs, chunks, group_by).rows(w);
                assert_eq!(one.len(), many.len());
                for (a, b) in one.iter().zip(&many) {
                    let (ja, jb) = (serde_json::to_value(a).unwrap(), serde_json::to_value(b).unwrap());
                    for (k, va) in ja.as_object().unwrap() {
                        let vb = &jb[k];
                        match (va.as_f64(), vb.as_f64()) {
                            (Some(x), Some(y)) => assert!((x - y).abs() <= 1e-9, "{group_by} {k}: {x} vs {y}"),
                            _ => assert_eq!(va, vb, "{group_by} {k}"),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn reversed_order_gives_same_rows() {
    let docs = corpus(300, 11);
    let forward = chunked(&docs, 1, GroupBy::Period).rows(Weighting::Document);
    let mut rev = docs.clone();
    rev.reverse();
    assert_eq!(chunked(&rev, 3, GroupBy::Period).rows(Weighting::Document), forward);
}

#[test]
fn period_articles_sum_to_corpus() {
    let docs = corpus(500, 3);
    let rows = chunked(&docs, 1, GroupBy::Period).rows(Weighting::Document);
    assert_eq!(rows.iter().map(|r| r.articles).sum::<u64>(), 500);
}

#[test]
fn scope_proportions_are_reproduced() {
    // 40 LU only, 30 LU+1, 20 LU+2, 10 LU+3
    let shapes: [(&[LanguageTag], usize, &str); 6] = [
        (&[Lu, Lu, Lu], 40, "LU"),
        (&[Lu, Lu, Fr], 20, "FR+LU"),
        (&[Lu, De, Lu], 10, "DE+LU"),
        (&[Lu, Fr, En, Lu], 15, "EN+FR+LU"),
        (&[Fr, Lu, De, Lu], 5, "DE+FR+LU"),
        (&[Lu, De, Fr, En, Lu], 10, "DE+EN+FR+LU"),
    ];
    let date = NaiveDate::from_ymd_opt(2020, 5, 5).unwrap();
    let config = MetricsConfig::default();
    let mut docs = Vec::new();
    let mut expected_combos: BTreeMap<String, u64> = BTreeMap::new();
    for (langs, n, combo) in shapes {
        for i in 0..n {
            let d = common::tagged_document(&format!("{combo}{i}"), date, "National", langs);
            let m = document_metrics(&d, &config);
            let counts = borrowkit::metrics::lang_counts(d.tokens());
            assert_eq!(scope_and_combo(&counts).combo_key, combo);
            docs.push(m);
        }
        *expected_combos.entry(combo.to_owned()).or_default() += n as u64;
    }
    let by_scope = chunked(&docs, 1, GroupBy::Scope);
    let articles: BTreeMap<&str, u64> = by_scope.groups().iter().map(|(k, g)| (k.as_str(), g.articles)).collect();
    assert_eq!(
        articles,
        BTreeMap::from([
            (Scope::LuOnly.name(), 40),
            (Scope::LuPlus1.name(), 30),
            (Scope::LuPlus2.name(), 20),
            (Scope::LuPlus3.name(), 10)
        ])
    );
    let rows = by_scope.rows(Weighting::Document);
    let lu_only = rows.iter().find(|r| r.group == Scope::LuOnly.name()).unwrap();
    assert_eq!(lu_only.cmi_median, 0.0);
    assert_eq!(lu_only.cmi_mean, 0.0);

    let by_combo = chunked(&docs, 1, GroupBy::Combo);
    let combos: BTreeMap<String, u64> = by_combo.groups().iter().map(|(k, g)| (k.clone(), g.articles)).collect();
    assert_eq!(combos, expected_combos);
}

#[test]
fn report_files_carry_every_table_column() {
    let docs = corpus(200, 5);
    let scheme = PeriodScheme::six();
    let rows = chunked(&docs, 1, GroupBy::PeriodSection).rows(Weighting::Document);
    assert!(rows.iter().any(|r| r.group == "2020|National"));
    let monthly = monthly_series(&docs);
    let mut patterns = BTreeMap::new();
    for d in &docs {
        for (p, c) in &d.borrowing.per_pattern {
            *patterns.entry(p.clone()).or_default() += c;
        }
    }
    let classes = borrowkit::pattern::PatternRegistry::builtin()
        .patterns
        .iter()
        .map(|p| (p.id.clone(), p.klass))
        .collect();
    let reports = Reports {
        scheme: &scheme,
        rows: &rows,
        monthly: &monthly,
        pattern_counts: &patterns,
        pattern_classes: &classes,
        induction: None,
    };
    let dir = tempfile::tempdir().unwrap();
    emit_reports(&reports, dir.path(), &[ReportFormat::Csv, ReportFormat::Json]).unwrap();

    let header = |name: &str| {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        text.lines().next().unwrap().to_owned()
    };
    assert_eq!(header("aggregates_six.csv"), AGGREGATE_HEADER.join(","));
    assert_eq!(header("monthly_series.csv"), MONTHLY_HEADER.join(","));
    for family in ["articles_monthly", "patterns", "pattern_classes", "cs_rate_monthly", "cs_rate_period_mean", "cs_rate_period_sd"] {
        assert_eq!(header(&format!("series_{family}.csv")), "x,y");
    }
    let classes = std::fs::read_to_string(dir.path().join("series_pattern_classes.csv")).unwrap();
    assert!(classes.contains("MANUAL"), "{classes}");

    let json: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("aggregates_six.json")).unwrap()).unwrap();
    let first = json.as_array().unwrap()[0].as_object().unwrap();
    let keys: Vec<&str> = first.keys().map(String::as_str).collect();
    for col in AGGREGATE_HEADER {
        assert!(keys.contains(&col), "{col}");
    }
}

#[test]
fn empty_tables_keep_headers() {
    let scheme = PeriodScheme::five();
    let reports = Reports {
        scheme: &scheme,
        rows: &[],
        monthly: &[],
        pattern_counts: &BTreeMap::new(),
        pattern_classes: &BTreeMap::new(),
        induction: None,
    };
    let dir = tempfile::tempdir().unwrap();
    emit_reports(&reports, dir.path(), &[ReportFormat::Csv]).unwrap();
    let text = std::fs::read_to_string(dir.path().join("aggregates_five.csv")).unwrap();
    assert_eq!(text.trim_end(), AGGREGATE_HEADER.join(","));
}

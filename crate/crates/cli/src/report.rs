use std::collections::BTreeMap;
use std::fs;

use borrowkit::aggregate::{emit_reports, monthly_rows, Aggregator, GroupBy, PeriodScheme, ReportFormat, Reports, Weighting};
use borrowkit::corpus::{ingest_corpus, CorpusFormat, Document};
use borrowkit::loanlex::InductionReport;
use borrowkit::metrics::{document_metrics, DocumentMetrics, MetricsConfig};
use borrowkit::pattern::{PatternClass, PatternRegistry};
use rayon::prelude::*;

use crate::error::{input, internal, CliError, CliResult};
use crate::induce::write_atomic;
use crate::manifest::RunManifest;
use crate::{create_out_dir, thread_pool, ReportArgs};

pub const DOCUMENTS_FILE: &str = "documents.jsonl";

const BATCH: usize = 1024;

pub fn run(args: &ReportArgs) -> CliResult<()> {
    let mut manifest = RunManifest::start("report");

    let scheme = PeriodScheme::builtin(&args.scheme).map_err(input)?;
    let group_by: GroupBy = args.group_by.parse().map_err(CliError::Usage)?;
    let formats = parse_formats(&args.format)?;
    let weighting = if args.token_weighted { Weighting::Token } else { Weighting::Document };
    manifest.setting("scheme", &scheme.name);
    manifest.setting("group_by", group_by);
    manifest.setting("format", &args.format);
    manifest.setting("weighting", if args.token_weighted { "token" } else { "document" });

    let registry = match &args.patterns {
        Some(p) => {
            manifest.input(p)?;
            PatternRegistry::load(p).map_err(|e| input(format!("{}: {e}", p.display())))?
        }
        None => PatternRegistry::builtin(),
    };
    let pattern_classes: BTreeMap<String, PatternClass> =
        registry.patterns.iter().map(|p| (p.id.clone(), p.klass)).collect();

    let induction: Option<InductionReport> = match &args.induction_report {
        Some(p) => {
            manifest.input(p)?;
            let text = fs::read_to_string(p).map_err(|e| input(format!("{}: {e}", p.display())))?;
            Some(serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", p.display())))?)
        }
        None => None,
    };

    manifest.input(&args.annotated)?;
    let mut reader = ingest_corpus(&args.annotated, CorpusFormat::AnnotatedJsonLines).map_err(input)?;
    let pool = thread_pool(args.jobs)?;
    let config = MetricsConfig::default();

    let mut groups = Aggregator::new(scheme.clone(), group_by);
    let mut months = Aggregator::new(scheme.clone(), GroupBy::Month);
    let mut pattern_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut per_document: Vec<String> = Vec::new();
    let mut batch: Vec<Document> = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for doc in reader.by_ref().take(BATCH) {
            batch.push(doc.map_err(input)?);
        }
        if batch.is_empty() {
            break;
        }
        let metrics: Vec<DocumentMetrics> =
            pool.install(|| batch.par_iter().map(|d| document_metrics(d, &config)).collect());
        for m in &metrics {
            groups.add(m);
            months.add(m);
            for (p, c) in &m.borrowing.per_pattern {
                *pattern_counts.entry(p.clone()).or_default() += c;
            }
            if args.documents {
                per_document.push(serde_json::to_string(m).map_err(internal)?);
            }
        }
    }
    let skipped = reader.errors();
    manifest.setting("skipped_records", skipped);

    let rows = groups.rows(weighting);
    let monthly = monthly_rows(&months);
    let reports = Reports {
        scheme: &scheme,
        rows: &rows,
        monthly: &monthly,
        pattern_counts: &pattern_counts,
        pattern_classes: &pattern_classes,
        induction: induction.as_ref(),
    };
    create_out_dir(&args.out)?;
    let written = emit_reports(&reports, &args.out, &formats).map_err(internal)?;
    if args.documents {
        let mut text = per_document.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        write_atomic(&args.out, DOCUMENTS_FILE, text.as_bytes())?;
    }
    manifest.write(&args.out)?;

    println!(
        "{} documents in {} groups by {}; {} files written to {}",
        groups.total().articles,
        rows.len(),
        group_by,
        written.len() + usize::from(args.documents),
        args.out.display()
    );
    if skipped > 0 {
        println!("{skipped} records skipped");
    }
    Ok(())
}

/// `csv`, `json` or both, comma-separated.
fn parse_formats(raw: &str) -> CliResult<Vec<ReportFormat>> {
    let mut formats = Vec::new();
    for part in raw.split(',') {
        let f: ReportFormat = part.trim().parse().map_err(CliError::Usage)?;
        if !formats.contains(&f) {
            formats.push(f);
        }
    }
    Ok(formats)
}

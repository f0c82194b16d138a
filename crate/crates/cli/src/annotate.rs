use std::fs;
use std::io::{BufReader, BufWriter, Write};

use borrowkit::corpus::{ingest_corpus, CorpusFormat, Document};
use borrowkit::detector::{AnnotationSummary, Annotator, PipelineConfig};
use borrowkit::lid::CharNgramModel;
use borrowkit::loanlex::{Lexicon, LexiconIndex};
use rayon::prelude::*;

use crate::error::{input, internal, CliResult};
use crate::induce::{lexicon_version, write_atomic};
use crate::manifest::{digest_bytes, RunManifest};
use crate::{create_out_dir, thread_pool, AnnotateArgs};

pub const ANNOTATED_FILE: &str = "annotated.jsonl";
pub const SUMMARY_FILE: &str = "summary.json";

/// Documents handed to the worker pool at once. Output order follows input
/// order within and across batches.
const BATCH: usize = 512;

pub fn run(args: &AnnotateArgs) -> CliResult<()> {
    let mut manifest = RunManifest::start("annotate");

    let config = match &args.config {
        Some(p) => {
            manifest.input(p)?;
            PipelineConfig::load(p).map_err(|e| input(format!("{}: {e}", p.display())))?
        }
        None => PipelineConfig::default(),
    };
    let effective = config.to_config_string();
    manifest.setting("pipeline_config_sha256", digest_bytes(effective.as_bytes()));
    for line in effective.lines() {
        if let Some((k, v)) = line.split_once('=') {
            manifest.setting(k.trim(), v.trim());
        }
    }

    manifest.input(&args.model)?;
    let model_file = fs::File::open(&args.model).map_err(|e| input(format!("{}: {e}", args.model.display())))?;
    let model = CharNgramModel::read(BufReader::new(model_file))
        .map_err(|e| input(format!("{}: {e}", args.model.display())))?;

    manifest.input(&args.lexicon)?;
    let lexicon_bytes = fs::read(&args.lexicon).map_err(|e| input(format!("{}: {e}", args.lexicon.display())))?;
    let lexicon_text = String::from_utf8(lexicon_bytes.clone())
        .map_err(|e| input(format!("{}: {e}", args.lexicon.display())))?;
    let lexicon = Lexicon::from_tsv(&lexicon_text).map_err(|e| input(format!("{}: {e}", args.lexicon.display())))?;
    manifest.lexicon_version = Some(lexicon_version(&lexicon_bytes));

    manifest.input(&args.corpus)?;
    let mut reader = ingest_corpus(&args.corpus, CorpusFormat::JsonLines).map_err(input)?;

    let annotator = Annotator::new(Box::new(model), config, LexiconIndex::build(&lexicon));
    let pool = thread_pool(args.jobs)?;
    manifest.setting("jobs", pool.current_num_threads());

    create_out_dir(&args.out)?;
    let tmp = args.out.join(format!(".{ANNOTATED_FILE}.tmp"));
    let file = fs::File::create(&tmp).map_err(|e| internal(format!("{}: {e}", tmp.display())))?;
    let mut out = BufWriter::new(file);

    let mut summary = AnnotationSummary::default();
    let mut batch: Vec<Document> = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for doc in reader.by_ref().take(BATCH) {
            batch.push(doc.map_err(input)?);
        }
        if batch.is_empty() {
            break;
        }
        let lines: Vec<(AnnotationSummary, String)> = pool.install(|| {
            batch
                .par_iter_mut()
                .map(|doc| {
                    let s = annotator.annotate(doc);
                    let line = serde_json::to_string(doc).expect("documents serialize");
                    (s, line)
                })
                .collect()
        });
        for (s, line) in lines {
            summary.merge(&s);
            writeln!(out, "{line}").map_err(|e| internal(format!("{}: {e}", tmp.display())))?;
        }
    }
    summary.errors = reader.errors() as u64;
    out.into_inner()
        .map_err(|e| internal(e.error().to_string()))?
        .sync_all()
        .map_err(internal)?;
    fs::rename(&tmp, args.out.join(ANNOTATED_FILE)).map_err(internal)?;

    let summary_json = serde_json::to_string_pretty(&summary).map_err(internal)? + "\n";
    write_atomic(&args.out, SUMMARY_FILE, summary_json.as_bytes())?;
    manifest.write(&args.out)?;

    print!("{summary_json}");
    Ok(())
}

//! `borrowkit`: induce a loanword lexicon, train the language identifier,
//! annotate a corpus and report on it. Each stage reads and writes files so
//! it can be rerun on its own.

mod annotate;
mod error;
mod induce;
mod manifest;
mod report;
mod train;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "borrowkit", version, about = "Borrowing-aware analysis of Luxembourgish news text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a donor-tagged loanword lexicon from a bilingual dictionary.
    Induce(InduceArgs),
    /// Train the character n-gram language identifier.
    TrainLid(TrainArgs),
    /// Gate, label and classify every token of a corpus.
    Annotate(AnnotateArgs),
    /// Compute metrics for an annotated corpus and write aggregate reports.
    Report(ReportArgs),
}

#[derive(Args)]
pub struct InduceArgs {
    /// Dictionary dump, one JSON entry per line.
    #[arg(long)]
    pub dict: PathBuf,
    /// Pattern registry TSV; the built-in registry when omitted.
    #[arg(long)]
    pub patterns: Option<PathBuf>,
    /// Directory holding en_from_fr.txt, fr_from_en.txt, de_from_fr.txt and de_from_en.txt.
    #[arg(long)]
    pub chains: PathBuf,
    /// German lemmas inherited from Old High German, one per line.
    #[arg(long)]
    pub inheritance: Option<PathBuf>,
    /// Curation commands applied after automatic induction.
    #[arg(long)]
    pub overrides: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct TrainArgs {
    /// Labelled sentences, `{"text": .., "lang": ..}` per line.
    #[arg(long)]
    pub train: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Seed of the train/held-out split.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    /// Smallest number of training sentences accepted for a language.
    #[arg(long, default_value_t = 50)]
    pub min_per_class: usize,
}

#[derive(Args)]
pub struct AnnotateArgs {
    /// Raw corpus, `{id, date, section, text}` per line.
    #[arg(long)]
    pub corpus: PathBuf,
    /// Model file written by `train-lid`.
    #[arg(long)]
    pub model: PathBuf,
    /// Lexicon TSV written by `induce`.
    #[arg(long)]
    pub lexicon: PathBuf,
    /// Pipeline configuration (`key = value`); defaults when omitted.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args)]
pub struct ReportArgs {
    /// Annotated corpus written by `annotate`.
    #[arg(long)]
    pub annotated: PathBuf,
    /// Period scheme: six or five.
    #[arg(long, default_value = "six")]
    pub scheme: String,
    /// period, section, period-section, scope or combo.
    #[arg(long, default_value = "period")]
    pub group_by: String,
    /// csv or json for the aggregate and monthly tables.
    #[arg(long, default_value = "csv")]
    pub format: String,
    /// Average token-weighted instead of per document.
    #[arg(long)]
    pub token_weighted: bool,
    /// Induction report to copy next to the aggregates.
    #[arg(long)]
    pub induction_report: Option<PathBuf>,
    /// Pattern registry used to classify matched patterns; built-in when omitted.
    #[arg(long)]
    pub patterns: Option<PathBuf>,
    /// Also write per-document metrics as JSON lines.
    #[arg(long)]
    pub documents: bool,
    #[arg(long)]
    pub out: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Induce(a) => induce::run(&a),
        Command::TrainLid(a) => train::run(&a),
        Command::Annotate(a) => annotate::run(&a),
        Command::Report(a) => report::run(&a),
    }
}

pub(crate) fn thread_pool(jobs: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(error::internal)
}

pub(crate) fn create_out_dir(dir: &std::path::Path) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", dir.display())))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("BORROWKIT_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("borrowkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::fs;
use std::io::BufReader;

use borrowkit::loanlex::{
    induce, parse_overrides, read_dictionary, ChainDirection, DonorChainList, InheritanceList, LEXICON_VERSION_LINE,
};
use borrowkit::pattern::PatternRegistry;

use crate::error::{input, internal, CliError, CliResult};
use crate::manifest::{digest_bytes, RunManifest};
use crate::{create_out_dir, InduceArgs};

pub const LEXICON_FILE: &str = "lexicon.tsv";
pub const REPORT_FILE: &str = "induction_report.json";

pub fn run(args: &InduceArgs) -> CliResult<()> {
    let mut manifest = RunManifest::start("induce");

    let registry = match &args.patterns {
        Some(p) => {
            manifest.input(p)?;
            PatternRegistry::load(p).map_err(input)?
        }
        None => PatternRegistry::builtin(),
    };
    manifest.setting("patterns.version", registry.version.clone().unwrap_or_else(|| "unversioned".into()));
    let patterns = registry.compile().map_err(input)?;

    if !args.chains.is_dir() {
        return Err(CliError::Usage(format!("--chains {}: not a directory", args.chains.display())));
    }
    let mut chains = Vec::with_capacity(ChainDirection::ALL.len());
    for dir in ChainDirection::ALL {
        let path = args.chains.join(dir.file_name());
        if !path.is_file() {
            return Err(CliError::Usage(format!("missing chain list {}", path.display())));
        }
        manifest.input(&path)?;
        chains.push(DonorChainList::load(dir, &path).map_err(input)?);
    }

    let inheritance = match &args.inheritance {
        Some(p) => {
            manifest.input(p)?;
            InheritanceList::load(p).map_err(input)?
        }
        None => InheritanceList::default(),
    };
    let overrides = match &args.overrides {
        Some(p) => {
            manifest.input(p)?;
            let text = fs::read_to_string(p).map_err(|e| input(format!("{}: {e}", p.display())))?;
            parse_overrides(&text).map_err(|e| input(format!("{}: {e}", p.display())))?
        }
        None => Vec::new(),
    };

    manifest.input(&args.dict)?;
    let file = fs::File::open(&args.dict).map_err(|e| input(format!("{}: {e}", args.dict.display())))?;
    let dictionary =
        read_dictionary(BufReader::new(file)).map_err(|e| input(format!("{}: {e}", args.dict.display())))?;

    let (lexicon, report) = induce(dictionary, &patterns, &chains, &inheritance, &overrides).map_err(internal)?;
    let tsv = lexicon.to_tsv().map_err(internal)?;
    let report_json = serde_json::to_string_pretty(&report).map_err(internal)? + "\n";

    create_out_dir(&args.out)?;
    write_atomic(&args.out, LEXICON_FILE, tsv.as_bytes())?;
    write_atomic(&args.out, REPORT_FILE, report_json.as_bytes())?;

    manifest.lexicon_version = Some(lexicon_version(tsv.as_bytes()));
    manifest.write(&args.out)?;

    println!(
        "lexicon: {} entries ({} surface forms) from {} dictionary entries; {} parallel excluded, {} chain-resolved, {} reclassified",
        report.lexicon_entries,
        report.lexicon_surface_forms,
        report.dictionary_entries,
        report.parallel_excluded,
        report.chain_resolved,
        report.inheritance_reclassified
    );
    Ok(())
}

/// Format line plus a content digest, so two lexicons with the same
/// version string are still told apart.
pub fn lexicon_version(bytes: &[u8]) -> String {
    let format = LEXICON_VERSION_LINE.trim_start_matches('#').trim();
    format!("{format} sha256:{}", digest_bytes(bytes))
}

pub fn write_atomic(dir: &std::path::Path, name: &str, bytes: &[u8]) -> CliResult<()> {
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, bytes).map_err(|e| internal(format!("{}: {e}", tmp.display())))?;
    fs::rename(&tmp, dir.join(name)).map_err(|e| internal(format!("{}: {e}", dir.display())))
}

use std::collections::BTreeMap;
use std::fs;
use std::io::BufReader;

use borrowkit::lid::{classify_sentence, read_labeled, train, LabeledSentence, TrainOptions};
use borrowkit::LanguageTag;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{input, internal, CliError, CliResult};
use crate::induce::write_atomic;
use crate::manifest::RunManifest;
use crate::{create_out_dir, TrainArgs};

pub const MODEL_FILE: &str = "lid.model";

/// Share of every class held out for evaluation.
const HELD_OUT: f64 = 0.1;

pub fn run(args: &TrainArgs) -> CliResult<()> {
    let mut manifest = RunManifest::start("train-lid");
    manifest.input(&args.train)?;
    manifest.setting("seed", args.seed);
    manifest.setting("alpha", args.alpha);
    manifest.setting("min_per_class", args.min_per_class);

    let file = fs::File::open(&args.train).map_err(|e| input(format!("{}: {e}", args.train.display())))?;
    let labeled = read_labeled(BufReader::new(file)).map_err(|e| input(format!("{}: {e}", args.train.display())))?;

    let by_class = group(&labeled);
    if by_class.len() < 2 {
        return Err(CliError::Usage(format!(
            "training data needs at least two languages, found {}",
            by_class.len()
        )));
    }
    for (tag, rows) in &by_class {
        if rows.len() < args.min_per_class {
            return Err(CliError::Usage(format!(
                "{tag}: {} sentences, at least {} required",
                rows.len(),
                args.min_per_class
            )));
        }
    }

    let (train_set, held_out) = split(by_class, args.seed);
    let options = TrainOptions {
        alpha: args.alpha,
        min_per_class: 1,
    };
    let model = train(train_set.iter().map(|s| (s.text.as_str(), s.lang)), options).map_err(input)?;

    let mut correct: BTreeMap<LanguageTag, (usize, usize)> = BTreeMap::new();
    for s in &held_out {
        let (best, _) = classify_sentence(&model, &s.text);
        let slot = correct.entry(s.lang).or_default();
        slot.1 += 1;
        if best == s.lang {
            slot.0 += 1;
        }
    }
    let hits: usize = correct.values().map(|c| c.0).sum();
    let accuracy = if held_out.is_empty() { 0.0 } else { hits as f64 / held_out.len() as f64 };

    let mut bytes = Vec::new();
    model.write(&mut bytes).map_err(internal)?;
    create_out_dir(&args.out)?;
    write_atomic(&args.out, MODEL_FILE, &bytes)?;
    manifest.setting("train_sentences", train_set.len());
    manifest.setting("held_out_sentences", held_out.len());
    manifest.setting("held_out_accuracy", format!("{accuracy:.4}"));
    manifest.write(&args.out)?;

    println!(
        "held-out accuracy: {accuracy:.4} ({hits}/{}) trained on {} sentences",
        held_out.len(),
        train_set.len()
    );
    for (tag, (ok, n)) in &correct {
        println!("  {tag}: {ok}/{n}");
    }
    Ok(())
}

fn group(labeled: &[LabeledSentence]) -> BTreeMap<LanguageTag, Vec<LabeledSentence>> {
    let mut by_class: BTreeMap<LanguageTag, Vec<LabeledSentence>> = BTreeMap::new();
    for s in labeled {
        by_class.entry(s.lang).or_default().push(s.clone());
    }
    by_class
}

/// Stratified split: every class is shuffled with the seeded generator and
/// its first tenth (rounded, at least one) is held out.
fn split(by_class: BTreeMap<LanguageTag, Vec<LabeledSentence>>, seed: u64) -> (Vec<LabeledSentence>, Vec<LabeledSentence>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train_set = Vec::new();
    let mut held_out = Vec::new();
    for (_, mut rows) in by_class {
        rows.shuffle(&mut rng);
        let k = ((rows.len() as f64 * HELD_OUT).round() as usize).max(1).min(rows.len() - 1);
        held_out.extend(rows.drain(..k));
        train_set.extend(rows);
    }
    (train_set, held_out)
}

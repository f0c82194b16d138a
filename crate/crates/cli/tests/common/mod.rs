#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

pub fn borrowkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borrowkit"))
        .args(args)
        .env("BORROWKIT_LOG", "error")
        .output()
        .expect("binary runs")
}

pub fn ok(args: &[&str]) -> String {
    let out = borrowkit(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

pub fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Lexicon from the appendix dictionary plus the sample curation file.
pub fn sample_lexicon(dir: &Path) -> PathBuf {
    let out = dir.join("lex");
    ok(&[
        "induce",
        "--dict",
        p(&data("appendix/dictionary.jsonl")),
        "--chains",
        p(&data("appendix/chains")),
        "--overrides",
        p(&data("sample/overrides.tsv")),
        "--out",
        p(&out),
    ]);
    out.join("lexicon.tsv")
}

pub fn seed_model(dir: &Path) -> PathBuf {
    let out = dir.join("lid");
    ok(&["train-lid", "--train", p(&data("lid_seed.jsonl")), "--out", p(&out)]);
    out.join("lid.model")
}

/// Manifest JSON without its timestamps.
pub fn manifest_sans_time(dir: &Path) -> serde_json::Value {
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    let o = v.as_object_mut().unwrap();
    o.remove("started_at");
    o.remove("finished_at");
    v
}

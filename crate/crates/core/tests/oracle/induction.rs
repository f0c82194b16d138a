//! Exhaustive re-implementation of lexicon induction: every registry pattern
//! is tried on every translation, with no index and no shared pipeline code.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use borrowkit::loanlex::ChainDirection;
use borrowkit::pattern::{AdaptationPattern, PatternRegistry};
use borrowkit::Donor;
use serde_json::Value;

struct Row {
    lu: String,
    variants: Vec<String>,
    donor: Donor,
    source: String,
    pattern: String,
    pos: String,
    provenance: &'static str,
}

fn lines(dir: &Path, rel: &str) -> Vec<String> {
    fs::read_to_string(dir.join(rel))
        .unwrap()
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_owned)
        .collect()
}

fn first_match(patterns: &[AdaptationPattern], donor: Donor, lu: &str, sources: &[String]) -> Option<(String, String)> {
    for p in patterns.iter().filter(|p| p.donor_langs.contains(&donor)) {
        for s in sources {
            if p.matches(lu, s) {
                return Some((p.id.clone(), s.clone()));
            }
        }
    }
    None
}

/// Expected lexicon TSV for the fixture in `dir`.
pub fn brute_force(dir: &Path) -> String {
    let patterns = PatternRegistry::builtin().patterns;
    let chains: Vec<(Donor, Donor, BTreeSet<String>)> = ChainDirection::ALL
        .into_iter()
        .map(|d| {
            let words = lines(dir, &format!("chains/{}", d.file_name()));
            (d.borrower(), d.origin(), words.iter().map(|w| w.to_lowercase()).collect())
        })
        .collect();
    let inherited: BTreeSet<String> = lines(dir, "inheritance.txt").iter().map(|w| w.to_lowercase()).collect();

    let mut rows: BTreeMap<(String, String, Donor), Row> = BTreeMap::new();
    for line in lines(dir, "dictionary.jsonl") {
        let v: Value = serde_json::from_str(&line).unwrap();
        let pos = v["pos"].as_str().unwrap().to_owned();
        if !["NOUN", "VERB", "ADJ"].contains(&pos.as_str()) || v["proper_noun"].as_bool() == Some(true) {
            continue;
        }
        let lu = v["headword"].as_str().unwrap().to_owned();
        let variants: Vec<String> = v["variants"]
            .as_array()
            .map(|a| a.iter().map(|x| x.as_str().unwrap().to_owned()).collect())
            .unwrap_or_default();
        let mut matched: BTreeMap<Donor, Vec<(String, String)>> = BTreeMap::new();
        for (code, words) in v["translations"].as_object().unwrap() {
            let donor: Donor = code.parse().unwrap();
            let words: Vec<String> = words.as_array().unwrap().iter().map(|w| w.as_str().unwrap().to_owned()).collect();
            // every (pattern, translation) pair, not just the first
            let all: Vec<(String, String)> = patterns
                .iter()
                .filter(|p| p.donor_langs.contains(&donor))
                .flat_map(|p| words.iter().filter(|w| p.matches(&lu, w)).map(|w| (p.id.clone(), w.clone())))
                .collect();
            if !all.is_empty() {
                assert_eq!(Some(all[0].clone()), first_match(&patterns, donor, &lu, &words));
                matched.insert(donor, all);
            }
        }
        let donor = match matched.len() {
            0 => continue,
            1 => *matched.keys().next().unwrap(),
            2 => {
                let origins: BTreeSet<Donor> = chains
                    .iter()
                    .filter(|(b, o, _)| matched.contains_key(b) && matched.contains_key(o))
                    .filter(|(b, _, words)| matched[b].iter().any(|(_, s)| words.contains(&s.to_lowercase())))
                    .map(|(_, o, _)| *o)
                    .collect();
                if origins.len() != 1 {
                    continue;
                }
                *origins.iter().next().unwrap()
            }
            _ => continue,
        };
        let (pattern, source) = matched[&donor][0].clone();
        if donor == Donor::De && inherited.contains(&source.to_lowercase()) {
            continue;
        }
        rows.insert(
            (lu.to_lowercase(), lu.clone(), donor),
            Row { lu, variants, donor, source, pattern, pos, provenance: "AUTO" },
        );
    }

    for line in lines(dir, "overrides.tsv") {
        let cols: Vec<&str> = line.split('\t').collect();
        let donor: Donor = cols[2].parse().unwrap();
        let key = (cols[1].to_lowercase(), cols[1].to_owned(), donor);
        match cols[0] {
            "REMOVE" => {
                rows.remove(&key);
            }
            "ADD" => {
                let source = cols[3].to_owned();
                let pattern = first_match(&patterns, donor, cols[1], std::slice::from_ref(&source))
                    .map_or_else(|| "manual".to_owned(), |m| m.0);
                let provenance = if rows.contains_key(&key) { "HUMAN_EDITED" } else { "HUMAN_ADDED" };
                let variants = rows.get(&key).map(|r| r.variants.clone()).unwrap_or_default();
                rows.insert(
                    key,
                    Row {
                        lu: cols[1].to_owned(),
                        variants,
                        donor,
                        source,
                        pattern,
                        pos: cols.get(4).unwrap_or(&"NOUN").to_string(),
                        provenance,
                    },
                );
            }
            other => panic!("fixture uses {other}"),
        }
    }

    let mut out = String::from("# borrowkit-lexicon 1\nlu_form\tvariants\tdonor\tsource_form\tpattern_id\tpos\tprovenance\n");
    for r in rows.values() {
        out += &format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.lu,
            r.variants.join("|"),
            r.donor.code(),
            r.source,
            r.pattern,
            r.pos,
            r.provenance
        );
    }
    out
}

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use chrono::NaiveDate;
use log::warn;
use serde::{Deserialize, Serialize};

use super::Document;
use crate::error::{Error, Result};

pub const MIN_DATE: NaiveDate = match NaiveDate::from_ymd_opt(1990, 1, 1) {
    Some(d) => d,
    None => unreachable!(),
};
pub const MAX_DATE: NaiveDate = match NaiveDate::from_ymd_opt(2100, 12, 31) {
    Some(d) => d,
    None => unreachable!(),
};

/// One input line of a raw corpus file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawRecord {
    pub id: String,
    pub date: String,
    pub section: String,
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusFormat {
    /// `{id, date, section, text}` per line.
    #[default]
    JsonLines,
    /// Serialized [`Document`]s, as written by the annotator.
    AnnotatedJsonLines,
}

/// Streams documents out of a JSON-lines source.
///
/// Bad records are skipped with a warning and counted; they never stop the
/// stream. I/O errors end it.
pub struct CorpusReader<R> {
    lines: std::io::Lines<R>,
    format: CorpusFormat,
    line_no: usize,
    errors: usize,
    done: bool,
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(reader: R, format: CorpusFormat) -> Self {
        CorpusReader {
            lines: reader.lines(),
            format,
            line_no: 0,
            errors: 0,
            done: false,
        }
    }

    /// Records skipped so far.
    pub fn errors(&self) -> usize {
        self.errors
    }

    fn parse_line(&self, line: &str) -> std::result::Result<Document, String> {
        match self.format {
            CorpusFormat::JsonLines => {
                let record: RawRecord = serde_json::from_str(line).map_err(|e| e.to_string())?;
                record.into_document()
            }
            CorpusFormat::AnnotatedJsonLines => {
                let doc: Document = serde_json::from_str(line).map_err(|e| e.to_string())?;
                check_date(doc.date)?;
                Ok(doc)
            }
        }
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<Document>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => {
                    self.done = true;
                    return Some(Err(Error::io("<corpus>", e)));
                }
            };
            self.line_no += 1;
            if line.trim().is_empty() {
                continue;
            }
            match self.parse_line(&line) {
                Ok(doc) => return Some(Ok(doc)),
                Err(message) => {
                    self.errors += 1;
                    warn!("corpus line {}: skipped: {}", self.line_no, message);
                }
            }
        }
    }
}

impl RawRecord {
    pub fn into_document(self) -> std::result::Result<Document, String> {
        let date = parse_date(&self.date)?;
        Ok(Document::from_text(self.id, date, self.section, &self.text))
    }
}

/// Parses an ISO-8601 date, or the date part of an ISO-8601 timestamp.
pub(crate) fn parse_date(raw: &str) -> std::result::Result<NaiveDate, String> {
    let raw = raw.trim();
    let day = raw.get(..10).filter(|_| raw.len() > 10 && raw.as_bytes()[10] == b'T').unwrap_or(raw);
    let date = NaiveDate::parse_from_str(day, "%Y-%m-%d").map_err(|e| format!("invalid date {raw:?}: {e}"))?;
    check_date(date)?;
    Ok(date)
}

fn check_date(date: NaiveDate) -> std::result::Result<(), String> {
    if date < MIN_DATE || date > MAX_DATE {
        return Err(format!("date {date} outside {MIN_DATE}..={MAX_DATE}"));
    }
    Ok(())
}

/// Opens a corpus file for streaming.
pub fn ingest_corpus(path: &Path, format: CorpusFormat) -> Result<CorpusReader<BufReader<File>>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(CorpusReader::new(BufReader::new(file), format))
}

//! Rule-based sentence splitting and tokenization.

use unicode_segmentation::UnicodeSegmentation;

/// Words that end with a period without ending the sentence.
const ABBREVIATIONS: &[&str] = &[
    "dr", "mr", "mrs", "ms", "mme", "mlle", "prof", "st", "nr", "no", "vgl", "bzw", "z.b", "u.a",
    "asw", "ca", "mio", "mia", "hr", "fr", "jan", "feb", "febr", "aug", "sept", "okt", "oct", "nov",
    "dez", "déc", "dec", "art", "abs", "min", "max", "resp", "evtl", "ggf", "inkl", "zb", "vs",
];

/// French elided articles and pronouns, plus the Luxembourgish `d'`.
const CLITICS: &[&str] = &[
    "d", "l", "n", "s", "j", "m", "t", "c", "qu", "jusqu", "lorsqu", "puisqu",
];

const OPENING_QUOTES: &[char] = &['"', '\'', '«', '„', '“', '‘', '‚', '‹', '('];
const CLOSING_QUOTES: &[char] = &['"', '\'', '»', '“', '”', '’', '›', ')'];

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '’'
}

/// Splits `text` into trimmed sentences with their byte offsets.
///
/// A boundary is a run of `.`, `!` or `?` (optionally followed by closing
/// quotes) that is followed by whitespace and then an uppercase letter or an
/// opening quote. A single period after a known abbreviation, an initial or a
/// one- or two-digit number does not end a sentence.
pub fn split_sentences(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if !matches!(c, '.' | '!' | '?') {
            i += 1;
            continue;
        }
        let mut j = i;
        while j < chars.len() && matches!(chars[j].1, '.' | '!' | '?') {
            j += 1;
        }
        let single_period = j == i + 1 && c == '.';
        while j < chars.len() && CLOSING_QUOTES.contains(&chars[j].1) {
            j += 1;
        }
        let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
        let mut k = j;
        while k < chars.len() && chars[k].1.is_whitespace() {
            k += 1;
        }
        let boundary = k > j
            && k < chars.len()
            && (chars[k].1.is_uppercase() || OPENING_QUOTES.contains(&chars[k].1))
            && !(single_period && guarded(&text[start..pos]));
        if boundary {
            push_trimmed(&mut out, text, start, end);
            start = chars[k].0;
            i = k;
        } else {
            i = j.max(i + 1);
        }
    }
    push_trimmed(&mut out, text, start, text.len());
    out
}

fn push_trimmed<'a>(out: &mut Vec<(usize, &'a str)>, text: &'a str, start: usize, end: usize) {
    let slice = &text[start..end];
    let trimmed_start = slice.len() - slice.trim_start().len();
    let trimmed = slice.trim();
    if !trimmed.is_empty() {
        out.push((start + trimmed_start, trimmed));
    }
}

/// True when the word right before a period is an abbreviation, an initial or
/// a short number (ordinals such as `1. Mee`).
fn guarded(before: &str) -> bool {
    let word = before
        .rsplit(|c: char| c.is_whitespace() || OPENING_QUOTES.contains(&c))
        .next()
        .unwrap_or("");
    if word.is_empty() {
        return false;
    }
    let lower = word.to_lowercase();
    if ABBREVIATIONS.contains(&lower.as_str()) {
        return true;
    }
    let mut chars = word.chars();
    let first = chars.next().unwrap();
    let count = word.chars().count();
    (count == 1 && first.is_uppercase()) || (count <= 2 && word.chars().all(|c| c.is_ascii_digit()))
}

/// True for surfaces without any letter (punctuation, digits, symbols) and
/// for URL or e-mail shapes.
pub fn is_neutral_surface(surface: &str) -> bool {
    !surface.chars().any(char::is_alphabetic) || is_url_or_email(surface)
}

fn is_url_or_email(s: &str) -> bool {
    let lower = s.to_ascii_lowercase();
    if lower.starts_with("http://") || lower.starts_with("https://") || lower.starts_with("www.") {
        return true;
    }
    match s.split_once('@') {
        Some((user, host)) => {
            !user.is_empty() && host.contains('.') && !host.starts_with('.') && !host.ends_with('.')
        }
        None => false,
    }
}

/// Tokenizes one sentence into `(byte offset, surface)` pairs.
///
/// Words follow Unicode word boundaries, with two adjustments: hyphenated
/// compounds stay whole (`entre-temps`) and elided clitics are split off
/// (`d'Buch` becomes `d'` + `Buch`). URLs and e-mail addresses are kept as a
/// single token; everything else that is neither a word nor whitespace becomes
/// a token on its own.
pub fn tokenize(sentence: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    for (chunk_start, chunk) in whitespace_chunks(sentence) {
        let core_len = chunk.trim_end_matches(|c: char| ".,;:!?)]}»\"'”".contains(c)).len();
        if core_len > 0 && is_url_or_email(&chunk[..core_len]) {
            out.push((chunk_start, &chunk[..core_len]));
            push_words(&mut out, chunk_start + core_len, &chunk[core_len..]);
        } else {
            push_words(&mut out, chunk_start, chunk);
        }
    }
    out
}

fn whitespace_chunks(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |chunk| (chunk.as_ptr() as usize - s.as_ptr() as usize, chunk))
}

fn push_words<'a>(out: &mut Vec<(usize, &'a str)>, base: usize, chunk: &'a str) {
    let segments: Vec<(usize, &str)> = chunk.split_word_bound_indices().collect();
    let is_word = |s: &str| s.chars().any(char::is_alphanumeric);
    let mut i = 0;
    while i < segments.len() {
        let (start, seg) = segments[i];
        if !is_word(seg) {
            out.push((base + start, seg));
            i += 1;
            continue;
        }
        // Absorb `-word` continuations into one compound token.
        let mut end = start + seg.len();
        let mut j = i + 1;
        while j + 1 < segments.len() && segments[j].1 == "-" && is_word(segments[j + 1].1) {
            end = segments[j + 1].0 + segments[j + 1].1.len();
            j += 2;
        }
        split_clitic(out, base + start, &chunk[start..end]);
        i = j;
    }
}

fn split_clitic<'a>(out: &mut Vec<(usize, &'a str)>, offset: usize, word: &'a str) {
    if let Some((idx, apostrophe)) = word.char_indices().find(|&(_, c)| is_apostrophe(c)) {
        let prefix = &word[..idx];
        let split_at = idx + apostrophe.len_utf8();
        if split_at < word.len() && CLITICS.contains(&prefix.to_lowercase().as_str()) {
            out.push((offset, &word[..split_at]));
            split_clitic(out, offset + split_at, &word[split_at..]);
            return;
        }
    }
    out.push((offset, word));
}

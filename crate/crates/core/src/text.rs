//! Small string helpers shared by the pattern engine and the indexes.

/// Case-folded form used for every lexicon and pattern comparison.
pub fn fold(s: &str) -> String {
    s.to_lowercase()
}

/// Drops the French grave, acute and circumflex accents on `e`.
///
/// Luxembourgish spellings of French loans regularly lose these accents inside
/// the stem (`décapotable` / `Decapotabel`), so adapted stems are compared in
/// this form. Affixes are never accent-folded.
pub fn fold_stem_accents(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            'é' | 'è' | 'ê' => 'e',
            'É' | 'È' | 'Ê' => 'E',
            c => c,
        })
        .collect()
}

/// Uppercases the first character and leaves the rest untouched.
pub fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

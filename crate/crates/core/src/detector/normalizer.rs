use crate::text::{capitalize, fold};

/// Maps a surface form to the form looked up in the lexicon.
pub trait Normalizer: Send + Sync {
    /// Must be idempotent.
    fn normalize(&self, surface: &str) -> String;

    /// Forms to try against the lexicon, most specific first.
    fn candidates(&self, surface: &str) -> Vec<String> {
        vec![self.normalize(surface)]
    }
}

/// Case trials plus the Eifeler rule.
///
/// Tries the surface as written, capitalized and lowercased, and then the
/// same forms without a final `n`, since Luxembourgish drops final `n` before
/// most consonants.
#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultNormalizer;

impl Normalizer for DefaultNormalizer {
    fn normalize(&self, surface: &str) -> String {
        fold(surface)
    }

    fn candidates(&self, surface: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::with_capacity(6);
        let mut push = |s: String| {
            if !s.is_empty() && !out.contains(&s) {
                out.push(s);
            }
        };
        push(surface.to_owned());
        push(capitalize(surface));
        push(surface.to_lowercase());
        if surface.chars().count() > 3 && (surface.ends_with('n') || surface.ends_with('N')) {
            let stem = &surface[..surface.len() - 1];
            push(stem.to_owned());
            push(capitalize(stem));
            push(stem.to_lowercase());
        }
        out
    }
}

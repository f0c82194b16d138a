//! Browser bindings for the single-page demo in `www/`.
//!
//! Each exported function is a thin wrapper over a plain Rust function of the
//! same name in [`demo`], which is what the native tests exercise. Results
//! cross the boundary as JSON strings.

use wasm_bindgen::prelude::*;

pub mod demo;

fn js(e: String) -> JsError {
    JsError::new(&e)
}

/// Gate threshold for sentence lengths `0..=up_to`.
#[wasm_bindgen]
pub fn gate_curve(base: f64, max: f64, short_len: usize, long_len: usize, up_to: usize) -> Result<Vec<f64>, JsError> {
    demo::gate_curve(base, max, short_len, long_len, up_to).map_err(js)
}

/// Matches a pattern spec against a word pair and lists donor candidates.
#[wasm_bindgen]
pub fn explore_pattern(spec: &str, lu_word: &str, donor_word: &str) -> Result<String, JsError> {
    demo::explore_pattern(spec, lu_word, donor_word).map_err(js)
}

/// The built-in adaptation pattern registry.
#[wasm_bindgen]
pub fn registry_patterns() -> String {
    demo::registry_patterns()
}

/// Annotates a short text with the bundled model and lexicon.
#[wasm_bindgen]
pub fn text_metrics(text: &str) -> Result<String, JsError> {
    demo::text_metrics(text).map_err(js)
}

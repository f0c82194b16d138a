//! Borrowing detection inside gated Luxembourgish sentences.
//!
//! Tokens get a loan label from the lexicon, then a mixing role from the
//! length of the foreign run they sit in and the share of Luxembourgish
//! tokens around them.

mod annotate;
mod config;
mod label;
mod mixing;
mod normalizer;
mod runs;

pub use annotate::{annotate_document, AnnotationSummary, Annotator};
pub use config::{DetectorConfig, PipelineConfig, CONFIG_VERSION};
pub use label::label_tokens;
pub use mixing::classify_mixing;
pub use normalizer::{DefaultNormalizer, Normalizer};
pub use runs::{foreign_runs, local_lu_ratio, ForeignRun};

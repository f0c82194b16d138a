//! Borrowing-aware analysis of Luxembourgish news text.
//!
//! The crate covers two pipelines that meet at the loanword lexicon:
//!
//! * lexicon induction: bilingual dictionary entries are matched against
//!   donor-to-Luxembourgish adaptation patterns ([`pattern`]), filtered for
//!   parallel borrowings and shared Germanic inheritance, and curated through
//!   override files ([`loanlex`]);
//! * corpus annotation: articles are segmented ([`corpus`]), gated by a
//!   sentence-level language identifier ([`lid`]), labelled token by token
//!   ([`detector`]), scored ([`metrics`]) and aggregated over periods and
//!   sections ([`aggregate`]).

pub mod aggregate;
pub mod corpus;
pub mod detector;
pub mod error;
pub mod lang;
pub mod lid;
pub mod loanlex;
pub mod metrics;
pub mod pattern;
pub mod text;

pub use error::{Error, Result};
pub use lang::{Donor, LanguageTag, LoanLabel, MixingRole};

//! Exact computations around bi-orderability of groups `ℤ ⋉ F_n`.
//!
//! The crate is organized bottom-up:
//!
//! - [`freegroup`]: reduced words and endomorphisms of free groups;
//! - [`magnus`]: truncated Magnus expansions and the induced bi-order;
//! - [`exactalg`]: integer matrices and polynomials, factorization over ℚ
//!   and Sturm root counting;
//! - [`lcs`]: induced actions on lower-central-series quotients;
//! - [`verdict`]: the obstruction pipeline and its verdicts;
//! - [`orderprops`]: randomized probes of infinitesimal subgroups;
//! - [`presentation`] and [`corpus`]: the presentation file format and
//!   the bundled knot presentations.

pub mod corpus;
pub mod error;
pub mod exactalg;
pub mod freegroup;
pub mod lcs;
pub mod magnus;
pub mod orderprops;
pub mod presentation;
mod serde_int;
pub mod verdict;

pub use error::{Error, Result};
pub use exactalg::{FactorReport, IntMatrix, IntPoly};
pub use freegroup::{Alphabet, AutomorphismCheck, FreeMap, Letter, Word};
pub use presentation::{format_presentation, parse_presentation};
pub use verdict::{
    analyze, analyze_with, AnalysisReport, AnalyzeOptions, KnotRecord, Outcome, Rule, Verdict,
};

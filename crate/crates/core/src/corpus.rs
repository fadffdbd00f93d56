//! Bundled knot presentations with their expected verdicts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::parse_presentation;
use crate::verdict::{KnotRecord, Outcome, Rule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub outcome: Outcome,
    pub rule: Rule,
    pub level: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct CorpusFile {
    pub name: &'static str,
    pub text: &'static str,
    pub expected: Expected,
}

pub const CORPUS: [CorpusFile; 4] = [
    CorpusFile {
        name: "trefoil",
        text: include_str!("../corpus/trefoil.knot"),
        expected: Expected {
            outcome: Outcome::NotBiorderable,
            rule: Rule::R1,
            level: Some(0),
        },
    },
    CorpusFile {
        name: "figure8",
        text: include_str!("../corpus/figure8.knot"),
        expected: Expected {
            outcome: Outcome::Biorderable,
            rule: Rule::R4,
            level: None,
        },
    },
    CorpusFile {
        name: "6_2",
        text: include_str!("../corpus/6_2.knot"),
        expected: Expected {
            outcome: Outcome::NotBiorderable,
            rule: Rule::R3,
            level: Some(1),
        },
    },
    CorpusFile {
        name: "7_6",
        text: include_str!("../corpus/7_6.knot"),
        expected: Expected {
            outcome: Outcome::NotBiorderable,
            rule: Rule::R3,
            level: Some(1),
        },
    },
];

/// A bundled knot with the verdict it is expected to receive.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub record: KnotRecord,
    pub expected: Expected,
    pub text: &'static str,
}

pub fn names() -> Vec<&'static str> {
    CORPUS.iter().map(|c| c.name).collect()
}

pub fn get(name: &str) -> Result<CorpusEntry> {
    let file = CORPUS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCorpusEntry(name.to_string()))?;
    Ok(CorpusEntry {
        record: parse_presentation(file.text)?,
        expected: file.expected,
        text: file.text,
    })
}

pub fn all() -> Result<Vec<CorpusEntry>> {
    CORPUS.iter().map(|c| get(c.name)).collect()
}

use std::fs;

use biorder_core::corpus::{self, Expected};
use biorder_core::orderprops::{self, ProbeConfig, WeakComparability};
use biorder_core::verdict::{analyze_with, AnalyzeOptions, Outcome, Rule};
use biorder_core::{format_presentation, parse_presentation, Alphabet, Error, FreeMap, KnotRecord};
use serde::Serialize;

use crate::render;
use crate::{AnalyzeArgs, CorpusAction, Format, ProbeArgs, ProbeName};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_ANALYSIS: u8 = 3;
pub const EXIT_USAGE: u8 = 4;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::BadToken(_) | Error::UnknownCorpusEntry(_) => EXIT_PARSE,
            Error::InvalidConfig(_) => EXIT_USAGE,
            _ => EXIT_ANALYSIS,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn load(source: &str) -> CliResult<KnotRecord> {
    if let Some(name) = source.strip_prefix("corpus:") {
        return Ok(corpus::get(name)?.record);
    }
    let text = fs::read_to_string(source).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("cannot read {source}: {e}"),
    })?;
    parse_presentation(&text).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("{source}: {e}"),
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn analyze(args: &AnalyzeArgs) -> CliResult<Output> {
    let record = load(&args.source)?;
    let opts = AnalyzeOptions {
        max_level: args.max_level,
        max_degree: args.max_degree,
    };
    let report = analyze_with(&record, &opts)?;
    Ok(Output::ok(match args.format {
        Format::Json => json(&report),
        Format::Text => render::analysis(&record, &report),
    }))
}

#[derive(Serialize)]
struct VerifiedEntry {
    name: &'static str,
    expected: Expected,
    actual: Option<Actual>,
    error: Option<String>,
    ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
struct Actual {
    outcome: Outcome,
    rule: Rule,
    level: Option<usize>,
}

#[derive(Serialize)]
struct VerifyReport {
    entries: Vec<VerifiedEntry>,
    all_passed: bool,
}

#[derive(Serialize)]
struct ListedEntry {
    name: &'static str,
    fibered: bool,
    rank: usize,
    expected: Expected,
}

#[derive(Serialize)]
struct ShownEntry {
    name: String,
    fibered: bool,
    generators: Vec<String>,
    map: Vec<String>,
    inverse: Option<Vec<String>>,
    notes: Vec<String>,
    expected: Expected,
}

pub fn corpus(action: &CorpusAction) -> CliResult<Output> {
    match action {
        CorpusAction::List { format } => {
            let mut listed = Vec::new();
            for file in corpus::CORPUS.iter() {
                let entry = corpus::get(file.name)?;
                listed.push(ListedEntry {
                    name: file.name,
                    fibered: entry.record.fibered,
                    rank: entry.record.rank(),
                    expected: entry.expected,
                });
            }
            Ok(Output::ok(match format {
                Format::Json => json(&listed),
                Format::Text => listed
                    .iter()
                    .map(|e| {
                        format!(
                            "{:<8} rank {}  fibered {:<5}  expected {}\n",
                            e.name,
                            e.rank,
                            e.fibered,
                            render::expected(&e.expected)
                        )
                    })
                    .collect(),
            }))
        }
        CorpusAction::Show { name, format } => {
            let entry = corpus::get(name)?;
            let k = &entry.record;
            Ok(Output::ok(match format {
                Format::Text => format_presentation(k),
                Format::Json => json(&ShownEntry {
                    name: k.name.clone(),
                    fibered: k.fibered,
                    generators: k.alphabet.names().iter().map(|c| c.to_string()).collect(),
                    map: k
                        .phi
                        .images()
                        .iter()
                        .map(|w| k.alphabet.format_word(w))
                        .collect(),
                    inverse: k
                        .phi
                        .inverse_images()
                        .map(|ws| ws.iter().map(|w| k.alphabet.format_word(w)).collect()),
                    notes: k.notes.clone(),
                    expected: entry.expected,
                }),
            }))
        }
        CorpusAction::Verify { format } => {
            let mut entries = Vec::new();
            for file in corpus::CORPUS.iter() {
                let result = corpus::get(file.name)
                    .and_then(|e| analyze_with(&e.record, &AnalyzeOptions::default()));
                let (actual, error) = match result {
                    Ok(report) => (
                        Some(Actual {
                            outcome: report.verdict.outcome,
                            rule: report.verdict.rule,
                            level: report.verdict.level,
                        }),
                        None,
                    ),
                    Err(e) => (None, Some(e.to_string())),
                };
                let ok = actual.is_some_and(|a| {
                    a.outcome == file.expected.outcome
                        && a.rule == file.expected.rule
                        && a.level == file.expected.level
                });
                entries.push(VerifiedEntry {
                    name: file.name,
                    expected: file.expected,
                    actual,
                    error,
                    ok,
                });
            }
            let all_passed = entries.iter().all(|e| e.ok);
            let stdout = match format {
                Format::Json => json(&VerifyReport {
                    entries,
                    all_passed,
                }),
                Format::Text => {
                    let mut s = String::new();
                    for e in &entries {
                        let got = match (&e.actual, &e.error) {
                            (Some(a), _) => render::expected(&Expected {
                                outcome: a.outcome,
                                rule: a.rule,
                                level: a.level,
                            }),
                            (None, Some(err)) => format!("error: {err}"),
                            (None, None) => "nothing".to_string(),
                        };
                        s.push_str(&format!(
                            "{} {:<8} {}\n",
                            if e.ok { "ok  " } else { "FAIL" },
                            e.name,
                            got
                        ));
                    }
                    s.push_str(if all_passed {
                        "all corpus verdicts match\n"
                    } else {
                        "corpus verdicts differ from expectations\n"
                    });
                    s
                }
            };
            Ok(Output {
                stdout,
                code: if all_passed { EXIT_OK } else { EXIT_ANALYSIS },
            })
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "SCREAMING_SNAKE_CASE")]
enum SearchReport {
    Witness { witness: String },
    NotFoundWithinBound { bound: usize, searched: usize },
}

#[derive(Serialize)]
struct WeakReport {
    property: &'static str,
    #[serde(flatten)]
    search: SearchReport,
}

pub fn probe(args: &ProbeArgs) -> CliResult<Output> {
    let cfg = ProbeConfig {
        seed: args.seed,
        samples: args.samples,
        max_word_length: args.max_word_length,
        bound: args.bound,
    };
    cfg.validate()?;

    let (alphabet, phi) = match &args.map {
        Some(source) => {
            let record = load(source)?;
            (record.alphabet, Some(record.phi))
        }
        None => (read_alphabet(&args.generators)?, None),
    };
    let word = |text: &str| alphabet.parse_word(text).map_err(CliError::from);
    let need_map = || -> CliResult<&FreeMap> {
        phi.as_ref()
            .ok_or_else(|| CliError::usage("this probe needs --map <file|corpus:NAME>"))
    };

    let result = match args.name {
        ProbeName::Subgroup => orderprops::subgroup_probe(&word(&args.g)?, &cfg)?,
        ProbeName::Normality => orderprops::normality_probe(&word(&args.g)?, &cfg)?,
        ProbeName::Dominance => orderprops::dominant_check(&word(&args.g)?, &cfg)?,
        ProbeName::Commutator => orderprops::commutator_infinitesimal_probe(alphabet.rank(), &cfg)?,
        ProbeName::OrderPreservation => orderprops::order_preservation_probe(need_map()?, &cfg)?,
        ProbeName::Invariance => orderprops::invariance_probe(need_map()?, &cfg)?,
        ProbeName::WeakComparability => {
            let found =
                orderprops::weak_comparability_search(&word(&args.f)?, &word(&args.g)?, &cfg)?;
            let search = match found {
                WeakComparability::Witness(h) => SearchReport::Witness {
                    witness: alphabet.format_word(&h),
                },
                WeakComparability::NotFoundWithinBound { bound, searched } => {
                    SearchReport::NotFoundWithinBound { bound, searched }
                }
            };
            let report = WeakReport {
                property: "weak-comparability",
                search,
            };
            return Ok(Output::ok(match args.format {
                Format::Json => json(&report),
                Format::Text => match &report.search {
                    SearchReport::Witness { witness } => {
                        format!("weak-comparability: witness h = {witness}\n")
                    }
                    SearchReport::NotFoundWithinBound { bound, searched } => format!(
                        "weak-comparability: NOT_FOUND_WITHIN_BOUND ({searched} words up to length {bound})\n"
                    ),
                },
            }));
        }
    };
    let report = result.render(&alphabet);
    Ok(Output::ok(match args.format {
        Format::Json => json(&report),
        Format::Text => render::probe(&report),
    }))
}

fn read_alphabet(text: &str) -> CliResult<Alphabet> {
    let mut names = Vec::new();
    for tok in text.split_whitespace() {
        let mut cs = tok.chars();
        match (cs.next(), cs.next()) {
            (Some(c), None) => names.push(c),
            _ => return Err(CliError::usage(format!("bad generator name {tok:?}"))),
        }
    }
    Alphabet::new(names).map_err(|e| CliError::usage(e.to_string()))
}

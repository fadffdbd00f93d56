//! Plain-text report layouts.

use std::fmt::Write;

use biorder_core::corpus::Expected;
use biorder_core::orderprops::ProbeReport;
use biorder_core::verdict::{AnalysisReport, LevelReport};
use biorder_core::KnotRecord;

pub fn expected(e: &Expected) -> String {
    match e.level {
        Some(level) => format!(
            "{} ({}, level {level})",
            e.outcome.as_str(),
            e.rule.as_str()
        ),
        None => format!("{} ({})", e.outcome.as_str(), e.rule.as_str()),
    }
}

fn indent(block: &str, pad: &str) -> String {
    block.lines().map(|l| format!("{pad}{l}\n")).collect()
}

fn level(out: &mut String, l: &LevelReport) {
    let k = l.level + 1;
    let _ = writeln!(
        out,
        "level {}: γ{k}/γ{}, rank {}",
        l.level,
        k + 1,
        l.basis.len()
    );
    let _ = writeln!(out, "  basis: {}", l.basis.join(" "));
    out.push_str("  matrix:\n");
    out.push_str(&indent(&l.matrix.to_string(), "    "));
    let _ = writeln!(out, "  char poly: {}", l.charpoly);
    out.push_str("  factors:\n");
    for f in &l.factor_report.factors {
        let _ = writeln!(
            out,
            "    ({})^{}  real roots {}, positive {}",
            f.poly, f.multiplicity, f.real_roots, f.positive_roots
        );
    }
    let fl = &l.flags;
    let _ = writeln!(
        out,
        "  rational root: {}  every factor has a positive root: {}  block without positive root: {}",
        fl.has_rational_root, fl.all_factors_have_positive_root, fl.some_factor_all_lambda
    );
}

pub fn analysis(k: &KnotRecord, r: &AnalysisReport) -> String {
    let mut out = String::new();
    let p = &r.premises;
    let _ = writeln!(
        out,
        "knot {}: rank {}, fibered {}, automorphism {}",
        r.name,
        k.rank(),
        p.fibered,
        p.automorphism.as_str()
    );
    for l in &r.levels {
        level(&mut out, l);
    }
    let r3 = match p.r3_lambda_block {
        Some(b) => b.to_string(),
        None => "not computed".to_string(),
    };
    let _ = writeln!(
        out,
        "premises: R1 no positive root {}; R2 no rational root {}, level-0 block {}; R3 level-1 block {r3}; R4 all roots positive real {}",
        p.r1_no_positive_root, p.r2_no_rational_root, p.r2_lambda_block, p.r4_all_roots_positive_real
    );
    let v = &r.verdict;
    let at = match v.level {
        Some(l) => format!(" at level {l}"),
        None => String::new(),
    };
    let _ = writeln!(
        out,
        "verdict: {}{at} by {}",
        v.outcome.as_str(),
        v.rule.as_str()
    );
    let _ = writeln!(out, "  {}", v.citation);
    out
}

pub fn probe(r: &ProbeReport) -> String {
    let mut out = format!(
        "{}: {}\n  trials {}, skipped {}, counterexamples {}\n",
        r.property,
        r.status.as_str(),
        r.trials,
        r.skipped,
        r.failure_count
    );
    for words in &r.failures {
        let _ = writeln!(out, "  witness: {}", words.join(" | "));
    }
    out
}

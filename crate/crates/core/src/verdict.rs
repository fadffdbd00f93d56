//! Bi-orderability verdicts for `ℤ ⋉_A ℤᵈ` and for `ℤ ⋉_φ F_n`.
//!
//! The pipeline computes the induced action of the monodromy `φ` on
//! `γ_k/γ_{k+1}` for each requested level (level `ℓ` is degree `k = ℓ + 1`),
//! factors its characteristic polynomial over ℚ and counts positive real
//! roots of every factor. Verdict rules are tried in the order
//! R1, R2, R4, R3, R5; every premise is recorded whether or not its rule
//! fires.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{
    all_roots_positive_real, factor_over_q, has_positive_real_root, rational_roots, FactorReport,
    IntMatrix, IntPoly,
};
use crate::freegroup::{Alphabet, AutomorphismCheck, FreeMap};
use crate::lcs::{self, DEFAULT_DEGREE_CAP};

/// A knot group presented as `ℤ ⋉_φ F_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub fibered: bool,
    pub alphabet: Alphabet,
    pub phi: FreeMap,
    pub notes: Vec<String>,
}

impl KnotRecord {
    pub fn new(
        name: impl Into<String>,
        fibered: bool,
        alphabet: Alphabet,
        phi: FreeMap,
    ) -> Result<Self> {
        if alphabet.rank() != phi.rank() {
            return Err(Error::RankMismatch {
                left: alphabet.rank(),
                right: phi.rank(),
            });
        }
        Ok(KnotRecord {
            name: name.into(),
            fibered,
            alphabet,
            phi,
            notes: Vec::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.phi.rank()
    }

    pub fn verify(&self) -> Result<AutomorphismCheck> {
        self.phi.verify_automorphism()
    }

    /// Characteristic polynomial of the abelianized monodromy.
    pub fn alexander_polynomial(&self) -> IntPoly {
        self.phi.abelianization_matrix().char_poly()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ZdClass {
    Biorderable,
    NotBiorderable,
}

/// `ℤ ⋉_A ℤᵈ` is bi-orderable iff every irreducible factor of the
/// characteristic polynomial of `A` over ℚ has a positive real root.
pub fn classify_zd(a: &IntMatrix) -> Result<ZdClass> {
    let det = a.determinant();
    if num_traits::Zero::is_zero(&det) {
        return Err(Error::NotAnAutomorphism("matrix is singular".into()));
    }
    let report = factor_over_q(&a.char_poly())?;
    Ok(if report.all_factors_have_positive_root() {
        ZdClass::Biorderable
    } else {
        ZdClass::NotBiorderable
    })
}

pub fn necessary_positive_eigenvalue(a: &IntMatrix) -> Result<bool> {
    has_positive_real_root(&a.char_poly())
}

/// True iff some irreducible block of `A` has no positive real eigenvalue.
/// Primary components along irreducible factors are rational subspaces, so
/// such a block always contains a nonzero rational vector.
pub fn lambda_block_obstruction(a: &IntMatrix) -> Result<bool> {
    Ok(factor_over_q(&a.char_poly())?.has_lambda_block())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    NotBiorderable,
    Biorderable,
    NoObstructionFound,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::NotBiorderable => "NOT_BIORDERABLE",
            Outcome::Biorderable => "BIORDERABLE",
            Outcome::NoObstructionFound => "NO_OBSTRUCTION_FOUND",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::R1 => {
                "fibered-knot necessary condition: a bi-orderable fibered knot group has an \
                 Alexander polynomial with at least one positive real root"
            }
            Rule::R2 => {
                "abelian quotient Z ⋉_M Z^n: M has no rational eigenvalue, so elements outside \
                 [G,G] are pairwise comparable and the order descends to the quotient, where an \
                 irreducible block of M without positive real eigenvalue rules out a bi-order \
                 (semidirect-product orders + block classification of Z ⋉_A Z^d)"
            }
            Rule::R3 => {
                "infinitesimal-subgroup argument on γ₂/γ₃: an irreducible block of the induced \
                 action without positive real eigenvalue contains a nonzero rational vector, \
                 which no t-invariant bi-order can accommodate (generic and non-generic cases \
                 + single-block positive-eigenvalue lemma)"
            }
            Rule::R4 => {
                "fibered-knot sufficient condition: all roots of the Alexander polynomial are \
                 real and positive"
            }
            Rule::R5 => "no rule applies up to the requested level",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub level: Option<usize>,
    pub rule: Rule,
    pub citation: String,
}

impl Verdict {
    fn new(outcome: Outcome, level: Option<usize>, rule: Rule) -> Self {
        Verdict {
            outcome,
            level,
            rule,
            citation: rule.citation().to_string(),
        }
    }
}

/// Fibered knot whose Alexander polynomial has only positive real roots.
pub fn cr_sufficient(k: &KnotRecord) -> Result<Option<Outcome>> {
    if k.fibered && all_roots_positive_real(&k.alexander_polynomial())? {
        return Ok(Some(Outcome::Biorderable));
    }
    Ok(None)
}

/// Fibered knot whose Alexander polynomial has no positive real root.
pub fn cr1_necessary(k: &KnotRecord) -> Result<Option<Outcome>> {
    if k.fibered && !has_positive_real_root(&k.alexander_polynomial())? {
        return Ok(Some(Outcome::NotBiorderable));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelFlags {
    pub has_rational_root: bool,
    pub all_factors_have_positive_root: bool,
    pub some_factor_all_lambda: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: usize,
    pub basis: Vec<String>,
    #[serde(serialize_with = "crate::serde_int::matrix")]
    pub matrix: IntMatrix,
    #[serde(serialize_with = "crate::serde_int::poly")]
    pub charpoly: IntPoly,
    #[serde(flatten)]
    pub factor_report: FactorReport,
    pub flags: LevelFlags,
}

/// Premises of every rule, recorded whether or not the rule fired.
/// `None` means the level the premise needs was not computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Premises {
    pub fibered: bool,
    pub automorphism: AutomorphismCheck,
    pub r1_no_positive_root: bool,
    pub r2_no_rational_root: bool,
    pub r2_lambda_block: bool,
    pub r3_lambda_block: Option<bool>,
    pub r4_all_roots_positive_real: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub levels: Vec<LevelReport>,
    pub verdict: Verdict,
    pub premises: Premises,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub max_level: usize,
    /// Largest quotient rank (and so characteristic-polynomial degree)
    /// the analysis will factor.
    pub max_degree: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            max_level: 1,
            max_degree: 8,
        }
    }
}

pub fn level_report(k: &KnotRecord, level: usize) -> Result<LevelReport> {
    let action = lcs::lcs_action(&k.phi, level + 1)?;
    level_report_from(level, action.basis.labels(&k.alphabet), action.matrix)
}

fn level_report_from(level: usize, basis: Vec<String>, matrix: IntMatrix) -> Result<LevelReport> {
    let charpoly = matrix.char_poly();
    let factor_report = factor_over_q(&charpoly)?;
    let flags = LevelFlags {
        has_rational_root: !rational_roots(&charpoly)?.is_empty(),
        all_factors_have_positive_root: factor_report.all_factors_have_positive_root(),
        some_factor_all_lambda: factor_report.has_lambda_block(),
    };
    Ok(LevelReport {
        level,
        basis,
        matrix,
        charpoly,
        factor_report,
        flags,
    })
}

pub fn analyze(k: &KnotRecord, max_level: usize) -> Result<AnalysisReport> {
    analyze_with(
        k,
        &AnalyzeOptions {
            max_level,
            ..AnalyzeOptions::default()
        },
    )
}

pub fn analyze_with(k: &KnotRecord, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let cap = DEFAULT_DEGREE_CAP - 1;
    if opts.max_level > cap {
        return Err(Error::DegreeOutOfRange {
            degree: opts.max_level,
            cap,
        });
    }
    let automorphism = k.verify()?;
    let mut levels = Vec::with_capacity(opts.max_level + 1);
    for level in 0..=opts.max_level {
        let dim = lcs::witt_number(k.rank(), level + 1);
        if dim > opts.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree: dim,
                cap: opts.max_degree,
            });
        }
        levels.push(level_report(k, level)?);
    }

    let base = &levels[0];
    let alexander = &base.charpoly;
    let premises = Premises {
        fibered: k.fibered,
        automorphism,
        r1_no_positive_root: !has_positive_real_root(alexander)?,
        r2_no_rational_root: !base.flags.has_rational_root,
        r2_lambda_block: base.flags.some_factor_all_lambda,
        r3_lambda_block: levels.get(1).map(|l| l.flags.some_factor_all_lambda),
        r4_all_roots_positive_real: all_roots_positive_real(alexander)?,
    };

    let r1 = premises.fibered && premises.r1_no_positive_root;
    let r2 = premises.r2_no_rational_root && premises.r2_lambda_block;
    let r3 = premises.r3_lambda_block == Some(true);
    let r4 = premises.fibered && premises.r4_all_roots_positive_real;
    if r4 && (r1 || r2 || r3) {
        return Err(Error::Inconsistent(format!(
            "{}: sufficient condition for bi-orderability holds together with an obstruction \
             (R1={r1}, R2={r2}, R3={r3})",
            k.name
        )));
    }

    let verdict = if r1 {
        Verdict::new(Outcome::NotBiorderable, Some(0), Rule::R1)
    } else if r2 {
        Verdict::new(Outcome::NotBiorderable, Some(0), Rule::R2)
    } else if r4 {
        Verdict::new(Outcome::Biorderable, None, Rule::R4)
    } else if r3 {
        Verdict::new(Outcome::NotBiorderable, Some(1), Rule::R3)
    } else {
        Verdict::new(Outcome::NoObstructionFound, Some(opts.max_level), Rule::R5)
    };

    Ok(AnalysisReport {
        name: k.name.clone(),
        levels,
        verdict,
        premises,
    })
}

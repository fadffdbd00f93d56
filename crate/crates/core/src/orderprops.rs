//! Randomized probes of infinitesimal subgroups in the Magnus bi-order.
//!
//! Every probe is deterministic in its [`ProbeConfig`]: trial `i` draws from
//! a ChaCha stream selected by `i`, so results never depend on how trials
//! are scheduled. A `PASS` is sampling evidence and nothing more.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freegroup::{random_reduced_word, Alphabet, FreeMap, Letter, Word};
use crate::magnus::{abs, compare, is_infinitesimal, sign};

/// Counterexamples kept per result; the full count is in `failure_count`.
pub const MAX_RECORDED_FAILURES: usize = 20;

/// Rejection-sampling attempts per trial before the trial is dropped.
const MAX_ATTEMPTS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProbeConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_word_length: usize,
    pub bound: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            seed: 0,
            samples: 1000,
            max_word_length: 10,
            bound: 3,
        }
    }
}

impl ProbeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if self.max_word_length == 0 {
            return Err(Error::InvalidConfig(
                "max_word_length must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn trial_rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ProbeStatus {
    Pass,
    Counterexample,
}

impl ProbeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ProbeStatus::Pass => "PASS",
            ProbeStatus::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeResult {
    pub property: &'static str,
    /// Checks actually carried out.
    pub trials: usize,
    /// Trials dropped because rejection sampling found no candidate.
    pub skipped: usize,
    pub failure_count: usize,
    /// The first few counterexamples, each as the tuple of words involved.
    pub failures: Vec<Vec<Word>>,
    pub status: ProbeStatus,
}

impl ProbeResult {
    pub fn passed(&self) -> bool {
        self.status == ProbeStatus::Pass
    }

    pub fn render(&self, alphabet: &Alphabet) -> ProbeReport {
        ProbeReport {
            property: self.property,
            trials: self.trials,
            skipped: self.skipped,
            failure_count: self.failure_count,
            failures: self
                .failures
                .iter()
                .map(|ws| ws.iter().map(|w| alphabet.format_word(w)).collect())
                .collect(),
            status: self.status,
        }
    }
}

/// Serializable form of a [`ProbeResult`] with words spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub property: &'static str,
    pub trials: usize,
    pub skipped: usize,
    pub failure_count: usize,
    pub failures: Vec<Vec<String>>,
    pub status: ProbeStatus,
}

struct Tally {
    property: &'static str,
    trials: usize,
    skipped: usize,
    failure_count: usize,
    failures: Vec<Vec<Word>>,
}

impl Tally {
    fn new(property: &'static str) -> Self {
        Tally {
            property,
            trials: 0,
            skipped: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<Word>) {
        self.trials += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(witness());
            }
        }
    }

    fn finish(self) -> ProbeResult {
        let status = if self.failure_count == 0 {
            ProbeStatus::Pass
        } else {
            ProbeStatus::Counterexample
        };
        ProbeResult {
            property: self.property,
            trials: self.trials,
            skipped: self.skipped,
            failure_count: self.failure_count,
            failures: self.failures,
            status,
        }
    }
}

fn nontrivial_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    random_reduced_word(rng, rank, len)
}

/// Draws from a mix of plain words, commutators and double commutators so
/// that deep terms of the lower central series are reachable.
fn candidate<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let half = (max_len / 2).max(1);
    match rng.gen_range(0..4) {
        0 | 1 => nontrivial_word(rng, rank, max_len),
        2 => {
            let u = nontrivial_word(rng, rank, half);
            let v = nontrivial_word(rng, rank, half);
            u.commutator(&v).expect("equal ranks")
        }
        _ => {
            let u = nontrivial_word(rng, rank, half);
            let v = nontrivial_word(rng, rank, half);
            let w = nontrivial_word(rng, rank, half);
            u.commutator(&v)
                .and_then(|c| c.commutator(&w))
                .expect("equal ranks")
        }
    }
}

/// Rejection-samples a nontrivial `f` with `f ≪ g`.
fn sample_infinitesimal<R: Rng>(rng: &mut R, g: &Word, max_len: usize) -> Result<Option<Word>> {
    for _ in 0..MAX_ATTEMPTS {
        let f = candidate(rng, g.rank(), max_len);
        if !f.is_identity() && is_infinitesimal(&f, g)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn require_positive(g: &Word) -> Result<()> {
    if sign(g) == 1 {
        Ok(())
    } else {
        Err(Error::NotPositive)
    }
}

fn infinitesimal_or_false(f: &Word, g: &Word) -> Result<bool> {
    if f.is_identity() {
        return Ok(false);
    }
    is_infinitesimal(f, g)
}

/// `Γ_g = {f : f ≪ g}` is closed under products and inverses.
pub fn subgroup_probe(g: &Word, cfg: &ProbeConfig) -> Result<ProbeResult> {
    cfg.validate()?;
    require_positive(g)?;
    let mut tally = Tally::new("subgroup");
    for trial in 0..cfg.samples {
        let mut rng = cfg.trial_rng(trial);
        let (Some(f1), Some(f2)) = (
            sample_infinitesimal(&mut rng, g, cfg.max_word_length)?,
            sample_infinitesimal(&mut rng, g, cfg.max_word_length)?,
        ) else {
            tally.skipped += 1;
            continue;
        };
        let product = f1.multiply(&f2)?;
        // The identity lies in Γ_g by convention.
        let closed = product.is_identity() || is_infinitesimal(&product, g)?;
        let ok = closed && is_infinitesimal(&f1.invert(), g)?;
        tally.record(ok, || vec![f1, f2]);
    }
    Ok(tally.finish())
}

/// `g` is infinitesimal with respect to no sampled `h`. Generators are
/// tried first, then random words.
pub fn dominant_check(g: &Word, cfg: &ProbeConfig) -> Result<ProbeResult> {
    cfg.validate()?;
    require_positive(g)?;
    let rank = g.rank();
    let mut tally = Tally::new("dominance");
    for trial in 0..cfg.samples {
        let h = if trial < rank {
            Word::generator(rank, trial)?
        } else {
            nontrivial_word(&mut cfg.trial_rng(trial), rank, cfg.max_word_length)
        };
        let ok = !is_infinitesimal(g, &h)?;
        tally.record(ok, || vec![h]);
    }
    Ok(tally.finish())
}

/// For dominant `g`, `Γ_g` is normal: `u f u⁻¹ ≪ g` whenever `f ≪ g`.
pub fn normality_probe(g: &Word, cfg: &ProbeConfig) -> Result<ProbeResult> {
    let premise = dominant_check(g, cfg)?;
    if !premise.passed() {
        return Err(Error::PremiseUnmet(format!(
            "dominance check found {} element(s) with g ≪ h",
            premise.failure_count
        )));
    }
    let mut tally = Tally::new("normality");
    for trial in 0..cfg.samples {
        let mut rng = cfg.trial_rng(trial);
        let Some(f) = sample_infinitesimal(&mut rng, g, cfg.max_word_length)? else {
            tally.skipped += 1;
            continue;
        };
        let u = nontrivial_word(&mut rng, g.rank(), cfg.max_word_length);
        let ok = is_infinitesimal(&f.conjugate_by(&u)?, g)?;
        tally.record(ok, || vec![f, u]);
    }
    Ok(tally.finish())
}

/// Nontrivial commutators are infinitesimal with respect to the dominant
/// generator `x₀`.
pub fn commutator_infinitesimal_probe(rank: usize, cfg: &ProbeConfig) -> Result<ProbeResult> {
    cfg.validate()?;
    let x0 = Word::generator(rank, 0)?;
    let mut tally = Tally::new("commutator");
    for trial in 0..cfg.samples {
        let mut rng = cfg.trial_rng(trial);
        let u = nontrivial_word(&mut rng, rank, cfg.max_word_length);
        let v = nontrivial_word(&mut rng, rank, cfg.max_word_length);
        let c = u.commutator(&v)?;
        if c.is_identity() {
            tally.skipped += 1;
            continue;
        }
        let ok = is_infinitesimal(&c, &x0)?;
        tally.record(ok, || vec![u, v]);
    }
    Ok(tally.finish())
}

/// Positive elements map to positive elements. Generators and the positive
/// member of each `x_i⁻¹x_j` are tried before random words.
pub fn order_preservation_probe(phi: &FreeMap, cfg: &ProbeConfig) -> Result<ProbeResult> {
    cfg.validate()?;
    let rank = phi.rank();
    let mut fixed = Vec::new();
    for i in 0..rank {
        fixed.push(Word::generator(rank, i)?);
    }
    for i in 0..rank {
        for j in i + 1..rank {
            let q = Word::generator(rank, i)?
                .invert()
                .multiply(&Word::generator(rank, j)?)?;
            fixed.push(abs(&q));
        }
    }
    let mut tally = Tally::new("order-preservation");
    for trial in 0..cfg.samples {
        let w = match fixed.get(trial) {
            Some(w) => w.clone(),
            None => abs(&nontrivial_word(
                &mut cfg.trial_rng(trial),
                rank,
                cfg.max_word_length,
            )),
        };
        let ok = sign(&phi.apply(&w)?) == 1;
        tally.record(ok, || vec![w]);
    }
    Ok(tally.finish())
}

/// An order-preserving `φ` maps `Γ_{x₀}` into itself.
pub fn invariance_probe(phi: &FreeMap, cfg: &ProbeConfig) -> Result<ProbeResult> {
    let premise = order_preservation_probe(phi, cfg)?;
    if !premise.passed() {
        return Err(Error::PremiseUnmet(format!(
            "map does not preserve the order ({} positive element(s) sent to non-positive)",
            premise.failure_count
        )));
    }
    let x0 = Word::generator(phi.rank(), 0)?;
    let mut tally = Tally::new("invariance");
    for trial in 0..cfg.samples {
        let mut rng = cfg.trial_rng(trial);
        let Some(f) = sample_infinitesimal(&mut rng, &x0, cfg.max_word_length)? else {
            tally.skipped += 1;
            continue;
        };
        let ok = infinitesimal_or_false(&phi.apply(&f)?, &x0)?;
        tally.record(ok, || vec![f]);
    }
    Ok(tally.finish())
}

/// Element `(m, w)` of `ℤ ⋉_φ F_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectElement {
    pub m: i64,
    pub w: Word,
}

impl SemidirectElement {
    pub fn new(m: i64, w: Word) -> Self {
        SemidirectElement { m, w }
    }
}

/// Lexicographic order on `ℤ ⋉_φ F_n`: the integer first, then the Magnus
/// order on words. Multiplication is `(m,w)(n,v) = (m+n, φⁿ(w)·v)`.
///
/// The order is bi-invariant when `φ` preserves the word order, so the
/// constructor runs [`order_preservation_probe`] once and keeps the result
/// as a warning rather than refusing to compare.
#[derive(Debug, Clone)]
pub struct SemidirectOrder {
    phi: FreeMap,
    pub premise: ProbeResult,
}

impl SemidirectOrder {
    pub fn new(phi: FreeMap, cfg: &ProbeConfig) -> Result<Self> {
        let premise = order_preservation_probe(&phi, cfg)?;
        Ok(SemidirectOrder { phi, premise })
    }

    pub fn premise_holds(&self) -> bool {
        self.premise.passed()
    }

    pub fn phi(&self) -> &FreeMap {
        &self.phi
    }

    pub fn mul(&self, a: &SemidirectElement, b: &SemidirectElement) -> Result<SemidirectElement> {
        let twisted = self.phi.power(b.m)?.apply(&a.w)?;
        Ok(SemidirectElement::new(a.m + b.m, twisted.multiply(&b.w)?))
    }

    pub fn compare(&self, a: &SemidirectElement, b: &SemidirectElement) -> Result<Ordering> {
        semidirect_compare(a, b)
    }
}

pub fn semidirect_compare(a: &SemidirectElement, b: &SemidirectElement) -> Result<Ordering> {
    match a.m.cmp(&b.m) {
        Ordering::Equal => compare(&a.w, &b.w),
        other => Ok(other),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakComparability {
    Witness(Word),
    NotFoundWithinBound { bound: usize, searched: usize },
}

/// Reduced words of length at most `bound` in shortlex order, letters
/// ordered `x₀ < x₀⁻¹ < x₁ < x₁⁻¹ < …`.
pub fn shortlex_words(rank: usize, bound: usize) -> impl Iterator<Item = Word> {
    let letters: Vec<Letter> = (0..rank)
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    (0..=bound).flat_map(move |len| {
        let letters = letters.clone();
        let mut out = Vec::new();
        let mut stack: Vec<Letter> = Vec::with_capacity(len);
        extend(&letters, len, &mut stack, &mut out, rank);
        out.into_iter()
    })
}

fn extend(
    letters: &[Letter],
    len: usize,
    stack: &mut Vec<Letter>,
    out: &mut Vec<Word>,
    rank: usize,
) {
    if stack.len() == len {
        out.push(Word::reduce(rank, stack.iter().copied()).expect("letters are in range"));
        return;
    }
    for &l in letters {
        if stack.last().is_some_and(|&last| last == l.inv()) {
            continue;
        }
        stack.push(l);
        extend(letters, len, stack, out, rank);
        stack.pop();
    }
}

/// Searches for `h` with `f` and `h g h⁻¹` mutually non-infinitesimal.
pub fn weak_comparability_search(
    f: &Word,
    g: &Word,
    cfg: &ProbeConfig,
) -> Result<WeakComparability> {
    if f.is_identity() || g.is_identity() {
        return Err(Error::TrivialElement);
    }
    if f.rank() != g.rank() {
        return Err(Error::RankMismatch {
            left: f.rank(),
            right: g.rank(),
        });
    }
    let mut searched = 0;
    for h in shortlex_words(f.rank(), cfg.bound) {
        searched += 1;
        let c = g.conjugate_by(&h)?;
        if !is_infinitesimal(f, &c)? && !is_infinitesimal(&c, f)? {
            return Ok(WeakComparability::Witness(h));
        }
    }
    Ok(WeakComparability::NotFoundWithinBound {
        bound: cfg.bound,
        searched,
    })
}

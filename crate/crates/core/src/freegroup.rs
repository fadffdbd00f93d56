//! Reduced words in a free group of finite rank, and endomorphisms given
//! by generator images.
//!
//! Words carry the rank of their ambient group so that mixing elements of
//! different free groups is caught at runtime. Textual I/O goes through an
//! [`Alphabet`]: each generator is a single lowercase ASCII letter and the
//! matching uppercase letter is its inverse.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

/// A generator of the free group, identified by its 0-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub usize);

/// A single letter `g` or `g⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        Word::reduce(rank, [Letter::pos(index)])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I>(rank: usize, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l.generator >= rank {
                return Err(Error::GeneratorOutOfRange {
                    index: l.generator,
                    rank,
                });
            }
            push_reduced(&mut out, l);
        }
        Ok(Word { rank, letters: out })
    }

    /// Builds a word from `(generator, exponent)` blocks.
    pub fn from_powers(rank: usize, blocks: &[(usize, i64)]) -> Result<Self> {
        let letters = blocks.iter().flat_map(|&(g, e)| {
            std::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)
        });
        Word::reduce(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Ok(Word {
            rank: self.rank,
            letters: out,
        })
    }

    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        self.multiply(other)?
            .multiply(&self.invert())?
            .multiply(&other.invert())
    }

    /// `h w h⁻¹`.
    pub fn conjugate_by(&self, h: &Word) -> Result<Word> {
        h.multiply(self)?.multiply(&h.invert())
    }

    /// `w^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut out.letters, l);
            }
        }
        out
    }

    /// Exponent sum of every generator: the image in the abelianization.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rank];
        for l in &self.letters {
            sums[l.generator] += l.sign();
        }
        sums
    }

    /// Re-embeds the word in a free group of another rank.
    pub fn with_rank(&self, rank: usize) -> Result<Word> {
        Word::reduce(rank, self.letters.iter().copied())
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    match out.last() {
        Some(&last) if last.cancels(l) => {
            out.pop();
        }
        _ => out.push(l),
    }
}

/// Uniformly random reduced word of length exactly `len`.
pub fn random_reduced_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5));
        if let Some(&last) = letters.last() {
            if last.cancels(l) {
                continue;
            }
        }
        letters.push(l);
    }
    Word { rank, letters }
}

/// Random reduced word whose length is uniform in `0..=max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_reduced_word(rng, rank, len)
}

/// Names for the generators of a free group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Alphabet {
    names: Vec<char>,
}

const STANDARD_NAMES: &str = "xyzwvutsrqponmlkjihgfdcba";

impl Alphabet {
    pub fn new(names: Vec<char>) -> Result<Self> {
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() || c == 'e' {
                return Err(Error::BadToken(format!(
                    "generator name {c:?} must be a lowercase ASCII letter other than 'e'"
                )));
            }
            if names[..i].contains(&c) {
                return Err(Error::BadToken(format!("duplicate generator name {c:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    /// `x, y, z, w, …` for small ranks.
    pub fn standard(rank: usize) -> Self {
        assert!(
            rank <= STANDARD_NAMES.len(),
            "rank too large for standard names"
        );
        Alphabet {
            names: STANDARD_NAMES.chars().take(rank).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn name(&self, index: usize) -> char {
        self.names[index]
    }

    pub fn index_of(&self, name: char) -> Option<usize> {
        self.names.iter().position(|&c| c == name)
    }

    pub fn letter(&self, c: char) -> Result<Letter> {
        let lower = c.to_ascii_lowercase();
        let index = self
            .index_of(lower)
            .ok_or_else(|| Error::BadToken(c.to_string()))?;
        Ok(Letter::new(index, c.is_ascii_uppercase()))
    }

    /// Parses whitespace-separated letters; `e` or empty text is the identity.
    /// Tokens of several letters (`xxB`) are read letter by letter.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "e" {
                continue;
            }
            for c in token.chars() {
                letters.push(self.letter(c)?);
            }
        }
        Word::reduce(self.rank(), letters)
    }

    pub fn format_word(&self, word: &Word) -> String {
        word.display(self).to_string()
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("e");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let c = self.alphabet.name(l.generator);
            let c = if l.inverse { c.to_ascii_uppercase() } else { c };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An endomorphism of `F_n` given by the images of the generators, with
/// optional images of a claimed inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMap {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Option<Vec<Word>>,
}

/// Outcome of [`FreeMap::verify_automorphism`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AutomorphismCheck {
    /// Both compositions with the supplied inverse are the identity.
    Confirmed,
    /// No inverse supplied; the abelianized determinant is ±1.
    NecessaryOnly,
}

impl AutomorphismCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            AutomorphismCheck::Confirmed => "CONFIRMED",
            AutomorphismCheck::NecessaryOnly => "NECESSARY_ONLY",
        }
    }
}

impl FreeMap {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<Self> {
        check_images(rank, &images)?;
        Ok(FreeMap {
            rank,
            images,
            inverse_images: None,
        })
    }

    pub fn with_inverse(rank: usize, images: Vec<Word>, inverse: Vec<Word>) -> Result<Self> {
        check_images(rank, &images)?;
        check_images(rank, &inverse)?;
        Ok(FreeMap {
            rank,
            images,
            inverse_images: Some(inverse),
        })
    }

    pub fn identity(rank: usize) -> Self {
        let gens: Vec<Word> = (0..rank)
            .map(|i| Word::generator(rank, i).expect("index < rank"))
            .collect();
        FreeMap {
            rank,
            images: gens.clone(),
            inverse_images: Some(gens),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &Word {
        &self.images[generator]
    }

    pub fn inverse_images(&self) -> Option<&[Word]> {
        self.inverse_images.as_deref()
    }

    /// The supplied inverse as a map of its own, with `self` as its inverse.
    pub fn inverse(&self) -> Result<FreeMap> {
        let inv = self.inverse_images.clone().ok_or(Error::MissingInverse)?;
        Ok(FreeMap {
            rank: self.rank,
            images: inv,
            inverse_images: Some(self.images.clone()),
        })
    }

    pub fn without_inverse(&self) -> FreeMap {
        FreeMap {
            rank: self.rank,
            images: self.images.clone(),
            inverse_images: None,
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank,
            });
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in &w.letters {
            let image = &self.images[l.generator].letters;
            if l.inverse {
                for &m in image.iter().rev() {
                    push_reduced(&mut out, m.inv());
                }
            } else {
                for &m in image {
                    push_reduced(&mut out, m);
                }
            }
        }
        Ok(Word {
            rank: self.rank,
            letters: out,
        })
    }

    /// `self ∘ other`: first `other`, then `self`. The inverse is carried
    /// along when both factors have one.
    pub fn compose(&self, other: &FreeMap) -> Result<FreeMap> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        let inverse_images = match (&self.inverse_images, &other.inverse_images) {
            (Some(si), Some(oi)) => {
                let oi_map = FreeMap {
                    rank: self.rank,
                    images: oi.clone(),
                    inverse_images: None,
                };
                Some(
                    si.iter()
                        .map(|w| oi_map.apply(w))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            _ => None,
        };
        Ok(FreeMap {
            rank: self.rank,
            images,
            inverse_images,
        })
    }

    /// `φⁿ` for any integer `n`; negative powers need the inverse.
    pub fn power(&self, n: i64) -> Result<FreeMap> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut out = FreeMap::identity(self.rank);
        if base.inverse_images.is_none() {
            out.inverse_images = None;
        }
        for _ in 0..n.unsigned_abs() {
            out = base.compose(&out)?;
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters == [Letter::pos(i)])
    }

    /// Column `j` is the exponent-sum vector of the image of generator `j`.
    pub fn abelianization_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let mut rows = vec![vec![0i64; n]; n];
        for (j, w) in self.images.iter().enumerate() {
            for (i, s) in w.exponent_sums().into_iter().enumerate() {
                rows[i][j] = s;
            }
        }
        IntMatrix::from_i64_rows(&rows).expect("square by construction")
    }

    pub fn verify_automorphism(&self) -> Result<AutomorphismCheck> {
        if let Some(inv) = &self.inverse_images {
            let inv_map = FreeMap {
                rank: self.rank,
                images: inv.clone(),
                inverse_images: None,
            };
            let plain = self.without_inverse();
            if !plain.compose(&inv_map)?.is_identity() {
                return Err(Error::NotAnAutomorphism(
                    "φ ∘ φ⁻¹ is not the identity".into(),
                ));
            }
            if !inv_map.compose(&plain)?.is_identity() {
                return Err(Error::NotAnAutomorphism(
                    "φ⁻¹ ∘ φ is not the identity".into(),
                ));
            }
            return Ok(AutomorphismCheck::Confirmed);
        }
        let det = self.abelianization_matrix().determinant();
        if det.magnitude() != &num_bigint::BigUint::from(1u32) {
            return Err(Error::NotAnAutomorphism(format!(
                "abelianized determinant is {det}, not ±1"
            )));
        }
        Ok(AutomorphismCheck::NecessaryOnly)
    }

    /// Renders the map as `g -> image` lines.
    pub fn describe(&self, alphabet: &Alphabet) -> Vec<String> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{} -> {}", alphabet.name(i), w.display(alphabet)))
            .collect()
    }
}

fn check_images(rank: usize, images: &[Word]) -> Result<()> {
    if images.len() != rank {
        return Err(Error::RankMismatch {
            left: rank,
            right: images.len(),
        });
    }
    for w in images {
        if w.rank != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: w.rank,
            });
        }
    }
    Ok(())
}

/// Random automorphism as a product of Nielsen moves, inverse included.
pub fn random_automorphism<R: Rng + ?Sized>(rng: &mut R, rank: usize, moves: usize) -> FreeMap {
    let mut phi = FreeMap::identity(rank);
    for _ in 0..moves {
        let step = random_nielsen_move(rng, rank);
        phi = phi.compose(&step).expect("equal ranks");
    }
    phi
}

fn random_nielsen_move<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> FreeMap {
    let gens: Vec<Word> = (0..rank)
        .map(|i| Word::generator(rank, i).expect("index < rank"))
        .collect();
    let mut images = gens.clone();
    let mut inverse = gens.clone();
    let i = rng.gen_range(0..rank);
    match rng.gen_range(0..3) {
        // x_i -> x_i^{-1}
        0 => {
            images[i] = gens[i].invert();
            inverse[i] = gens[i].invert();
        }
        // x_i -> x_i x_j^{±1}  or  x_j^{±1} x_i
        _ if rank > 1 => {
            let mut j = rng.gen_range(0..rank - 1);
            if j >= i {
                j += 1;
            }
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            let xj = gens[j].pow(s);
            if rng.gen_bool(0.5) {
                images[i] = gens[i].multiply(&xj).expect("rank");
                inverse[i] = gens[i].multiply(&xj.invert()).expect("rank");
            } else {
                images[i] = xj.multiply(&gens[i]).expect("rank");
                inverse[i] = xj.invert().multiply(&gens[i]).expect("rank");
            }
        }
        _ => {
            images[i] = gens[i].invert();
            inverse[i] = gens[i].invert();
        }
    }
    FreeMap {
        rank,
        images,
        inverse_images: Some(inverse),
    }
}

//! Integer matrices of the action induced by a free-group automorphism on
//! the lower-central-series quotients `γ_k / γ_{k+1}`.
//!
//! The quotient `γ_k / γ_{k+1}` of a free group is free abelian with a basis
//! given by the standard bracketings of the Lyndon words of length `k`.
//! Coordinates of an element of `γ_k` are read from the degree-`k` part of
//! its Magnus expansion, which is a Lie polynomial. Elimination against the
//! Lyndon basis is triangular: the graded-lex smallest monomial of the
//! bracketing of a Lyndon word `w` is `w` itself, with coefficient 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;
use crate::freegroup::{Alphabet, FreeMap, Word};
use crate::magnus::{expand, Monomial};

pub const DEFAULT_DEGREE_CAP: usize = 4;

/// A basic commutator: a Lyndon word with its standard bracketing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub lyndon: Vec<u16>,
    /// The bracketing as a nested group commutator, possibly inverted.
    pub word: Word,
    /// `-1` when `word` is the inverse of the standard bracketing.
    pub orientation: i8,
}

impl BasisElement {
    /// Nested bracket notation, e.g. `[x,[x,y]]`.
    pub fn bracket_notation(&self, alphabet: &Alphabet) -> String {
        let s = bracket_string(&self.lyndon, alphabet);
        if self.orientation < 0 {
            format!("{s}^-1")
        } else {
            s
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonBasis {
    pub rank: usize,
    pub degree: usize,
    pub elements: Vec<BasisElement>,
}

impl LyndonBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Same brackets with the selected elements replaced by their inverses.
    pub fn with_flipped(&self, flip: &[bool]) -> LyndonBasis {
        let elements = self
            .elements
            .iter()
            .zip(flip.iter().chain(std::iter::repeat(&false)))
            .map(|(e, &f)| {
                if f {
                    BasisElement {
                        lyndon: e.lyndon.clone(),
                        word: e.word.invert(),
                        orientation: -e.orientation,
                    }
                } else {
                    e.clone()
                }
            })
            .collect();
        LyndonBasis {
            rank: self.rank,
            degree: self.degree,
            elements,
        }
    }

    pub fn labels(&self, alphabet: &Alphabet) -> Vec<String> {
        self.elements
            .iter()
            .map(|e| e.bracket_notation(alphabet))
            .collect()
    }
}

/// Matrix of an automorphism on `γ_k/γ_{k+1}`; column `j` holds the
/// coordinates of the image of basis element `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientAction {
    pub degree: usize,
    #[serde(skip)]
    pub basis: LyndonBasis,
    #[serde(serialize_with = "crate::serde_int::matrix")]
    pub matrix: IntMatrix,
}

/// Lyndon words of length exactly `k` over `n` letters, in lexicographic
/// order (Duval's generation).
pub fn lyndon_words(n: usize, k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let n = n as u16;
    let mut w: Vec<u16> = vec![0];
    loop {
        if w.len() == k {
            out.push(w.clone());
        }
        // extend periodically to length k, then increment
        let m = w.len();
        while w.len() < k {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: &[u16]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = u·v` with `v` the longest proper suffix that is a Lyndon word.
fn standard_factorization(w: &[u16]) -> (&[u16], &[u16]) {
    let i = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("words of length ≥ 2 have a Lyndon suffix");
    (&w[..i], &w[i..])
}

fn bracket_word(w: &[u16], rank: usize) -> Result<Word> {
    if w.len() == 1 {
        return Word::generator(rank, w[0] as usize);
    }
    let (u, v) = standard_factorization(w);
    bracket_word(u, rank)?.commutator(&bracket_word(v, rank)?)
}

fn bracket_string(w: &[u16], alphabet: &Alphabet) -> String {
    if w.len() == 1 {
        return alphabet.name(w[0] as usize).to_string();
    }
    let (u, v) = standard_factorization(w);
    format!(
        "[{},{}]",
        bracket_string(u, alphabet),
        bracket_string(v, alphabet)
    )
}

/// `(1/k)·Σ_{d|k} μ(d)·n^{k/d}`.
pub fn witt_number(n: usize, k: usize) -> usize {
    fn mobius(mut d: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= d {
            if d.is_multiple_of(p) {
                d /= p;
                if d.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if d > 1 {
            result = -result;
        }
        result
    }
    let total: i64 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mobius(d) * (n as i64).pow((k / d) as u32))
        .sum();
    (total / k as i64) as usize
}

pub fn lyndon_basis(n: usize, k: usize) -> Result<LyndonBasis> {
    lyndon_basis_capped(n, k, DEFAULT_DEGREE_CAP)
}

pub fn lyndon_basis_capped(n: usize, k: usize, cap: usize) -> Result<LyndonBasis> {
    if k == 0 || k > cap {
        return Err(Error::DegreeOutOfRange { degree: k, cap });
    }
    let elements = lyndon_words(n, k)
        .into_iter()
        .map(|lyndon| {
            let word = bracket_word(&lyndon, n)?;
            Ok(BasisElement {
                lyndon,
                word,
                orientation: 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LyndonBasis {
        rank: n,
        degree: k,
        elements,
    })
}

/// Column `j` is the exponent-sum vector of `φ(x_j)`.
pub fn abelianization_matrix(phi: &FreeMap) -> IntMatrix {
    phi.abelianization_matrix()
}

type LiePart = BTreeMap<Monomial, BigInt>;

/// Degree-`k` part of the expansion of `w`, after checking that all
/// nonconstant lower-degree parts vanish.
fn leading_lie_part(w: &Word, k: usize) -> Result<LiePart> {
    let s = expand(w, k);
    if let Some(d) = s.lowest_nonconstant_degree() {
        if d < k {
            return Err(Error::Internal(format!(
                "image of a basic commutator of degree {k} has a nonzero degree-{d} part"
            )));
        }
    }
    Ok(s.homogeneous_part(k))
}

/// Precomputed Lie polynomials of a basis, for repeated projection.
struct Projector<'a> {
    basis: &'a LyndonBasis,
    index: BTreeMap<Monomial, usize>,
    polys: Vec<LiePart>,
}

impl<'a> Projector<'a> {
    fn new(basis: &'a LyndonBasis) -> Result<Self> {
        let mut index = BTreeMap::new();
        let mut polys = Vec::with_capacity(basis.len());
        for (j, e) in basis.elements.iter().enumerate() {
            let part = leading_lie_part(&e.word, basis.degree)?;
            let key = Monomial(e.lyndon.clone());
            // leading monomial must be the Lyndon word itself
            let (lead, c) = part
                .iter()
                .next()
                .ok_or_else(|| Error::Internal("basic commutator with zero Lie part".into()))?;
            if lead != &key || c != &BigInt::from(e.orientation) {
                return Err(Error::Internal(format!(
                    "Lyndon bracketing {:?} is not unitriangular",
                    e.lyndon
                )));
            }
            index.insert(key, j);
            polys.push(part);
        }
        Ok(Projector {
            basis,
            index,
            polys,
        })
    }

    fn coordinates(&self, mut part: LiePart) -> Result<Vec<BigInt>> {
        let mut coords = vec![BigInt::zero(); self.basis.len()];
        while let Some((m, c)) = part.iter().next().map(|(m, c)| (m.clone(), c.clone())) {
            let j = *self.index.get(&m).ok_or_else(|| {
                Error::Internal(format!(
                    "degree-{} part is not a Lie polynomial (stray monomial {:?})",
                    self.basis.degree, m.0
                ))
            })?;
            let orientation = BigInt::from(self.basis.elements[j].orientation);
            // c = coordinate · orientation, and orientation is ±1
            let coord = &c * &orientation;
            for (mm, cc) in &self.polys[j] {
                let e = part.entry(mm.clone()).or_insert_with(BigInt::zero);
                *e -= &coord * cc;
                if e.is_zero() {
                    part.remove(mm);
                }
            }
            coords[j] += coord;
        }
        Ok(coords)
    }
}

pub fn lcs_action(phi: &FreeMap, k: usize) -> Result<QuotientAction> {
    let basis = lyndon_basis(phi.rank(), k)?;
    lcs_action_in_basis(phi, basis)
}

/// Same as [`lcs_action`] but in a caller-supplied (possibly re-oriented)
/// basis.
pub fn lcs_action_in_basis(phi: &FreeMap, basis: LyndonBasis) -> Result<QuotientAction> {
    if basis.rank != phi.rank() {
        return Err(Error::RankMismatch {
            left: phi.rank(),
            right: basis.rank,
        });
    }
    phi.verify_automorphism()?;
    let k = basis.degree;
    let projector = Projector::new(&basis)?;
    let mut columns = Vec::with_capacity(basis.len());
    for e in &basis.elements {
        let image = phi.apply(&e.word)?;
        columns.push(projector.coordinates(leading_lie_part(&image, k)?)?);
    }
    let matrix = IntMatrix::from_columns(columns)?;
    Ok(QuotientAction {
        degree: k,
        basis,
        matrix,
    })
}

/// Coordinates of an element of `γ_k` in the Lyndon basis of
/// `γ_k/γ_{k+1}`.
pub fn quotient_coordinates(w: &Word, basis: &LyndonBasis) -> Result<Vec<BigInt>> {
    let projector = Projector::new(basis)?;
    projector.coordinates(leading_lie_part(w, basis.degree)?)
}

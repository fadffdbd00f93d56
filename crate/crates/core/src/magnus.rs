//! Truncated Magnus expansions and the bi-order they induce on a free group.
//!
//! A generator `x_i` maps to `1 + X_i` and its inverse to the truncated
//! geometric series `1 − X_i + X_i² − …` in noncommuting variables. An
//! element is positive when the first nonzero coefficient of its lowest
//! nonvanishing homogeneous part, in graded-lexicographic monomial order,
//! is positive. This order is invariant under multiplication on both sides.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, Word};

/// A word in the noncommuting variables `X_0 … X_{n−1}`.
///
/// Ordered by degree first, then lexicographically with `X_0 < X_1 < …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![i as u16])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn extended(&self, var: u16, times: usize) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + times);
        v.extend_from_slice(&self.0);
        v.extend(std::iter::repeat_n(var, times));
        Monomial(v)
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&i| alphabet.name(i as usize).to_ascii_uppercase())
            .collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial truncated above a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    truncation: usize,
    coeffs: BTreeMap<Monomial, BigInt>,
}

impl Series {
    pub fn one(truncation: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Monomial::one(), BigInt::one());
        Series { truncation, coeffs }
    }

    pub fn from_terms<I>(truncation: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut s = Series {
            truncation,
            coeffs: BTreeMap::new(),
        };
        for (m, c) in terms {
            if m.degree() <= truncation {
                s.add_term(m, c);
            }
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms of exactly degree `d`, in graded-lex order.
    pub fn homogeneous_part(&self, d: usize) -> BTreeMap<Monomial, BigInt> {
        self.coeffs
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Smallest positive degree carrying a nonzero coefficient.
    pub fn lowest_nonconstant_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Monomial::degree).find(|&d| d > 0)
    }

    pub fn truncate(&self, d: usize) -> Series {
        Series {
            truncation: d,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Right multiplication by the expansion of a single letter.
    fn mul_letter(&self, var: u16, inverse: bool) -> Series {
        let d = self.truncation;
        let mut out = self.clone();
        for (m, c) in &self.coeffs {
            let room = d - m.degree();
            if inverse {
                for i in 1..=room {
                    let term = if i % 2 == 0 { c.clone() } else { -c };
                    out.add_term(m.extended(var, i), term);
                }
            } else if room > 0 {
                out.add_term(m.extended(var, 1), c.clone());
            }
        }
        out
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for (m, c) in &self.coeffs {
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if m.degree() == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&m.format(alphabet));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Product of two series, dropping every monomial of degree above `d`.
pub fn series_mul(s: &Series, t: &Series, d: usize) -> Series {
    let mut out = Series {
        truncation: d,
        coeffs: BTreeMap::new(),
    };
    for (a, ca) in &s.coeffs {
        if a.degree() > d {
            continue;
        }
        for (b, cb) in &t.coeffs {
            if a.degree() + b.degree() > d {
                continue;
            }
            let mut m = a.0.clone();
            m.extend_from_slice(&b.0);
            out.add_term(Monomial(m), ca * cb);
        }
    }
    out
}

/// Magnus expansion of `w` truncated at degree `d`.
pub fn expand(w: &Word, d: usize) -> Series {
    let mut s = Series::one(d);
    for l in w.letters() {
        s = s.mul_letter(l.generator as u16, l.inverse);
    }
    s
}

/// The lowest nonvanishing homogeneous part of `expand(w) − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowestTerm {
    pub degree: usize,
    pub part: BTreeMap<Monomial, BigInt>,
}

impl LowestTerm {
    /// First monomial in graded-lex order, with its coefficient.
    pub fn leading(&self) -> (&Monomial, &BigInt) {
        self.part.iter().next().expect("part is nonzero")
    }

    pub fn sign(&self) -> i32 {
        if self.leading().1.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn negated(&self) -> LowestTerm {
        LowestTerm {
            degree: self.degree,
            part: self.part.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Finds the lowest term by doubling the truncation degree, starting at 2
/// and capped at the word length.
pub fn lowest_term(w: &Word) -> Result<LowestTerm> {
    if w.is_identity() {
        return Err(Error::NoLowestTerm);
    }
    let cap = w.len();
    let mut d = cap.min(2);
    loop {
        let s = expand(w, d);
        if let Some(degree) = s.lowest_nonconstant_degree() {
            return Ok(LowestTerm {
                degree,
                part: s.homogeneous_part(degree),
            });
        }
        if d >= cap {
            return Err(Error::Internal(format!(
                "nonempty word of length {cap} has vanishing expansion through degree {cap}"
            )));
        }
        d = (2 * d).min(cap);
    }
}

/// `+1`, `0` or `−1` according to whether `w` is positive, trivial or
/// negative.
pub fn sign(w: &Word) -> i32 {
    match lowest_term(w) {
        Ok(t) => t.sign(),
        Err(_) => 0,
    }
}

/// Total bi-invariant order: `u < v` iff `u⁻¹v` is positive.
pub fn compare(u: &Word, v: &Word) -> Result<Ordering> {
    let q = u.invert().multiply(v)?;
    Ok(match sign(&q) {
        1 => Ordering::Less,
        0 => Ordering::Equal,
        _ => Ordering::Greater,
    })
}

/// `|w|`: whichever of `w`, `w⁻¹` is not negative.
pub fn abs(w: &Word) -> Word {
    if sign(w) < 0 {
        w.invert()
    } else {
        w.clone()
    }
}

fn abs_lowest(w: &Word) -> Result<LowestTerm> {
    let t = lowest_term(w)?;
    Ok(if t.sign() < 0 { t.negated() } else { t })
}

/// `f ≪ g`: `|f|ⁿ < |g|` for every `n ≥ 1`, decided from lowest terms.
pub fn is_infinitesimal(f: &Word, g: &Word) -> Result<bool> {
    if f.is_identity() || g.is_identity() {
        return Err(Error::TrivialElement);
    }
    let a = abs_lowest(f)?;
    let b = abs_lowest(g)?;
    Ok(match a.degree.cmp(&b.degree) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.leading().0 > b.leading().0,
    })
}

/// Membership in the `k`-th term of the lower central series.
pub fn in_gamma(w: &Word, k: usize) -> bool {
    if k <= 1 || w.is_identity() {
        return true;
    }
    expand(w, k - 1).lowest_nonconstant_degree().is_none()
}

//! Exact real-root counting with Sturm chains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::sign_of;
use super::IntPoly;
use crate::error::{Error, Result};

/// Where to count roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootInterval {
    /// `(a, b]` with `a < b`.
    HalfOpen(BigRational, BigRational),
    /// `(0, ∞)`.
    Positive,
    /// `(−∞, 0)`.
    Negative,
    /// `(−∞, ∞)`.
    All,
}

impl RootInterval {
    pub fn half_open(a: i64, b: i64) -> Self {
        RootInterval::HalfOpen(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }
}

/// Signed remainder sequence of `p` and `p′`, each term divided by its
/// positive content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![positive_content_normalize(p)];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(SturmChain { chain });
        }
        chain.push(positive_content_normalize(&d));
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let prem = a.pseudo_rem(b)?;
            if prem.is_zero() {
                break;
            }
            // prem = lc(b)^(δ+1)·rem; recover the sign of the true remainder.
            let delta = a.deg() - b.deg();
            let flip = b.leading().is_negative() && (delta + 1) % 2 == 1;
            let rem = if flip { prem } else { prem.neg() };
            chain.push(positive_content_normalize(&rem));
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        let (num, den) = (x.numer(), x.denom());
        Self::variations(self.chain.iter().map(|p| p.sign_at(num, den)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_pos_infinity()))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_neg_infinity()))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

fn positive_content_normalize(p: &IntPoly) -> IntPoly {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    IntPoly::new(p.coeffs().iter().map(|v| v / &c).collect())
}

/// Number of distinct real roots of a squarefree `p` in `interval`.
pub fn sturm_count(p: &IntPoly, interval: &RootInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NonSquarefree);
    }
    let chain = SturmChain::new(p)?;
    let zero = BigRational::zero();
    Ok(match interval {
        RootInterval::HalfOpen(a, b) => {
            if a >= b {
                0
            } else {
                chain.count_half_open(a, b)
            }
        }
        RootInterval::Positive => chain
            .variations_at(&zero)
            .saturating_sub(chain.variations_at_pos_infinity()),
        RootInterval::Negative => {
            // counts (−∞, 0]; drop a root at 0
            let n = chain
                .variations_at_neg_infinity()
                .saturating_sub(chain.variations_at(&zero));
            if sign_of(&p.coeff(0)) == 0 {
                n - 1
            } else {
                n
            }
        }
        RootInterval::All => chain
            .variations_at_neg_infinity()
            .saturating_sub(chain.variations_at_pos_infinity()),
    })
}

/// Counts in `(0,∞)`, `(−∞,0)` and in total, for a squarefree `p`.
pub(crate) fn real_root_profile(p: &IntPoly) -> Result<(usize, usize, usize)> {
    let pos = sturm_count(p, &RootInterval::Positive)?;
    let neg = sturm_count(p, &RootInterval::Negative)?;
    let zero = usize::from(p.coeff(0) == BigInt::zero());
    Ok((pos, neg, pos + neg + zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn quadratic_counts() {
        assert_eq!(sturm_count(&p(&[1, -3, 1]), &RootInterval::Positive), Ok(2));
        assert_eq!(sturm_count(&p(&[1, -1, 1]), &RootInterval::All), Ok(0));
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &RootInterval::Negative), Ok(1));
    }

    #[test]
    fn six_two_alexander_polynomial_has_two_positive_roots() {
        let f = p(&[1, -3, 3, -3, 1]);
        assert_eq!(sturm_count(&f, &RootInterval::Positive), Ok(2));
        assert_eq!(sturm_count(&f, &RootInterval::All), Ok(2));
    }

    #[test]
    fn half_open_interval_includes_right_endpoint() {
        let f = p(&[0, -1, 0, 1]); // roots −1, 0, 1
        assert_eq!(sturm_count(&f, &RootInterval::half_open(0, 1)), Ok(1));
        assert_eq!(sturm_count(&f, &RootInterval::half_open(-1, 0)), Ok(1));
        assert_eq!(sturm_count(&f, &RootInterval::half_open(-2, 1)), Ok(3));
        assert_eq!(sturm_count(&f, &RootInterval::Negative), Ok(1));
        assert_eq!(sturm_count(&f, &RootInterval::Positive), Ok(1));
        assert_eq!(sturm_count(&f, &RootInterval::All), Ok(3));
        assert_eq!(sturm_count(&f, &RootInterval::half_open(1, 1)), Ok(0));
    }

    #[test]
    fn errors() {
        assert_eq!(
            sturm_count(&p(&[1, -2, 1]), &RootInterval::All),
            Err(Error::NonSquarefree)
        );
        assert_eq!(
            sturm_count(&IntPoly::zero(), &RootInterval::All),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(sturm_count(&p(&[5]), &RootInterval::All), Ok(0));
    }

    #[test]
    fn negative_leading_coefficient() {
        let f = p(&[2, 0, -1]); // roots ±√2
        assert_eq!(sturm_count(&f, &RootInterval::Positive), Ok(1));
        assert_eq!(sturm_count(&f, &RootInterval::Negative), Ok(1));
        assert_eq!(sturm_count(&f, &RootInterval::half_open(1, 2)), Ok(1));
    }
}

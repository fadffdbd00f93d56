//! Exact integer linear algebra and univariate polynomial algebra.
//!
//! Everything here is exact: characteristic polynomials by
//! Faddeev–LeVerrier, factorization over ℚ by Zassenhaus, and real-root
//! counts by Sturm chains. No floating point is used.

mod factor;
mod matrix;
mod modp;
mod poly;
mod sturm;

use num_bigint::BigInt;
use serde::Serialize;

pub use factor::{rational_roots, squarefree_decomposition, squarefree_part};
pub use matrix::IntMatrix;
pub use poly::{divmod_rational, IntPoly, RatPoly};
pub use sturm::{sturm_count, RootInterval, SturmChain};

use crate::error::{Error, Result};
use crate::serde_int;

/// One irreducible factor of a [`FactorReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    #[serde(rename = "coeffs", serialize_with = "serde_int::poly")]
    pub poly: IntPoly,
    pub multiplicity: usize,
    /// Roots in `(0, ∞)`.
    #[serde(rename = "pos_real_roots")]
    pub positive_roots: usize,
    /// Roots in `(−∞, 0)`.
    #[serde(skip)]
    pub negative_roots: usize,
    pub real_roots: usize,
}

impl Factor {
    /// A factor with no positive real root spans a block whose eigenvalues
    /// are all negative or non-real.
    pub fn is_lambda_block(&self) -> bool {
        self.positive_roots == 0
    }
}

/// Complete factorization over ℚ with per-factor real-root counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    /// `p = unit · Π factorᵐ`.
    #[serde(skip)]
    pub unit: BigInt,
    pub factors: Vec<Factor>,
}

impl FactorReport {
    pub fn reconstruct(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.unit.clone()), |acc, f| {
                acc.mul(&f.poly.pow(f.multiplicity as u32))
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].multiplicity == 1
    }

    pub fn has_lambda_block(&self) -> bool {
        self.factors.iter().any(Factor::is_lambda_block)
    }

    pub fn all_factors_have_positive_root(&self) -> bool {
        self.factors.iter().all(|f| f.positive_roots > 0)
    }
}

/// Irreducible factorization over ℚ, canonically ordered by degree and then
/// by ascending coefficient list.
pub fn factor_over_q(p: &IntPoly) -> Result<FactorReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (part, multiplicity) in squarefree_decomposition(p)? {
        for poly in factor::factor_squarefree(&part) {
            let (positive_roots, negative_roots, real_roots) = sturm::real_root_profile(&poly)?;
            factors.push(Factor {
                poly,
                multiplicity,
                positive_roots,
                negative_roots,
                real_roots,
            });
        }
    }
    factors.sort_by(|a, b| {
        a.poly
            .deg()
            .cmp(&b.poly.deg())
            .then_with(|| a.poly.cmp_coeffs(&b.poly))
            .then_with(|| a.multiplicity.cmp(&b.multiplicity))
    });
    Ok(FactorReport {
        unit: factor::unit_part(p),
        factors,
    })
}

pub fn has_positive_real_root(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = squarefree_part(p)?;
    Ok(sturm_count(&sqf, &RootInterval::Positive)? >= 1)
}

/// True iff every complex root, counted with multiplicity, is real and
/// positive.
pub fn all_roots_positive_real(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut counted = 0;
    for (part, m) in squarefree_decomposition(p)? {
        counted += m * sturm_count(&part, &RootInterval::Positive)?;
    }
    Ok(counted == p.deg())
}

/// Independent checks used by the test suites. Kept outside the
/// implementation paths they cross-check.
#[doc(hidden)]
pub mod oracle {
    use super::*;
    use num_traits::{One, Zero};

    /// `det(λI − A)` by cofactor expansion along the first row.
    pub fn char_poly_cofactor(a: &IntMatrix) -> IntPoly {
        let n = a.dim();
        let entries: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -a.get(i, j).clone();
                        if i == j {
                            IntPoly::new(vec![c, BigInt::one()])
                        } else {
                            IntPoly::constant(c)
                        }
                    })
                    .collect()
            })
            .collect();
        let cols: Vec<usize> = (0..n).collect();
        det_poly(&entries, 0, &cols)
    }

    fn det_poly(m: &[Vec<IntPoly>], row: usize, cols: &[usize]) -> IntPoly {
        if cols.is_empty() {
            return IntPoly::one();
        }
        let mut acc = IntPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            if m[row][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = m[row][c].mul(&det_poly(m, row + 1, &rest));
            acc = if k % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    /// Counts sign changes of `p` on a grid of step `1/den` over `[lo, hi]`.
    /// Exact for polynomials whose roots are integers not on the grid
    /// boundary and at least `1/den` apart.
    pub fn grid_sign_changes(p: &IntPoly, lo: i64, hi: i64, den: i64) -> usize {
        let d = BigInt::from(den);
        let mut changes = 0;
        let mut last = 0;
        for n in lo * den..=hi * den {
            let s = p.sign_at(&BigInt::from(n), &d);
            if s == 0 {
                // exact root on the grid: count it and reset
                changes += 1;
                last = 0;
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Looks for a monic-up-to-sign quadratic factor `aλ² + bλ + c` with
    /// `a | lc(p)`, `c | p(0)` and `|b|` bounded by `bound`.
    pub fn has_quadratic_factor(p: &IntPoly, bound: i64) -> bool {
        let lc = p.leading();
        let c0 = p.coeff(0);
        let small = |v: &BigInt| -> Vec<i64> {
            let v = num_traits::ToPrimitive::to_i64(v).unwrap_or(0).abs();
            (1..=v).filter(|d| v % d == 0).collect()
        };
        for a in small(&lc) {
            for c in small(&c0) {
                for c in [c, -c] {
                    for b in -bound..=bound {
                        let q = IntPoly::from_i64(&[c, b, a]);
                        if let Ok(Some(_)) = p.try_div(&q) {
                            return true;
                        }
                    }
                }
            }
        }
        if c0.is_zero() {
            return p.deg() >= 2;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn six_two_sextic_factors() {
        let sextic = p(&[1, -3, 8, -12, 8, -3, 1]);
        let r = factor_over_q(&sextic).unwrap();
        assert_eq!(r.factors.len(), 2);
        assert_eq!(r.factors[0].poly, p(&[-1, 1]));
        assert_eq!(r.factors[0].multiplicity, 2);
        assert_eq!(r.factors[1].poly, p(&[1, -1, 5, -1, 1]));
        assert_eq!(r.factors[1].real_roots, 0);
        assert_eq!(r.reconstruct(), sextic);
        assert!(r.has_lambda_block());
    }

    #[test]
    fn alexander_quartic_of_six_two_is_irreducible() {
        let f = p(&[1, -3, 3, -3, 1]);
        let r = factor_over_q(&f).unwrap();
        assert!(r.is_irreducible());
        assert_eq!(r.factors[0].positive_roots, 2);
        assert!(!oracle::has_quadratic_factor(&f, 20));
    }

    #[test]
    fn difference_of_squares() {
        let r = factor_over_q(&p(&[-1, 0, 1])).unwrap();
        let polys: Vec<_> = r.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![p(&[-1, 1]), p(&[1, 1])]);
    }

    #[test]
    fn content_and_sign_are_kept_in_unit() {
        let f = p(&[6, -4, -2]); // −2(λ² + 2λ − 3) = −2(λ−1)(λ+3)
        let r = factor_over_q(&f).unwrap();
        assert_eq!(r.unit, BigInt::from(-2));
        assert_eq!(r.reconstruct(), f);
    }

    #[test]
    fn positive_root_predicates() {
        assert!(!has_positive_real_root(&p(&[1, -1, 1])).unwrap());
        assert!(has_positive_real_root(&p(&[1, -3, 1])).unwrap());
        assert!(!has_positive_real_root(&p(&[1, 1])).unwrap());
        assert!(all_roots_positive_real(&p(&[1, -3, 1])).unwrap());
        assert!(!all_roots_positive_real(&p(&[1, -1, 1])).unwrap());
        assert!(all_roots_positive_real(&p(&[1, -2, 1])).unwrap());
        assert_eq!(
            has_positive_real_root(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn cofactor_oracle_agrees_on_fixed_matrix() {
        let m =
            IntMatrix::from_i64_rows(&[[2, 1, 0, 0], [0, 0, 0, 1], [1, 1, 0, -1], [0, 0, 1, 1]])
                .unwrap();
        assert_eq!(m.char_poly(), oracle::char_poly_cofactor(&m));
        assert_eq!(m.char_poly(), p(&[1, -3, 3, -3, 1]));
    }
}

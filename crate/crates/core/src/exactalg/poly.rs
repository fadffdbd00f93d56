use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with integer coefficients in ascending order.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// `λ − r`.
    pub fn linear_root(r: i64) -> Self {
        IntPoly::from_i64(&[-r, 1])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|v| v / &c).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of `p(num/den)` for `den > 0`, evaluated without fractions.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i32 {
        debug_assert!(den.is_positive());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Σ a_i num^i den^(d-i), built from the top coefficient down.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign_of(&acc)
    }

    /// Sign as `λ → +∞`.
    pub fn sign_at_pos_infinity(&self) -> i32 {
        sign_of(&self.leading())
    }

    /// Sign as `λ → −∞`.
    pub fn sign_at_neg_infinity(&self) -> i32 {
        let s = sign_of(&self.leading());
        if self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Pseudo-remainder: `lc(q)^(deg p − deg q + 1)·p mod q`.
    pub fn pseudo_rem(&self, q: &IntPoly) -> Result<IntPoly> {
        let qd = q.degree().ok_or(Error::DivisionByZero)?;
        let lc = q.leading();
        let mut r = self.clone();
        let Some(pd) = r.degree() else { return Ok(r) };
        if pd < qd {
            return Ok(r);
        }
        let mut steps = pd - qd + 1;
        while let Some(rd) = r.degree() {
            if rd < qd {
                break;
            }
            let lead = r.leading();
            let shift = rd - qd;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in q.coeffs.iter().enumerate() {
                next[i + shift] -= &lead * c;
            }
            r = IntPoly::new(next);
            steps -= 1;
        }
        let factor = num_traits::pow(lc, steps);
        Ok(r.scale(&factor))
    }

    /// Quotient when `q` divides `self` exactly over the integers.
    pub fn div_exact(&self, q: &IntPoly) -> Result<IntPoly> {
        let (quot, rem) = divmod_rational(self, q)?;
        if !rem.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        quot.to_int_poly()
            .ok_or_else(|| Error::Internal("quotient has non-integer coefficients".into()))
    }

    /// `Some(quotient)` iff `q` divides `self` in `ℤ[λ]`.
    pub fn try_div(&self, q: &IntPoly) -> Result<Option<IntPoly>> {
        let (quot, rem) = divmod_rational(self, q)?;
        if !rem.is_zero() {
            return Ok(None);
        }
        Ok(quot.to_int_poly())
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Lexicographic comparison of ascending coefficient lists.
    pub fn cmp_coeffs(&self, other: &IntPoly) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("λ"))
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Polynomial with rational coefficients, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }
}

/// Division with remainder over ℚ: `p = q·quot + rem`, `deg rem < deg q`.
pub fn divmod_rational(p: &IntPoly, q: &IntPoly) -> Result<(RatPoly, RatPoly)> {
    let qd = q.degree().ok_or(Error::DivisionByZero)?;
    let qr = RatPoly::from_int(q);
    let lc = qr.coeffs[qd].clone();
    let mut rem = RatPoly::from_int(p).coeffs;
    let Some(pd) = p.degree() else {
        return Ok((RatPoly::default(), RatPoly::default()));
    };
    if pd < qd {
        return Ok((RatPoly::default(), RatPoly::new(rem)));
    }
    let mut quot = vec![BigRational::zero(); pd - qd + 1];
    for k in (0..=pd - qd).rev() {
        let c = &rem[k + qd] / &lc;
        if c.is_zero() {
            continue;
        }
        for (i, qc) in qr.coeffs.iter().enumerate() {
            rem[k + i] -= &c * qc;
        }
        quot[k] = c;
    }
    rem.truncate(qd);
    Ok((RatPoly::new(quot), RatPoly::new(rem)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_int(&p(c))
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = divmod_rational(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (rp(&[1, 1]), rp(&[])));
        let (q, r) = divmod_rational(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!((q, r), (rp(&[0, 1]), rp(&[1])));
        assert_eq!(
            divmod_rational(&p(&[1]), &IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn sextic_divides_by_linear_factor() {
        let sextic = p(&[1, -3, 8, -12, 8, -3, 1]);
        let (q, r) = divmod_rational(&sextic, &p(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, rp(&[-1, 2, -6, 6, -2, 1]));
    }

    #[test]
    fn rational_division_keeps_fractions() {
        let (q, r) = divmod_rational(&p(&[1, 0, 1]), &p(&[1, 2])).unwrap();
        // λ² + 1 = (2λ + 1)(λ/2 − 1/4) + 5/4
        let half = BigRational::new(1.into(), 2.into());
        let quarter = BigRational::new(1.into(), 4.into());
        assert_eq!(q.coeffs(), &[-quarter, half]);
        assert_eq!(r.coeffs(), &[BigRational::new(5.into(), 4.into())]);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[3, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert!(p(&[1, -3, 1]).is_squarefree());
        assert!(!p(&[1, -2, 1]).is_squarefree());
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[1, 2]));
    }

    #[test]
    fn sign_at_rationals_and_infinity() {
        let f = p(&[1, -3, 1]); // roots (3 ± √5)/2
        assert_eq!(f.sign_at(&BigInt::from(0), &BigInt::from(1)), 1);
        assert_eq!(f.sign_at(&BigInt::from(1), &BigInt::from(1)), -1);
        assert_eq!(f.sign_at(&BigInt::from(1), &BigInt::from(4)), 1);
        assert_eq!(f.sign_at(&BigInt::from(1), &BigInt::from(2)), -1);
        assert_eq!(p(&[0, 0, 0, -2]).sign_at_neg_infinity(), 1);
        assert_eq!(p(&[0, 0, 0, -2]).sign_at_pos_infinity(), -1);
    }

    #[test]
    fn display_format() {
        assert_eq!(
            p(&[1, -3, 3, -3, 1]).to_string(),
            "λ^4 - 3λ^3 + 3λ^2 - 3λ + 1"
        );
        assert_eq!(p(&[-1, 1]).display_in("t"), "t - 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-λ");
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, 1, 4, 1, 5]);
        let b = p(&[2, 7, -3]);
        let r = a.pseudo_rem(&b).unwrap();
        let (_, true_rem) = divmod_rational(&a, &b).unwrap();
        // prem = lc(b)^3 · rem
        let lc3 = BigRational::from_integer(BigInt::from(-27));
        let scaled: Vec<_> = true_rem.coeffs().iter().map(|c| c * &lc3).collect();
        assert_eq!(RatPoly::from_int(&r), RatPoly::new(scaled));
    }
}

//! Squarefree decomposition, rational roots, and complete factorization
//! over ℚ (Zassenhaus: modular factorization, Hensel lifting, subset
//! recombination).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Field, FpPoly};
use super::IntPoly;
use crate::error::{Error, Result};

/// Yun's algorithm on the primitive part. Returns the nonconstant
/// squarefree factors with their multiplicities, in increasing multiplicity.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.primitive_part();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let b = f.gcd(&df);
    let mut c = f.div_exact(&b)?;
    let mut d = df.div_exact(&b)?.sub(&c.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a)?;
        d = d.div_exact(&a)?.sub(&c.derivative());
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors (primitive, positive lead).
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly> {
    Ok(squarefree_decomposition(p)?
        .into_iter()
        .fold(IntPoly::one(), |acc, (f, _)| acc.mul(&f)))
}

/// All rational roots with multiplicity, by the rational root test.
/// Ordered by absolute value, the positive root first on ties.
pub fn rational_roots(p: &IntPoly) -> Result<Vec<BigRational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut f = p.primitive_part();
    let mut roots = Vec::new();
    while !f.is_constant() && f.coeff(0).is_zero() {
        roots.push(BigRational::zero());
        f = IntPoly::new(f.coeffs()[1..].to_vec());
    }
    if f.is_constant() {
        return Ok(roots);
    }
    let nums = divisors(&f.coeff(0).abs());
    let dens = divisors(&f.leading().abs());
    let mut candidates: Vec<BigRational> = Vec::new();
    for n in &nums {
        for d in &dens {
            let r = BigRational::new(n.clone(), d.clone());
            for c in [r.clone(), -r] {
                if !candidates.contains(&c) {
                    candidates.push(c);
                }
            }
        }
    }
    candidates.sort_by(|a, b| {
        a.abs()
            .cmp(&b.abs())
            .then_with(|| b.is_positive().cmp(&a.is_positive()))
    });
    for r in candidates {
        let linear = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        while let Some(q) = f.try_div(&linear)? {
            roots.push(r.clone());
            f = q;
            if f.is_constant() {
                break;
            }
        }
        if f.is_constant() {
            break;
        }
    }
    Ok(roots)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    // prime factorization by trial division
    let mut m = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut q = BigInt::from(2);
    while &q * &q <= m {
        let mut e = 0;
        while (&m % &q).is_zero() {
            m /= &q;
            e += 1;
        }
        if e > 0 {
            primes.push((q.clone(), e));
        }
        q += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient.
pub(crate) fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive_part();
    let n = f.deg();
    if n <= 1 {
        return if n == 1 { vec![f] } else { Vec::new() };
    }
    if f.coeff(0).is_zero() {
        // λ is a factor; the remaining part has nonzero constant term
        let rest = IntPoly::new(f.coeffs()[1..].to_vec());
        let mut out = vec![IntPoly::monomial(1)];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let (field, modular) = choose_prime(&f);
    if modular.len() == 1 {
        return vec![f];
    }
    let bound = coefficient_bound(&f);
    let p = BigInt::from(field.p);
    let mut k = 1u32;
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let lifted = hensel_lift_all(&f, &modular, field, k);
    recombine(f, lifted, &modulus)
}

/// `2·|lc|·2^n·‖f‖₁`, above twice the largest coefficient of `lc·g` for any
/// factor `g` of `f`.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm: BigInt = f.coeffs().iter().map(|c| c.abs()).sum();
    let two_n = BigInt::one() << f.deg();
    BigInt::from(2) * f.leading().abs() * two_n * norm
}

fn to_fp(f: &IntPoly, field: Field) -> FpPoly {
    let p = BigInt::from(field.p);
    field.trim(
        f.coeffs()
            .iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("reduced below p"))
            .collect(),
    )
}

fn from_fp(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

const PRIME_TRIALS: usize = 5;

/// Tries a few good primes and keeps the one with the fewest modular
/// factors. Returns monic factors mod p.
fn choose_prime(f: &IntPoly) -> (Field, Vec<FpPoly>) {
    let mut best: Option<(Field, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for p in (3u64..).step_by(2).filter(|&q| is_prime(q)) {
        let field = Field::new(p);
        let fp = to_fp(f, field);
        if fp.len() != f.coeffs().len() {
            continue; // p divides the leading coefficient
        }
        if field.gcd(&fp, &field.derivative(&fp)).len() != 1 {
            continue;
        }
        let monic = field.monic(&fp);
        let mut factors = Vec::new();
        for (g, d) in field.distinct_degree(&monic) {
            factors.extend(field.equal_degree(&g, d, &mut rng));
        }
        factors.sort();
        let better = best.as_ref().is_none_or(|(_, b)| factors.len() < b.len());
        if better {
            best = Some((field, factors));
        }
        tried += 1;
        if tried >= PRIME_TRIALS || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best.expect("infinitely many primes")
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn mod_poly(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mul_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    IntPoly::new(a.to_vec())
        .mul(&IntPoly::new(b.to_vec()))
        .coeffs()
        .to_vec()
}

/// Lifts `f ≡ lc·u₁⋯u_r (mod p)` to the same shape mod `p^k`. The returned
/// factors are monic mod `p^k`.
fn hensel_lift_all(f: &IntPoly, modular: &[FpPoly], field: Field, k: u32) -> Vec<Vec<BigInt>> {
    let p = BigInt::from(field.p);
    let pk = num_traits::pow(p.clone(), k as usize);
    let lc = f.leading();
    let lc_p = lc.mod_floor(&p).to_u64().expect("reduced");
    let mut target = mod_poly(f.coeffs(), &pk);
    let mut out = Vec::with_capacity(modular.len());
    for i in 0..modular.len() - 1 {
        let g0 = modular[i].clone();
        let h0 = modular[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, u| field.poly_mul(&acc, u));
        let (g, h) = hensel_lift_pair(&target, &g0, &h0, field, k);
        out.push(g);
        target = h;
    }
    let lc_inv = lc.modinv(&pk).expect("p does not divide lc");
    out.push(mod_poly(
        &target.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(),
        &pk,
    ));
    out
}

/// Linear Hensel lifting of `f ≡ g·h (mod p)` with `g` monic and
/// `gcd(g, h) = 1` mod p.
fn hensel_lift_pair(
    f: &[BigInt],
    g0: &[u64],
    h0: &[u64],
    field: Field,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(field.p);
    let pk = num_traits::pow(p.clone(), k as usize);
    let (one, s, t) = field.ext_gcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    // h carries the leading coefficient of f exactly
    if let (Some(hl), Some(fl)) = (h.last_mut(), f.last()) {
        *hl = fl.mod_floor(&pk);
    }
    let mut pj = p.clone();
    for _ in 1..k {
        let diff: Vec<BigInt> = {
            let gh = mul_vec(&g, &h);
            let n = f.len().max(gh.len());
            (0..n)
                .map(|i| {
                    f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default()
                })
                .collect()
        };
        let diff = mod_poly(&diff, &pk);
        let e: FpPoly = field.trim(
            diff.iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero());
                    (c / &pj).mod_floor(&p).to_u64().expect("reduced")
                })
                .collect(),
        );
        if !e.is_empty() {
            let te = field.poly_mul(&t, &e);
            let (q, tau) = field.divrem(&te, g0);
            let sigma = field.poly_add(&field.poly_mul(&s, &e), &field.poly_mul(&q, h0));
            g = add_scaled(&g, &tau, &pj, &pk);
            h = add_scaled(&h, &sigma, &pj, &pk);
        }
        pj *= &p;
    }
    (g, h)
}

fn add_scaled(a: &[BigInt], b: &[u64], scale: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let v: Vec<BigInt> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() + scale * BigInt::from(*b.get(i).unwrap_or(&0))
        })
        .collect();
    mod_poly(&v, m)
}

fn symmetric(v: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn recombine(mut f: IntPoly, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for subset in combinations(lifted.len(), size) {
            let lc = f.leading();
            let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| {
                mod_poly(&mul_vec(&acc, &lifted[i]), modulus)
            });
            let candidate = symmetric(&prod, modulus).primitive_part();
            if let Ok(Some(q)) = f.try_div(&candidate) {
                found.push(candidate);
                f = q.primitive_part();
                let mut idx = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
                continue 'outer;
            }
        }
        size += 1;
    }
    if !f.is_constant() {
        found.push(f.primitive_part());
    }
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Sign-and-content unit `u` with `p = u · primitive_part(p)`.
pub(crate) fn unit_part(p: &IntPoly) -> BigInt {
    let c = p.content();
    if p.leading().sign() == Sign::Minus {
        -c
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn sorted(mut v: Vec<IntPoly>) -> Vec<IntPoly> {
        v.sort_by(|a, b| a.deg().cmp(&b.deg()).then(a.cmp_coeffs(b)));
        v
    }

    #[test]
    fn yun_examples() {
        let quartic = p(&[1, -1, 5, -1, 1]);
        let input = p(&[-1, 1]).pow(2).mul(&quartic);
        assert_eq!(
            squarefree_decomposition(&input).unwrap(),
            vec![(quartic, 1), (p(&[-1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[1, -3, 1])).unwrap(),
            vec![(p(&[1, -3, 1]), 1)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[0, 0, 0, 1])).unwrap(),
            vec![(p(&[0, 1]), 3)]
        );
        assert_eq!(
            squarefree_decomposition(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_root_examples() {
        assert!(rational_roots(&p(&[1, -3, 3, -3, 1])).unwrap().is_empty());
        let one = BigRational::one();
        assert_eq!(
            rational_roots(&p(&[-1, 0, 1])).unwrap(),
            vec![one.clone(), -one]
        );
        assert_eq!(
            rational_roots(&p(&[-1, 2])).unwrap(),
            vec![BigRational::new(1.into(), 2.into())]
        );
        // (λ−1)²·λ
        assert_eq!(
            rational_roots(&p(&[0, 1, -2, 1])).unwrap(),
            vec![BigRational::zero(), BigRational::one(), BigRational::one()]
        );
    }

    #[test]
    fn factors_products_of_known_irreducibles() {
        let parts = [
            p(&[1, 0, 1]),
            p(&[-2, 0, 1]),
            p(&[1, 1, 1]),
            p(&[3, -1]).neg(),
        ];
        let f = parts.iter().fold(IntPoly::one(), |a, b| a.mul(b));
        let got = sorted(factor_squarefree(&f));
        let want = sorted(parts.iter().map(|q| q.primitive_part()).collect());
        assert_eq!(got, want);
    }

    #[test]
    fn swinnerton_dyer_like_quartic_stays_irreducible() {
        // x⁴ − 10x² + 1 splits modulo every prime but is irreducible over ℚ.
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree(&f), vec![f]);
    }

    #[test]
    fn non_monic_factors() {
        let f = p(&[1, 2]).mul(&p(&[-3, 0, 5])).mul(&p(&[7, 1, 0, 3]));
        let got = sorted(factor_squarefree(&f));
        assert_eq!(
            got,
            sorted(vec![p(&[1, 2]), p(&[-3, 0, 5]), p(&[7, 1, 0, 3])])
        );
    }

    #[test]
    fn divisor_enumeration() {
        let d: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}

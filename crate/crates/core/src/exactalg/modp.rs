//! Dense polynomials over a small prime field, used by the Zassenhaus
//! factorizer. Coefficients are ascending and reduced into `0..p`.

use num_bigint::BigUint;
use rand::Rng;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Field {
    pub p: u64,
}

pub(crate) type FpPoly = Vec<u64>;

impl Field {
    pub fn new(p: u64) -> Self {
        Field { p }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn trim(&self, mut a: FpPoly) -> FpPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn scale(&self, a: &[u64], k: u64) -> FpPoly {
        self.trim(a.iter().map(|&c| self.mul(c, k)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            Some(&lc) => self.scale(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut r = a.to_vec();
        let db = b.len() - 1;
        if r.len() < b.len() {
            return (Vec::new(), self.trim(r));
        }
        let inv = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = self.sub(r[k + i], self.mul(c, bc));
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let mut a = self.trim(a.to_vec());
        let mut b = self.trim(b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().expect("gcd of nonzero inputs");
        let inv = self.inv(lc);
        (
            self.scale(&r0, inv),
            self.scale(&s0, inv),
            self.scale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> FpPoly {
        let mut result = vec![1u64];
        let mut b = self.rem(base, m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = self.rem(&self.poly_mul(&result, &b), m);
            }
            b = self.rem(&self.poly_mul(&b, &b), m);
        }
        result
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all degree-d irreducible factors, d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while f.len() > 1 && 2 * (d + 1) < f.len() {
            d += 1;
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.poly_sub(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((self.monic(&f), deg));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![self.monic(f)];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: FpPoly = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_sub(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let q = self.divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&q, d, rng));
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ext_gcd_bezout() {
        let f = Field::new(7);
        let a = vec![1, 0, 1]; // x² + 1
        let b = vec![3, 1]; // x + 3
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = f.poly_add(&f.poly_mul(&s, &a), &f.poly_mul(&t, &b));
        assert_eq!(lhs, vec![1]);
    }

    #[test]
    fn splits_product_of_linears() {
        let f = Field::new(11);
        // (x-1)(x-2)(x-3)(x²+1); x²+1 is irreducible mod 11
        let mut poly = vec![1u64];
        for r in [1u64, 2, 3] {
            poly = f.poly_mul(&poly, &[11 - r, 1]);
        }
        poly = f.poly_mul(&poly, &[1, 0, 1]);
        let dd = f.distinct_degree(&poly);
        assert_eq!(dd.iter().map(|(_, d)| *d).collect::<Vec<_>>(), vec![1, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut lin = f.equal_degree(&dd[0].0, 1, &mut rng);
        lin.sort();
        assert_eq!(lin, vec![vec![8, 1], vec![9, 1], vec![10, 1]]);
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// A square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Dimension("matrix must be at least 1×1".into()));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        Ok(IntMatrix { dim, rows })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = columns.len();
        if columns.iter().any(|c| c.len() != dim) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        let rows = (0..dim)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        IntMatrix::from_rows(rows)
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        IntMatrix { dim, rows }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = IntMatrix::identity(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.rows[i][i] = BigInt::from(e);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.dim).map(|j| self.column(j)).collect();
        IntMatrix {
            dim: self.dim,
            rows,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "cannot multiply {0}×{0} by {1}×{1}",
                self.dim, other.dim
            )));
        }
        let n = self.dim;
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (k, a) in self.rows[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, out) in row.iter_mut().enumerate() {
                    *out += a * &other.rows[k][j];
                }
            }
        }
        Ok(IntMatrix { dim: n, rows })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| &self.rows[i][i]).sum()
    }

    /// Fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// `det(λI − A)` by Faddeev–LeVerrier; every division is exact.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix {
            dim: n,
            rows: vec![vec![BigInt::zero(); n]; n],
        };
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            let mut next = self.mul(&m).expect("same dimension");
            for i in 0..n {
                next.rows[i][i] += &coeffs[n - k + 1];
            }
            let am = self.mul(&next).expect("same dimension");
            let t = am.trace();
            debug_assert!((&t % BigInt::from(k)).is_zero());
            coeffs[n - k] = -(t / BigInt::from(k));
            m = next;
        }
        IntPoly::new(coeffs)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, r) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for (j, c) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

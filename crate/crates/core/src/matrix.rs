//! Small dense square matrices over the integers and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Square integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        IntMatrix { dim, data }
    }

    /// Builds a matrix from rows. Panics if the rows are not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            data.extend_from_slice(row);
        }
        IntMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.dim).map(|r| self.get(r, col)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.dim;
        debug_assert_eq!(n, other.dim);
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.get(k, c);
                }
            }
        }
        IntMatrix { dim: n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn apply_rational(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.dim)
            .map(|r| {
                (0..self.dim).fold(BigRational::zero(), |acc, c| {
                    acc + &v[c] * BigRational::from_integer(BigInt::from(self.get(r, c)))
                })
            })
            .collect()
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn principal(&self, indices: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = indices
            .iter()
            .map(|&r| indices.iter().map(|&c| self.get(r, c)).collect())
            .collect();
        IntMatrix::from_rows(&rows)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    /// Exact inverse over the rationals, or `None` when singular.
    pub fn inverse_rational(&self) -> Option<RatMatrix> {
        let n = self.dim;
        let mut a: Vec<Vec<BigRational>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let x = &a[col][c] * &f;
                    a[r][c] -= x;
                    let y = &inv[col][c] * &f;
                    inv[r][c] -= y;
                }
            }
        }
        Some(RatMatrix { rows: inv })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.rows[row][col]
    }

    pub fn column(&self, col: usize) -> Vec<BigRational> {
        self.rows.iter().map(|r| r[col].clone()).collect()
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn all_positive(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_hand_values() {
        let a3 = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(a3.determinant(), BigInt::from(4));
        let g2 = IntMatrix::from_rows(&[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.determinant(), BigInt::from(1));
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant(), BigInt::from(-1));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let b3 = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let inv = b3.inverse_rational().unwrap();
        for c in 0..3 {
            let col: Vec<BigRational> = (0..3)
                .map(|r| BigRational::from_integer(b3.get(r, c).into()))
                .collect();
            let e = inv.apply(&col);
            for (r, x) in e.iter().enumerate() {
                let want = if r == c { BigRational::one() } else { BigRational::zero() };
                assert_eq!(*x, want);
            }
        }
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).inverse_rational().is_none());
    }
}

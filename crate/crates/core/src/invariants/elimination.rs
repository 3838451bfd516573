//! Fraction-free (Bareiss) determinant over the integers and rank over ℚ.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Determinant of a square integer matrix by Bareiss elimination with row
/// pivoting. Every intermediate division is exact.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank over ℚ by Gaussian elimination.
pub(crate) fn rank(a: &Matrix) -> usize {
    let mut rows = a.to_rows();
    let (nrows, ncols) = (a.rows(), a.cols());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut().filter(|row| !row[col].is_zero()) {
            let factor: Scalar = &row[col] / &pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}

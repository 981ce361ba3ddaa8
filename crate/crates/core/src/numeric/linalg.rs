//! Dense solves for the small systems that show up in least-squares fitting.

use crate::error::{Error, Result};
use crate::real::Real;

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
///
/// `a` is row-major `n x n` and is consumed as scratch space.
pub fn solve<T: Real>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Result<Vec<T>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| {
                a[i][col]
                    .abs()
                    .partial_cmp(&a[j][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("non-empty column");
        if a[pivot_row][col].abs() <= T::zero() {
            return Err(Error::RankDeficient(format!("zero pivot in column {col}")));
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let pivot = a[col][col];
        for row in (col + 1)..n {
            let factor = a[row][col] / pivot;
            if factor == T::zero() {
                continue;
            }
            for k in col..n {
                let upper = a[col][k];
                a[row][k] = a[row][k] - factor * upper;
            }
            let rhs = b[col];
            b[row] = b[row] - factor * rhs;
        }
    }
    let mut x = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in (row + 1)..n {
            acc = acc - a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::RankDeficient("non-finite solution".into()));
    }
    Ok(x)
}

/// Inverts a small matrix by repeated solves against unit vectors.
pub fn invert<T: Real>(a: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let n = a.len();
    let mut inv = vec![vec![T::zero(); n]; n];
    for col in 0..n {
        let mut rhs = vec![T::zero(); n];
        rhs[col] = T::one();
        let x = solve(a.to_vec(), rhs)?;
        for row in 0..n {
            inv[row][col] = x[row];
        }
    }
    Ok(inv)
}

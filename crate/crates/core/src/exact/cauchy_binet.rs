//! Two Cauchy-Binet variants for sums of products of maximal minors over
//! interlaced column sets. Each variant has a brute-force side (`lhs_*`) that
//! enumerates index tuples and a determinant side (`rhs_*`) that folds the
//! sum into a single `n x n` determinant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::int_determinant;
use crate::error::{Error, Result};

/// Row-major integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

fn shape(a: &IntMatrix, b: &IntMatrix) -> Result<(usize, usize)> {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if b.len() != n || a.iter().chain(b).any(|r| r.len() != cols) {
        return Err(Error::Dimension("A and B must both be n x N".into()));
    }
    if n > cols {
        return Err(Error::Dimension(format!("n = {n} exceeds N = {cols}")));
    }
    Ok((n, cols))
}

/// Minor of `m` on columns `cols` (0-based).
fn minor(m: &IntMatrix, cols: &[usize]) -> BigInt {
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| cols.iter().map(|&c| BigInt::from(r[c])).collect())
        .collect();
    int_determinant(&rows).expect("square by construction")
}

fn det_a_ct(a: &IntMatrix, c: &IntMatrix) -> BigInt {
    let n = a.len();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    a[i].iter()
                        .zip(&c[j])
                        .map(|(x, y)| BigInt::from(*x) * BigInt::from(*y))
                        .sum()
                })
                .collect()
        })
        .collect();
    int_determinant(&rows).expect("square by construction")
}

/// Sum of `det A[j] det B[k]` over `1 <= k1 <= j1 < k2 <= j2 < ... < kn <= jn <= N`.
pub fn cauchy_binet_lhs_i(a: &IntMatrix, b: &IntMatrix) -> Result<BigInt> {
    let (n, cols) = shape(a, b)?;
    let mut total = BigInt::zero();
    let mut js = Vec::with_capacity(n);
    let mut ks = Vec::with_capacity(n);
    fn rec(
        a: &IntMatrix,
        b: &IntMatrix,
        n: usize,
        cols: usize,
        next: usize,
        js: &mut Vec<usize>,
        ks: &mut Vec<usize>,
        total: &mut BigInt,
    ) {
        if js.len() == n {
            *total += minor(a, js) * minor(b, ks);
            return;
        }
        for k in next..cols {
            for j in k..cols {
                ks.push(k);
                js.push(j);
                rec(a, b, n, cols, j + 1, js, ks, total);
                js.pop();
                ks.pop();
            }
        }
    }
    rec(a, b, n, cols, 0, &mut js, &mut ks, &mut total);
    Ok(total)
}

/// `det(A C^T)` with `c_ij = sum_{k <= j} b_ik`.
pub fn cauchy_binet_rhs_i(a: &IntMatrix, b: &IntMatrix) -> Result<BigInt> {
    shape(a, b)?;
    let c: IntMatrix = b
        .iter()
        .map(|row| {
            row.iter()
                .scan(0i64, |acc, x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect()
        })
        .collect();
    Ok(det_a_ct(a, &c))
}

/// Sum of `det A[j] det B[k]` over `j1 < ... < jn` and strictly increasing
/// `k` with `max(1, j_v - 1) <= k_v <= j_v`.
pub fn cauchy_binet_lhs_ii(a: &IntMatrix, b: &IntMatrix) -> Result<BigInt> {
    let (n, cols) = shape(a, b)?;
    let mut total = BigInt::zero();
    fn rec(
        a: &IntMatrix,
        b: &IntMatrix,
        n: usize,
        cols: usize,
        js: &mut Vec<usize>,
        ks: &mut Vec<usize>,
        total: &mut BigInt,
    ) {
        if js.len() == n {
            *total += minor(a, js) * minor(b, ks);
            return;
        }
        let j_from = js.last().map_or(0, |j| j + 1);
        let k_floor = ks.last().map_or(0, |k| k + 1);
        for j in j_from..cols {
            for k in k_floor.max(j.saturating_sub(1))..=j {
                js.push(j);
                ks.push(k);
                rec(a, b, n, cols, js, ks, total);
                ks.pop();
                js.pop();
            }
        }
    }
    rec(a, b, n, cols, &mut Vec::new(), &mut Vec::new(), &mut total);
    Ok(total)
}

/// `det(A C'^T)` with `c'_ij = b_{i,j-1} + b_ij` (just `b_i1` in the first column).
pub fn cauchy_binet_rhs_ii(a: &IntMatrix, b: &IntMatrix) -> Result<BigInt> {
    shape(a, b)?;
    let c: IntMatrix = b
        .iter()
        .map(|row| {
            (0..row.len())
                .map(|j| if j == 0 { row[0] } else { row[j - 1] + row[j] })
                .collect()
        })
        .collect();
    Ok(det_a_ct(a, &c))
}

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use serde::{Serialize, Serializer};

use super::poly::TPoly;
use crate::error::{Error, Result};

/// Dense rectangular matrix over `Z[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![TPoly::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> TPoly) -> Self {
        let mut m = PolyMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.entries[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<TPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix, for convenience in tests and the Cauchy-Binet checks.
    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| TPoly::constant(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[TPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        }))
    }

    /// Matrix with `col` prepended as a new first column.
    pub fn with_leading_column(&self, col: &[TPoly]) -> Result<PolyMatrix> {
        if col.len() != self.rows {
            return Err(Error::Dimension(format!(
                "column of length {} for {} rows",
                col.len(),
                self.rows
            )));
        }
        Ok(PolyMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j == 0 {
                col[i].clone()
            } else {
                self.get(i, j - 1).clone()
            }
        }))
    }

    /// Every entry evaluated at `t = 1`.
    pub fn at_one(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| TPoly::constant(p.at_one())).collect(),
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination over `Z[t]`.
    /// The empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<TPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(TPoly::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = TPoly::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(TPoly::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                    let v = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly over an integral domain");
                    a.set(i, j, v);
                }
                a.set(i, k, TPoly::zero());
            }
            prev = pivot;
        }
        let det = a.get(n - 1, n - 1).clone();
        Ok(if negate { -det } else { det })
    }
}

/// Determinant of an integer matrix.
pub fn int_determinant(rows: &[Vec<BigInt>]) -> Result<BigInt> {
    let m = PolyMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|x| TPoly::constant(x.clone())).collect())
            .collect(),
    )?;
    Ok(m.determinant()?.coeff(0))
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Serializes as a list of rows, each a list of coefficient arrays.
impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[TPoly]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(serializer)
    }
}

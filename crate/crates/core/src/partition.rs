//! Integer partitions: conjugation, containment, strips and the 2-quotient.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are accepted on construction and stripped, so two
/// partitions are equal exactly when their diagrams are.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `lambda_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// True iff every row of `self` fits inside the matching row of `outer`.
    pub fn contained_in(&self, outer: &Partition) -> bool {
        self.0.len() <= outer.0.len() && self.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
    }

    /// True iff every row has even length.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Cells `(i, j)`, 1-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// The 2-quotient `(lambda0, lambda1)`.
    ///
    /// The partition is padded to even length `2n`, shifted to the
    /// beta-numbers `l = lambda + delta_{2n}`, and split by parity; each part
    /// list is then unshifted. Padding by further pairs of zeros leaves the
    /// result unchanged.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        let len = self.0.len() + self.0.len() % 2;
        self.two_quotient_padded(len)
    }

    /// 2-quotient computed after padding to `len` parts (`len` even and at
    /// least the current length).
    pub fn two_quotient_padded(&self, len: usize) -> (Partition, Partition) {
        assert!(len.is_multiple_of(2) && len >= self.0.len());
        let beta: Vec<usize> = (1..=len).map(|i| self.part(i) + len - i).collect();
        let unshift = |ks: Vec<usize>| -> Partition {
            let r = ks.len();
            let parts = ks.iter().enumerate().map(|(idx, &k)| k + idx + 1 - r).collect();
            Partition::new(parts).expect("beta-numbers are strictly decreasing")
        };
        let evens = beta.iter().filter(|x| *x % 2 == 0).map(|x| x / 2).collect();
        let odds = beta.iter().filter(|x| *x % 2 == 1).map(|x| x / 2).collect();
        (unshift(evens), unshift(odds))
    }

    /// Inverse of [`two_quotient`](Self::two_quotient) on partitions with
    /// empty 2-core (the shapes tileable by dominoes).
    pub fn from_two_quotient(q0: &Partition, q1: &Partition) -> Partition {
        let half = q0.len().max(q1.len());
        let shift = |q: &Partition, parity: usize| -> Vec<usize> {
            (1..=half).map(|i| 2 * (q.part(i) + half - i) + parity).collect()
        };
        let mut beta = shift(q0, 0);
        beta.extend(shift(q1, 1));
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let len = 2 * half;
        let parts = beta.iter().enumerate().map(|(idx, &l)| l - (len - idx - 1)).collect();
        Partition::new(parts).expect("sorted beta-numbers give a partition")
    }
}

/// True iff `mu_i <= lambda_i` for all `i`.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.contained_in(lambda)
}

fn require_contained(mu: &Partition, lambda: &Partition) -> Result<()> {
    if mu.contained_in(lambda) {
        Ok(())
    } else {
        Err(Error::NotContained {
            inner: mu.0.clone(),
            outer: lambda.0.clone(),
        })
    }
}

/// `lambda / mu` has at most one cell in each column.
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> Result<bool> {
    require_contained(mu, lambda)?;
    Ok((1..=lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i)))
}

/// `lambda / mu` has at most one cell in each row.
pub fn is_vertical_strip(mu: &Partition, lambda: &Partition) -> Result<bool> {
    require_contained(mu, lambda)?;
    Ok((1..=lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1))
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `size`, largest first part first.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            acc.push(p);
            rec(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(row: usize, rows: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(acc.clone()).expect("built decreasing"));
        if row == rows {
            return;
        }
        for p in 1..=max {
            acc.push(p);
            rec(row + 1, rows, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, rows, cols, &mut Vec::new(), &mut out);
    out
}

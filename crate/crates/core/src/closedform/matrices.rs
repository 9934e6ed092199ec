//! Determinant matrices for RDPP and CDPP weighted by `Ubar_k`.
//!
//! `matrix_rprime` / `matrix_cprime` are the closed binomial forms, with the
//! boundary cases as explicit branches. The `_esum` variants build the same
//! matrices straight from sums of specialized elementary symmetric functions
//! and serve as an independent route. `matrix_r_o` etc. are the `m = 0`
//! forms, row-reduced on the C side.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::domino::pair_parameters;
use crate::error::{Error, Result};
use crate::exact::{binomial, elem_sym_specialized, PolyMatrix, TPoly};
use crate::partition::Partition;

fn b(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// `c (1 + t^2) + mid t`.
fn sym(c: BigInt, mid: BigInt) -> TPoly {
    TPoly::new(vec![c.clone(), mid, c])
}

fn lin(c0: BigInt, c1: BigInt) -> TPoly {
    TPoly::new(vec![c0, c1])
}

fn delta(a: i64, b: i64) -> TPoly {
    if a == b {
        TPoly::one()
    } else {
        TPoly::zero()
    }
}

/// `2^{e} (1 + t)`.
fn pow2_one_t(e: i64) -> TPoly {
    let c = BigInt::from(2).pow(e as u32);
    lin(c.clone(), c)
}

fn square(r: usize, f: impl Fn(i64, i64) -> TPoly) -> PolyMatrix {
    PolyMatrix::from_fn(r, r, |i, j| f(i as i64, j as i64))
}

pub fn matrix_r_o(r: usize) -> PolyMatrix {
    square(r, |i, j| match (i, j) {
        (0, 0) | (0, 1) => TPoly::one(),
        _ => {
            let a = i + j - 1;
            let d = 2 * i - j;
            sym(b(a, d), b(a, d - 1) + b(a, d + 1))
        }
    })
}

pub fn matrix_r_e(r: usize) -> PolyMatrix {
    square(r, |i, j| match (i, j) {
        (0, 0) => TPoly::one(),
        _ => {
            let a = i + j;
            let d = 2 * i - j + 1;
            sym(b(a, d), b(a, d - 1) + b(a, d + 1))
        }
    })
}

/// Shared body of the two C forms: `{2C(a,d-1) + C(a,d)}(1+t^2) + {...}t`.
fn c_entry(a: i64, d: i64) -> TPoly {
    let two = BigInt::from(2);
    sym(
        &two * b(a, d - 1) + b(a, d),
        &two * b(a, d - 2) + b(a, d - 1) + &two * b(a, d) + b(a, d + 1),
    )
}

pub fn matrix_c_e(r: usize) -> PolyMatrix {
    square(r, |i, j| match (i, j) {
        (0, 0) => TPoly::from_i64s(&[1, 1]),
        (0, 1) => TPoly::t(),
        (1, 0) => TPoly::zero(),
        _ => c_entry(i + j - 2, 2 * i - j),
    })
}

pub fn matrix_c_o(r: usize) -> PolyMatrix {
    square(r, |i, j| match (i, j) {
        (0, 0) => TPoly::one(),
        (0, 1) | (0, 2) | (2, 0) => TPoly::zero(),
        (1, 0) => TPoly::from_i64s(&[1, 1]),
        (1, 1) => TPoly::from_i64s(&[1, 1, 1]),
        _ => c_entry(i + j - 3, 2 * i - j - 1),
    })
}

struct Params {
    even: bool,
    n0: usize,
    n1: usize,
    m0: i64,
    m1: i64,
}

fn params(n: usize, m: usize) -> Result<Params> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            range: ">= 1".into(),
        });
    }
    let ((n0, m0), (n1, m1)) = pair_parameters(n, m);
    Ok(Params {
        even: n.is_multiple_of(2),
        n0,
        n1,
        m0: m0 as i64,
        m1: m1 as i64,
    })
}

fn rprime_entry(p: &Params, i: i64, j: i64) -> TPoly {
    let (m0, m1) = (p.m0, p.m1);
    if m0 + i > 0 && m1 + j > 0 {
        let a = m0 + m1 + i + j - 1;
        let d = if p.even { m0 + 2 * i - j } else { m0 + 2 * i - j - 1 };
        return sym(b(a, d), b(a, d - 1) + b(a, d + 1));
    }
    if p.even {
        if m0 == 0 {
            lin(b(m1 + j, 1 - j), b(m1 + j, -j))
        } else {
            delta(i, 0)
        }
    } else if m1 == 0 {
        lin(b(m0 + i, 1 - i), b(m0 + i, -i))
    } else {
        delta(j, 0)
    }
}

/// Matrix whose determinant is `sum t^{Ubar_k(d)}` over RDPP_{n,m}.
/// For odd `n` the first column is `(1, 0, ..., 0)`.
pub fn matrix_rprime(n: usize, m: usize) -> Result<PolyMatrix> {
    let p = params(n, m)?;
    let cols = if p.even { p.n0 } else { p.n1 };
    let body = PolyMatrix::from_fn(p.n0, cols, |i, j| rprime_entry(&p, i as i64, j as i64));
    if p.even {
        return Ok(body);
    }
    let lead: Vec<TPoly> = (0..p.n0 as i64).map(|i| delta(i, 0)).collect();
    body.with_leading_column(&lead)
}

fn cprime_entry(p: &Params, i: i64, j: i64) -> TPoly {
    let (m0, m1) = (p.m0, p.m1);
    if m0 + i > 0 && m1 + j > 0 {
        let a = m0 + m1 + i + j - 2;
        let top = if p.even { m0 + 2 * i - j - 1 } else { m0 + 2 * i - j - 2 };
        let mut acc = TPoly::zero();
        for k in -2..=top {
            acc += &sym(b(a, k), b(a, k - 1) + b(a, k + 1));
        }
        return acc;
    }
    if p.even {
        if m1 == 0 {
            pow2_one_t(m0 + i - 1)
        } else {
            delta(j, 0)
        }
    } else if m0 + i > 0 {
        &pow2_one_t(m0 + i - 1) - &delta(i, 0)
    } else {
        TPoly::zero()
    }
}

/// Matrix whose determinant is `sum t^{Ubar_k(d)}` over CDPP_{n,m}.
pub fn matrix_cprime(n: usize, m: usize) -> Result<PolyMatrix> {
    let p = params(n, m)?;
    let cols = if p.even { p.n0 } else { p.n1 };
    let body = PolyMatrix::from_fn(p.n0, cols, |i, j| cprime_entry(&p, i as i64, j as i64));
    if p.even {
        return Ok(body);
    }
    let lead: Vec<TPoly> = (0..p.n0 as i64)
        .map(|i| {
            if p.m0 == 0 && i == 0 {
                TPoly::one()
            } else {
                pow2_one_t(p.m0 + i - 1)
            }
        })
        .collect();
    body.with_leading_column(&lead)
}

fn e(p: i64, r: i64) -> TPoly {
    elem_sym_specialized(p, r)
}

/// `e_r` of the same variables plus one extra variable equal to 1.
fn e_plus_one(p: i64, r: i64) -> TPoly {
    &e(p, r) + &e(p, r - 1)
}

/// Every `k` at which some `e(m0 + i, k - i)` can be nonzero.
fn k_range(p: &Params) -> std::ops::RangeInclusive<i64> {
    0..=p.m0 + 2 * p.n0 as i64 + 2
}

/// The RDPP matrix assembled from sums of products of `e`'s.
pub fn matrix_rprime_esum(n: usize, m: usize) -> Result<PolyMatrix> {
    let p = params(n, m)?;
    let shift = if p.even { 0 } else { 1 };
    let cols = if p.even { p.n0 } else { p.n1 };
    let body = PolyMatrix::from_fn(p.n0, cols, |i, j| {
        let (i, j) = (i as i64, j as i64);
        k_range(&p)
            .map(|k| &e_plus_one(p.m0 + i, k - i) * &e(p.m1 + j, k - j - shift))
            .sum()
    });
    if p.even {
        return Ok(body);
    }
    let lead: Vec<TPoly> = (0..p.n0 as i64).map(|i| delta(i, 0)).collect();
    body.with_leading_column(&lead)
}

/// The CDPP matrix assembled from sums of products of `e`'s.
pub fn matrix_cprime_esum(n: usize, m: usize) -> Result<PolyMatrix> {
    let p = params(n, m)?;
    let shift = if p.even { 0 } else { 1 };
    let cols = if p.even { p.n0 } else { p.n1 };
    let body = PolyMatrix::from_fn(p.n0, cols, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let mut acc = TPoly::zero();
        for k in k_range(&p) {
            let left = e(p.m0 + i, k - i);
            if left.is_zero() {
                continue;
            }
            let right: TPoly = (0..=k - shift).map(|nu| e(p.m1 + j, nu - j)).sum();
            acc += &(&left * &right);
        }
        acc
    });
    if p.even {
        return Ok(body);
    }
    let lead: Vec<TPoly> = (0..p.n0 as i64)
        .map(|i| k_range(&p).map(|k| e(p.m0 + i, k - i)).sum())
        .collect();
    body.with_leading_column(&lead)
}

/// `sum t^{Ubar_k(c)}` over `c` in CSPP_{n,m} with `shape(c)` conjugate to
/// `lambda`, as the determinant of specialized elementary symmetric
/// functions. Only one variable is `t` whatever `k` is, so the result does
/// not depend on `k` within `1..=n+m`.
pub fn genpoly_cspp_shape(n: usize, m: usize, lambda: &Partition, k: usize) -> Result<TPoly> {
    if lambda.len() > n {
        return Err(Error::invalid(
            "shape",
            format!("{lambda} has {} parts, more than n = {n}", lambda.len()),
        ));
    }
    if k == 0 || k > n + m {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            range: format!("1..={}", n + m),
        });
    }
    let big = (n + m) as i64;
    PolyMatrix::from_fn(n, n, |i, j| {
        let (i1, j1) = (i as i64 + 1, j as i64 + 1);
        e(big - i1, lambda.part(j + 1) as i64 - j1 + i1)
    })
    .determinant()
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::TPoly;

/// Exact rational scalar.
pub type QScalar = BigRational;

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!`, zero for `k < 0`.
/// The upper index may be negative.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Rising factorial `(a)_j = a(a+1)...(a+j-1)`.
pub fn pochhammer(a: &QScalar, j: u32) -> QScalar {
    let mut acc = QScalar::one();
    let mut term = a.clone();
    for _ in 0..j {
        acc *= &term;
        term += QScalar::one();
    }
    acc
}

/// `e_r` of `n` variables with one of them set to `t` and the rest to `1`:
/// `C(n-1, r) + C(n-1, r-1) t` for `n > 0`, and `delta_{0,r}` for `n = 0`.
pub fn elem_sym_specialized(n: i64, r: i64) -> TPoly {
    if n <= 0 {
        return if r == 0 { TPoly::one() } else { TPoly::zero() };
    }
    TPoly::new(vec![binomial(n - 1, r), binomial(n - 1, r - 1)])
}

/// `e_r` of `n` variables all set to `1`.
pub fn elem_sym_ones(n: i64, r: i64) -> TPoly {
    if n < 0 {
        return TPoly::zero();
    }
    TPoly::constant(binomial(n, r))
}

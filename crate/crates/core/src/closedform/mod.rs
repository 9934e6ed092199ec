//! Closed-form counts and refined polynomials for alternating sign matrices
//! and their half-turn and vertically symmetric classes, the determinant
//! matrices that count RDPP and CDPP, and the Andrews-Burge evaluation.
//!
//! Every factorial formula is evaluated over the rationals and must come out
//! integral; anything else is reported as [`Error::NonIntegral`].

mod andrews_burge;
mod matrices;

pub use andrews_burge::{
    andrews_burge_det, andrews_burge_product, andrews_burge_delta, mrr_det, mrr_product, verify_thm_result,
    IdentityCheck,
};
pub use matrices::{
    genpoly_cspp_shape, matrix_c_e, matrix_c_o, matrix_cprime, matrix_cprime_esum, matrix_r_e, matrix_r_o,
    matrix_rprime, matrix_rprime_esum,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, serialize_bigint, serialize_opt_bigint, QScalar, TPoly};

fn fact(n: i64) -> QScalar {
    QScalar::from_integer(factorial(u64::try_from(n).expect("factorial of a negative number")))
}

fn q(n: impl Into<BigInt>) -> QScalar {
    QScalar::from_integer(n.into())
}

fn integral(v: QScalar, what: impl FnOnce() -> String) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral(what()))
    }
}

fn integral_poly(coeffs: Vec<QScalar>, what: &str) -> Result<TPoly> {
    let ints = coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| integral(c, || format!("{what}, coefficient of t^{k}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(TPoly::new(ints))
}

fn need(what: &'static str, value: usize, ok: bool, range: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: value as i64,
            range: range.into(),
        })
    }
}

fn asm_q(n: i64) -> QScalar {
    (0..n).map(|i| fact(3 * i + 1) / fact(n + i)).product()
}

/// Number of `n x n` alternating sign matrices.
pub fn asm_count(n: usize) -> Result<BigInt> {
    need("n", n, n >= 1, ">= 1")?;
    integral(asm_q(n as i64), || format!("A_{n}"))
}

/// ASMs of size `n` by the position of the one in the top row.
pub fn asm_poly(n: usize) -> Result<TPoly> {
    need("n", n, n >= 1, ">= 1")?;
    let n = n as i64;
    let scale = asm_q(n) / q(binomial(3 * n - 2, n - 1));
    let coeffs = (1..=n)
        .map(|r| &scale * q(binomial(n + r - 2, n - 1) * binomial(2 * n - 1 - r, n - 1)))
        .collect();
    integral_poly(coeffs, &format!("A_{n}(t)"))
}

fn hts_even_q(k: i64) -> QScalar {
    (0..k)
        .map(|i| fact(3 * i) * fact(3 * i + 2) / (fact(k + i) * fact(k + i)))
        .product()
}

/// Number of half-turn symmetric ASMs of size `n`.
pub fn hts_count(n: usize) -> Result<BigInt> {
    need("n", n, n >= 1, ">= 1")?;
    let k = (n / 2) as i64;
    let v = if n.is_multiple_of(2) {
        hts_even_q(k)
    } else {
        fact(k) * fact(3 * k) / (fact(2 * k) * fact(2 * k)) * hts_even_q(k)
    };
    integral(v, || format!("A^HTS_{n}"))
}

fn hts_tilde_q(k: i64) -> QScalar {
    (0..k)
        .map(|i| fact(3 * i) * fact(3 * i + 2) / (fact(3 * i + 1) * fact(k + i)))
        .product()
}

/// The auxiliary factor of the even half-turn polynomial, for even `n >= 2`.
/// At `n = 2` the general formula hits `(-1)!`; the value `1 + t` is the one
/// that makes `A^HTS_2(t) = 1 + t`.
pub fn hts_tilde_poly(n: usize) -> Result<TPoly> {
    need("n", n, n >= 2 && n.is_multiple_of(2), "even, >= 2")?;
    let k = (n / 2) as i64;
    if k == 1 {
        return Ok(TPoly::from_i64s(&[1, 1]));
    }
    let scale = hts_tilde_q(k) * q(3 * k - 2) * fact(2 * k - 1) / (fact(k - 1) * fact(3 * k - 1));
    let coeffs = (0..=k)
        .map(|r| {
            let lead = q(k * (k - 1) - k * r + r * r);
            &scale * lead * fact(k + r - 2) * fact(2 * k - r - 2) / (fact(r) * fact(k - r))
        })
        .collect();
    integral_poly(coeffs, &format!("A~^HTS_{n}(t)"))
}

/// Half-turn symmetric ASMs of size `n` by the top-row one. Size 1 gives 1.
pub fn hts_poly(n: usize) -> Result<TPoly> {
    need("n", n, n >= 1, ">= 1")?;
    if n == 1 {
        return Ok(TPoly::one());
    }
    let k = n / 2;
    if n.is_multiple_of(2) {
        return Ok(&hts_tilde_poly(n)? * &asm_poly(k)?);
    }
    let sum = &(&asm_poly(k + 1)? * &hts_tilde_poly(2 * k)?) + &(&asm_poly(k)? * &hts_tilde_poly(2 * k + 2)?);
    let three = BigInt::from(3);
    if sum.coeffs().iter().any(|c| !(c % &three).is_zero()) {
        return Err(Error::NonIntegral(format!("A^HTS_{n}(t): sum not divisible by 3")));
    }
    Ok(TPoly::new(sum.coeffs().iter().map(|c| c / &three).collect()))
}

fn vs_factorial_q(k: i64) -> QScalar {
    let prod: QScalar = (1..=k)
        .map(|j| fact(6 * j - 2) * fact(2 * j - 1) / (fact(4 * j - 2) * fact(4 * j - 1)))
        .product();
    prod / q(BigInt::from(2).pow(k as u32))
}

fn vs_power_q(k: i64) -> QScalar {
    let size = 2 * k + 1;
    let mut acc = q(BigInt::from(-3).pow((k * k) as u32));
    for i in 1..=size {
        for j in (2..=size).step_by(2) {
            acc *= QScalar::new((3 * (j - i) + 1).into(), (j - i + size).into());
        }
    }
    acc
}

fn odd_half(n: usize) -> Result<i64> {
    need("n", n, n % 2 == 1, "odd, >= 1")?;
    Ok((n / 2) as i64)
}

/// Vertically symmetric ASMs of odd size `n`, by the factorial product
/// checked against the signed product form.
pub fn vs_count(n: usize) -> Result<BigInt> {
    let k = odd_half(n)?;
    let a = vs_factorial_q(k);
    let b = vs_power_q(k);
    if a != b {
        return Err(Error::Disagreement(format!("A^VS_{n}: {a} vs {b}")));
    }
    integral(a, || format!("A^VS_{n}"))
}

/// The signed product form alone.
pub fn vs_count_power_form(n: usize) -> Result<BigInt> {
    let k = odd_half(n)?;
    integral(vs_power_q(k), || format!("A^VS_{n} (power form)"))
}

/// Vertically symmetric ASMs of odd size `n` by the first-column one.
pub fn vs_poly(n: usize) -> Result<TPoly> {
    let k = odd_half(n)?;
    if k == 0 {
        return Ok(TPoly::one());
    }
    let scale = vs_factorial_q(k - 1) / fact(4 * k - 2);
    let coeffs = (1..=2 * k)
        .map(|r| {
            let inner: QScalar = (1..=r)
                .map(|j| {
                    let term = fact(2 * k + j - 2) * fact(4 * k - j - 1) / (fact(j - 1) * fact(2 * k - j));
                    if (r + j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            &scale * inner
        })
        .collect();
    integral_poly(coeffs, &format!("A^VS_{n}(t)"))
}

/// One row of the reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefValues {
    pub n: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub asm: BigInt,
    pub asm_poly: TPoly,
    #[serde(serialize_with = "serialize_bigint")]
    pub hts: BigInt,
    pub hts_poly: TPoly,
    /// Only for even `n`.
    pub hts_tilde_poly: Option<TPoly>,
    /// Only for odd `n`.
    #[serde(serialize_with = "serialize_opt_bigint")]
    pub vs: Option<BigInt>,
    pub vs_poly: Option<TPoly>,
}

impl RefValues {
    pub fn for_size(n: usize) -> Result<Self> {
        let odd = n % 2 == 1;
        Ok(RefValues {
            n,
            asm: asm_count(n)?,
            asm_poly: asm_poly(n)?,
            hts: hts_count(n)?,
            hts_poly: hts_poly(n)?,
            hts_tilde_poly: if odd { None } else { Some(hts_tilde_poly(n)?) },
            vs: if odd { Some(vs_count(n)?) } else { None },
            vs_poly: if odd { Some(vs_poly(n)?) } else { None },
        })
    }

    /// Rows `1..=upto`.
    pub fn table(upto: usize) -> Result<Vec<Self>> {
        (1..=upto).map(Self::for_size).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: Vec<BigInt>) -> Vec<i64> {
        v.into_iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn p(c: &[i64]) -> TPoly {
        TPoly::from_i64s(c)
    }

    #[test]
    fn asm_values() {
        let counts = ints((1..=5).map(|n| asm_count(n).unwrap()).collect());
        assert_eq!(counts, [1, 2, 7, 42, 429]);
        assert_eq!(asm_poly(1).unwrap(), p(&[1]));
        assert_eq!(asm_poly(3).unwrap(), p(&[2, 3, 2]));
        for n in 1..=9 {
            assert_eq!(asm_poly(n).unwrap().at_one(), asm_count(n).unwrap());
        }
        assert!(asm_count(0).is_err());
    }

    #[test]
    fn hts_values() {
        let counts = ints((1..=7).map(|n| hts_count(n).unwrap()).collect());
        assert_eq!(counts, [1, 2, 3, 10, 25, 140, 588]);
        assert_eq!(hts_poly(2).unwrap(), p(&[1, 1]));
        assert_eq!(hts_poly(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(hts_poly(4).unwrap(), p(&[2, 3, 3, 2]));
        assert_eq!(hts_poly(5).unwrap(), p(&[3, 6, 7, 6, 3]));
        assert_eq!(hts_tilde_poly(4).unwrap(), p(&[2, 1, 2]));
        for n in 1..=12 {
            assert_eq!(hts_poly(n).unwrap().at_one(), hts_count(n).unwrap(), "n={n}");
        }
        assert!(hts_tilde_poly(3).is_err());
    }

    #[test]
    fn tilde_matches_its_count() {
        for n in (2..=14).step_by(2) {
            let v = integral(hts_tilde_q((n / 2) as i64), String::new).unwrap();
            assert_eq!(hts_tilde_poly(n).unwrap().at_one(), v);
        }
    }

    #[test]
    fn vs_values() {
        let counts = ints([3, 5, 7, 9, 11].iter().map(|&n| vs_count(n).unwrap()).collect());
        assert_eq!(counts, [1, 3, 26, 646, 45885]);
        assert_eq!(vs_poly(3).unwrap(), p(&[1]));
        assert_eq!(vs_poly(5).unwrap(), p(&[1, 1, 1]));
        assert_eq!(vs_poly(7).unwrap(), p(&[3, 6, 8, 6, 3]));
        assert_eq!(vs_poly(9).unwrap(), p(&[26, 78, 138, 162, 138, 78, 26]));
        for n in (1..=17).step_by(2) {
            assert_eq!(vs_count_power_form(n).unwrap(), vs_count(n).unwrap());
            assert_eq!(vs_poly(n).unwrap().at_one(), vs_count(n).unwrap(), "n={n}");
        }
        assert!(vs_count(4).is_err());
    }

    #[test]
    fn polynomials_are_palindromic() {
        for n in 1..=9 {
            assert!(hts_poly(n).unwrap().is_palindromic(), "hts {n}");
            assert!(asm_poly(n).unwrap().is_palindromic(), "asm {n}");
        }
        for n in (1..=9).step_by(2) {
            assert!(vs_poly(n).unwrap().is_palindromic(), "vs {n}");
        }
    }

    #[test]
    fn table_serializes() {
        let rows = RefValues::table(5).unwrap();
        assert_eq!(rows[3].hts_tilde_poly, Some(p(&[2, 1, 2])));
        assert_eq!(rows[4].vs, Some(BigInt::from(3)));
        let json = serde_json::to_string(&rows[2]).unwrap();
        assert!(json.contains("\"asm\":7") && json.contains("\"vs\":1"), "{json}");
    }
}

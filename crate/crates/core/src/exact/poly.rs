use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Polynomial in one variable `t` with arbitrary-precision integer
/// coefficients, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = TPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        TPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TPoly::new(vec![c.into()])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        TPoly::new(coeffs)
    }

    pub fn t() -> Self {
        TPoly::monomial(1, 1)
    }

    /// `sum t^e` over the given exponents: the generating polynomial of a
    /// statistic's values.
    pub fn distribution(exponents: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exponents {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        TPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient sequence equals its reverse.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn scale(&self, c: &BigInt) -> TPoly {
        TPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division by a nonzero polynomial. Returns `None` when the
    /// quotient does not have integer coefficients or the remainder is
    /// nonzero.
    pub fn div_exact(&self, divisor: &TPoly) -> Option<TPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(TPoly::new(quot))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Zero for TPoly {
    fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TPoly {
    fn one() -> Self {
        TPoly::constant(1)
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;

    fn add(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for TPoly {
    type Output = TPoly;

    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;

    fn sub(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for TPoly {
    type Output = TPoly;

    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }
}

impl Mul for TPoly {
    type Output = TPoly;

    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Neg for TPoly {
    type Output = TPoly;

    fn neg(self) -> TPoly {
        TPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &TPoly {
    type Output = TPoly;

    fn neg(self) -> TPoly {
        -(self.clone())
    }
}

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> TPoly {
        iter.fold(TPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl From<i64> for TPoly {
    fn from(c: i64) -> Self {
        TPoly::constant(c)
    }
}

impl From<BigInt> for TPoly {
    fn from(c: BigInt) -> Self {
        TPoly::constant(c)
    }
}

/// Renders like `3+6t+8t^2-t^3`; the zero polynomial renders as `0`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{mag}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{mag}t^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Coefficients serialize as JSON integers; values outside `i64` fall back
/// to decimal strings.
impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// Serializes an integer as a JSON number when it fits in `i64`, otherwise
/// as a decimal string.
pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => serializer.serialize_i64(x),
        None => serializer.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_opt_bigint<S: Serializer>(v: &Option<BigInt>, serializer: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => serialize_bigint(x, serializer),
        None => serializer.serialize_none(),
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = TPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<TPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    let c = match &v {
                        serde_json::Value::Number(n) => n
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| de::Error::custom(format!("bad coefficient {n}")))?,
                        serde_json::Value::String(s) => s
                            .parse::<BigInt>()
                            .map_err(|e| de::Error::custom(format!("bad coefficient {s}: {e}")))?,
                        other => return Err(de::Error::custom(format!("bad coefficient {other}"))),
                    };
                    coeffs.push(c);
                }
                Ok(TPoly::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

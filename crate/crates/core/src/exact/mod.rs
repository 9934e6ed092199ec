//! Exact arithmetic: big integers and rationals, polynomials in `t`,
//! polynomial matrices with fraction-free determinants, generalized
//! binomials, and the Cauchy-Binet identities behind the determinant
//! formulas.

mod binom;
mod cauchy_binet;
mod matrix;
mod poly;

pub use binom::{binomial, elem_sym_ones, elem_sym_specialized, factorial, pochhammer, QScalar};
pub use cauchy_binet::{
    cauchy_binet_lhs_i, cauchy_binet_lhs_ii, cauchy_binet_rhs_i, cauchy_binet_rhs_ii, IntMatrix,
};
pub use matrix::{int_determinant, PolyMatrix};
pub use num_bigint::BigInt;
pub use poly::TPoly;
pub(crate) use poly::{serialize_bigint, serialize_opt_bigint};

//! Exact arithmetic over `Z[q]`, `Z[q, 1/q]` and `Q(q)`.
//!
//! Everything is dense and ascending. Multiplication is schoolbook; division
//! routines only walk the nonzero terms of the divisor, which makes exact
//! division by binomials `1 ± q^f` linear in the dividend's length.

mod gcd;
mod laurent;
mod poly;
mod ratfun;

pub use gcd::{coprime, poly_gcd, pseudo_rem};
pub use laurent::LaurentPoly;
pub use poly::IntPoly;
pub use ratfun::RatFun;

use crate::error::Result;

pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

/// `a / b`, failing with `NotDivisible` unless `b` divides `a` in `Z[q]`.
pub fn poly_exact_div(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    a.exact_div(b)
}

/// Remainder of `a` modulo a monic `m` with `deg m >= 1`.
pub fn poly_rem_monic(a: &IntPoly, m: &IntPoly) -> Result<IntPoly> {
    a.rem_monic(m)
}

pub fn poly_substitute_power(a: &IntPoly, m: usize) -> IntPoly {
    a.substitute_power(m)
}

pub fn ratfun_reduce(num: IntPoly, den: IntPoly) -> Result<RatFun> {
    RatFun::reduce(num, den)
}

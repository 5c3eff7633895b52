//! Exact construction of q-series sums and verification of q-congruences
//! modulo products of cyclotomic polynomials.
//!
//! The layers, bottom up:
//!
//! - [`bigpoly`]: integer polynomials, Laurent polynomials, rational functions.
//! - [`qkit`]: q-integers, q-shifted factorials, q-binomial coefficients.
//! - [`cyclofactor`]: cyclotomic polynomials and products kept in factored form.
//! - [`congruence`]: decision procedures returning a [`report::Verdict`] with evidence.
//! - [`families`]: the sums, their moduli, and the lemmas behind them.
//!
//! The guide in `book/` walks through each layer; its code blocks run as
//! doctests of this crate.

pub mod bigpoly;
pub mod congruence;
pub mod cyclofactor;
pub mod error;
pub mod families;
pub mod qkit;
pub mod report;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/qseries.md")]
    mod qseries {}
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    mod cyclotomic {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

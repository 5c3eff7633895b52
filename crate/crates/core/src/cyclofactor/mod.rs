//! Cyclotomic polynomials and the factored forms built from them.
//!
//! [`CycloTable`] memoises `Φ_d(q)`; [`CycloProduct`] keeps products of
//! cyclotomic polynomials in factored form so that moduli and summands can
//! be multiplied, divided and tested for coprimality without expansion.

mod arith;
mod product;
mod sets;
mod table;

use std::time::Instant;

pub use arith::{divisors, factorize, is_prime, mobius};
pub use product::{euler_phi, CycloProduct, Fraction};
pub use sets::{d_set, s_set, IndexSetD, IndexSetS};
pub use table::CycloTable;

use crate::bigpoly::IntPoly;
use crate::qkit::{q_binomial, q_integer};
use crate::report::{CongruenceReport, FamilyParams, Verdict, Witness};

/// `Φ_d(q)` from the shared table.
pub fn cyclotomic(d: u64, table: &CycloTable) -> IntPoly {
    table.get(d).as_ref().clone()
}

/// `A_n(q^base) = ∏_{d ∈ S(n)} Φ_d(q^base)`, factored.
pub fn a_factored(n: u64, base_exp: u64) -> CycloProduct {
    let mut p = CycloProduct::one();
    for d in s_set(n).members {
        p = p * CycloProduct::cyclotomic(d);
    }
    p.substitute_power(base_exp)
}

/// `C_n(q^base) = ∏ Φ_d(q^base)` over odd `d | n`, `d > 1`, factored.
pub fn c_factored(n: u64, base_exp: u64) -> CycloProduct {
    let mut p = CycloProduct::one();
    for d in divisors(n) {
        if d > 1 && d % 2 == 1 {
            p = p * CycloProduct::cyclotomic(d);
        }
    }
    p.substitute_power(base_exp)
}

fn dense_product(ds: impl IntoIterator<Item = u64>, base_exp: u64, table: &CycloTable) -> IntPoly {
    let mut acc = IntPoly::one();
    for d in ds {
        acc = &acc * &table.get(d).substitute_power(base_exp as usize);
    }
    acc
}

pub fn a_poly(n: u64, base_exp: u64, table: &CycloTable) -> IntPoly {
    dense_product(s_set(n).members, base_exp, table)
}

pub fn c_poly(n: u64, base_exp: u64, table: &CycloTable) -> IntPoly {
    dense_product(
        divisors(n).into_iter().filter(|&d| d > 1 && d % 2 == 1),
        base_exp,
        table,
    )
}

/// Right-hand side of the factorisation of `[n]·[2n-1 choose n-1]`:
/// `A_n · C_n · ∏_{even d | n} Φ_d · ∏_{even d ∈ D_{2n-1,n-1}} Φ_d`, all in
/// `q^base`.
pub fn factorization_rhs(n: u64, base_exp: u64) -> CycloProduct {
    let mut p = a_factored(n, 1) * c_factored(n, 1);
    for d in divisors(n) {
        if d % 2 == 0 {
            p = p * CycloProduct::cyclotomic(d);
        }
    }
    for d in d_set(2 * n - 1, n - 1).members {
        if d % 2 == 0 {
            p = p * CycloProduct::cyclotomic(d);
        }
    }
    p.substitute_power(base_exp)
}

/// Checks `[n]·[2n-1 choose n-1] = A_n C_n ∏… ∏…` in `q^base` by exact
/// comparison of expanded polynomials.
///
/// The left side comes from the q-integer and the interleaved q-binomial
/// product; the right side from the index sets via the binomial expansion of
/// the factored product.
pub fn verify_qbinom_factorization(n: u64, base_exp: u64, _table: &CycloTable) -> CongruenceReport {
    let start = Instant::now();
    assert!(n >= 2, "factorisation identity needs n >= 2");
    let lhs = &q_integer(n, base_exp)
        * &q_binomial(2 * n - 1, n as i64 - 1, base_exp).expect("q-binomial is exact");
    let rhs = factorization_rhs(n, base_exp)
        .expand()
        .expect("factorisation right side is a polynomial");
    let difference = &lhs - &rhs;
    let params = FamilyParams::default().with_n(n).with_base(base_exp);
    let verdict = Verdict {
        holds: difference.is_zero(),
        witness: Witness::Identity { difference },
    };
    let mut report = CongruenceReport::new("qbinom-factor", params, verdict);
    report.lhs_degree = lhs.degree().map(|d| d as i64);
    report.valuation = lhs.low_degree().map(|d| d as i64);
    report.modulus_degree = rhs.degree();
    report.with_elapsed(start.elapsed())
}

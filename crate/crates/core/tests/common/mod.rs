//! Seeded randomized suites shared by the property tests and the
//! acceptance harness. Oracles here are built from first principles
//! (Pascal recurrences, divisor products, floor identities) rather than
//! from the library routines under test.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcong::bigpoly::{IntPoly, LaurentPoly};
use qcong::congruence::divides;
use qcong::cyclofactor::{d_set, divisors, s_set, CycloTable};
use qcong::qkit::q_binomial;

pub const SEED: u64 = 0x5eed_2021;
pub const CASES: usize = 256;

pub type Case = fn(&mut ChaCha8Rng, &CycloTable) -> Result<(), String>;

pub struct Suite {
    pub name: &'static str,
    pub case: Case,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "ring-axioms", case: ring_axioms },
    Suite { name: "division-round-trip", case: division_round_trip },
    Suite { name: "q-pascal-oracle", case: q_pascal_oracle },
    Suite { name: "phi-product", case: phi_product },
    Suite { name: "d-set-factorization", case: d_set_factorization },
    Suite { name: "s-d-odd-part", case: s_d_odd_part },
    Suite { name: "laurent-shift", case: laurent_shift },
    Suite { name: "divides-vs-rem", case: divides_vs_rem },
];

/// Runs `CASES` cases of a suite from a seed derived from its name.
pub fn run_suite(suite: &Suite) -> Result<(), String> {
    let salt = suite.name.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ salt);
    let table = CycloTable::new();
    for i in 0..CASES {
        (suite.case)(&mut rng, &table).map_err(|e| format!("case {i}: {e}"))?;
    }
    Ok(())
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> IntPoly {
    let len = rng.random_range(0..=max_degree + 1);
    IntPoly::new((0..len).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect())
}

fn random_monic(rng: &mut ChaCha8Rng, max_degree: usize) -> IntPoly {
    let deg = rng.random_range(1..=max_degree);
    let mut c: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.random_range(-9..=9))).collect();
    c.push(BigInt::from(1));
    IntPoly::new(c)
}

/// A product of one to three cyclotomic polynomials with small index.
fn random_cyclotomic_modulus(rng: &mut ChaCha8Rng, table: &CycloTable) -> IntPoly {
    let mut m = IntPoly::one();
    for _ in 0..rng.random_range(1..=3) {
        m = &m * &*table.get(rng.random_range(1..=24));
    }
    m
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn ring_axioms(rng: &mut ChaCha8Rng, _: &CycloTable) -> Result<(), String> {
    let a = random_poly(rng, 12, 50);
    let b = random_poly(rng, 12, 50);
    let c = random_poly(rng, 12, 50);
    check(&a * &b == &b * &a, || format!("commutativity {a} {b}"))?;
    check(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity {a} {b} {c}"))?;
    check(&(&a + &b) * &c == &(&a * &c) + &(&b * &c), || format!("distributivity {a} {b} {c}"))?;
    check((&a + &(-&a)).is_zero(), || format!("additive inverse of {a}"))?;
    check(&a * &IntPoly::one() == a, || format!("unit {a}"))
}

fn division_round_trip(rng: &mut ChaCha8Rng, _: &CycloTable) -> Result<(), String> {
    let a = random_poly(rng, 20, 100);
    let m = random_monic(rng, 8);
    let r = a.rem_monic(&m).map_err(|e| e.to_string())?;
    check(r.degree().is_none_or(|d| d < m.degree().unwrap()), || format!("remainder degree {r}"))?;
    let quot = (&a - &r).exact_div(&m).map_err(|e| format!("{a} mod {m}: {e}"))?;
    check(&(&quot * &m) + &r == a, || format!("a = qm + r fails for {a}, {m}"))?;
    let b = random_poly(rng, 10, 20);
    if !b.is_zero() {
        let back = (&a * &b).exact_div(&b).map_err(|e| e.to_string())?;
        check(back == a, || format!("(ab)/b for {a}, {b}"))?;
    }
    Ok(())
}

/// `[n, k]` from `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn pascal_row(n: u64) -> Vec<IntPoly> {
    let mut row = vec![IntPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for k in 0..=m {
            let left = if k > 0 { row[k as usize - 1].clone() } else { IntPoly::zero() };
            let right = if k < m { row[k as usize].shift_up(k as usize) } else { IntPoly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row
}

fn q_pascal_oracle(rng: &mut ChaCha8Rng, _: &CycloTable) -> Result<(), String> {
    let n = rng.random_range(0..=30u64);
    let base = rng.random_range(1..=3u64);
    let row = pascal_row(n);
    for k in 0..=n {
        let got = q_binomial(n, k as i64, base).map_err(|e| e.to_string())?;
        let want = row[k as usize].substitute_power(base as usize);
        check(got == want, || format!("[{n},{k}] in q^{base}"))?;
    }
    let outside = q_binomial(n, n as i64 + 1, base).map_err(|e| e.to_string())?;
    check(outside.is_zero(), || format!("[{n},{}] is not zero", n + 1))
}

fn phi_product(rng: &mut ChaCha8Rng, table: &CycloTable) -> Result<(), String> {
    let n = rng.random_range(1..=300u64);
    let mut prod = IntPoly::one();
    for d in divisors(n) {
        prod = &prod * &*table.get(d);
    }
    let want = &IntPoly::q_pow(n as usize) - &IntPoly::one();
    check(prod == want, || format!("product over divisors of {n}"))
}

fn d_set_factorization(rng: &mut ChaCha8Rng, table: &CycloTable) -> Result<(), String> {
    let n = rng.random_range(0..=40u64);
    let k = rng.random_range(0..=n);
    let mut prod = IntPoly::one();
    for d in d_set(n, k).members {
        prod = &prod * &*table.get(d);
    }
    check(prod == pascal_row(n)[k as usize], || format!("D-set product for [{n},{k}]"))
}

fn s_d_odd_part(rng: &mut ChaCha8Rng, _: &CycloTable) -> Result<(), String> {
    let n = rng.random_range(1..=500u64);
    let odd: Vec<u64> = d_set(2 * n - 1, n - 1)
        .members
        .into_iter()
        .filter(|d| d % 2 == 1)
        .collect();
    let s = s_set(n);
    check(odd == s.members, || format!("odd part of D(2n-1, n-1) vs S(n) at n={n}"))?;
    // brute-force the defining floor condition with signed arithmetic
    let brute: Vec<u64> = (3..=2 * n + 5)
        .step_by(2)
        .filter(|&d| {
            let (n, d) = (n as i64, d as i64);
            (n - (d + 1) / 2).div_euclid(d) == n / d
        })
        .collect();
    check(brute == s.members, || format!("S({n}) against its definition"))?;
    check(
        divisors(n).iter().all(|d| !s.contains(*d)),
        || format!("S({n}) meets the divisors of {n}"),
    )
}

fn laurent_shift(rng: &mut ChaCha8Rng, table: &CycloTable) -> Result<(), String> {
    let m = random_cyclotomic_modulus(rng, table);
    let mut f = random_poly(rng, 15, 20);
    if rng.random_bool(0.5) {
        f = &f * &m;
    }
    let base = LaurentPoly::new(f.clone(), rng.random_range(-10..=10));
    let shifted = base.shift(rng.random_range(-25..=25));
    let a = divides(&m, &base).map_err(|e| e.to_string())?;
    let b = divides(&m, &shifted).map_err(|e| e.to_string())?;
    check(a.holds == b.holds, || format!("shift changed divisibility of {f} by {m}"))?;
    let oracle = f.rem_monic(&m).map_err(|e| e.to_string())?.is_zero();
    check(a.holds == oracle, || format!("{f} by {m}"))
}

fn divides_vs_rem(rng: &mut ChaCha8Rng, table: &CycloTable) -> Result<(), String> {
    let m = if rng.random_bool(0.5) {
        random_cyclotomic_modulus(rng, table)
    } else {
        let mut m = random_monic(rng, 6);
        if m.constant_term() == BigInt::from(0) {
            m = &m + &IntPoly::one();
        }
        m
    };
    let mut f = random_poly(rng, 18, 30);
    if rng.random_bool(0.5) {
        f = &f * &m;
    }
    let v = divides(&m, &LaurentPoly::from(f.clone())).map_err(|e| e.to_string())?;
    let rem = f.rem_monic(&m).map_err(|e| e.to_string())?;
    check(v.holds == rem.is_zero(), || format!("{f} by {m}"))
}

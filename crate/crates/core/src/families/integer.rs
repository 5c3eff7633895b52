//! The `q = 1` shadows: integer and p-adic congruences, and the analytic
//! series checked by partial-sum bracketing.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::congruence::{integer_congruent, padic_congruent};
use crate::cyclofactor::is_prime;
use crate::error::{Error, Result};
use crate::qkit::central_binomial;
use crate::report::{CongruenceReport, FamilyParams, Verdict, Witness};

/// `Σ_{k<n} (4k+1)^{2s+1} C(2k,k)^r (-4)^{r(n-k-1)}`.
pub fn sum_4k1(n: u64, r: u64, s: u64) -> BigInt {
    let step = BigInt::from(-4).pow(r as u32);
    let mut total = BigInt::zero();
    // Horner in (-4)^r
    for k in 0..n {
        let c = central_binomial(k);
        total = total * &step + BigInt::from(4 * k + 1).pow(2 * s as u32 + 1) * c.pow(r as u32);
    }
    total
}

/// `Σ_{k<n} (3k+1) C(2k,k)³ 16^{n-k-1}`.
pub fn sum_3k1(n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for k in 0..n {
        total = total * 16 + BigInt::from(3 * k + 1) * central_binomial(k).pow(3);
    }
    total
}

fn integer_report(
    family: &'static str,
    params: FamilyParams,
    value: BigInt,
    modulus: BigInt,
    start: Instant,
) -> Result<CongruenceReport> {
    let holds = integer_congruent(&value, &modulus)?;
    Ok(CongruenceReport::new(
        family,
        params,
        Verdict {
            holds,
            witness: Witness::Integer { value, modulus },
        },
    )
    .with_elapsed(start.elapsed()))
}

/// `4 Σ_{k<n} (4k+1)^{2s+1} C(2k,k)^r (-4)^{r(n-k-1)} ≡ 0 (mod 2^r n C(2n,n))`,
/// the integer form of the stated `2^{r-2} n C(2n,n)` modulus.
pub fn verify_int_4k1(n: u64, r: u64, s: u64) -> Result<CongruenceReport> {
    let start = Instant::now();
    if n < 2 || r < 1 {
        return Err(Error::ParamOutOfRange(format!("need n >= 2 and r >= 1, got n={n} r={r}")));
    }
    let value = sum_4k1(n, r, s) * 4;
    let modulus = BigInt::from(2).pow(r as u32) * n * central_binomial(n);
    let params = FamilyParams::default().with_n(n).with_r(r).with_s(s);
    integer_report("int-4k1", params, value, modulus, start)
}

/// `Σ_{k<n} (3k+1) C(2k,k)³ 16^{n-k-1} ≡ 0 (mod 2n C(2n,n))`.
pub fn verify_int_3k1(n: u64) -> Result<CongruenceReport> {
    let start = Instant::now();
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!("need n >= 2, got n={n}")));
    }
    let modulus = BigInt::from(2 * n) * central_binomial(n);
    integer_report("int-3k1", FamilyParams::default().with_n(n), sum_3k1(n), modulus, start)
}

/// `Σ_{k ≤ (p-1)/2} (4k+1) C(2k,k)³ / (-64)^k`, exactly.
pub fn van_hamme_sum(p: u64) -> BigRational {
    let mut total = BigRational::zero();
    let mut power = BigInt::one();
    for k in 0..=(p - 1) / 2 {
        let num = BigInt::from(4 * k + 1) * central_binomial(k).pow(3);
        total += BigRational::new(num, power.clone());
        power *= -64;
    }
    total
}

/// The sum above is `≡ p(-1)^{(p-1)/2} (mod p³)`.
pub fn verify_van_hamme(p: u64) -> Result<CongruenceReport> {
    let start = Instant::now();
    if p < 3 || !is_prime(p) {
        return Err(Error::ParamOutOfRange(format!("p = {p} must be an odd prime")));
    }
    let lhs = van_hamme_sum(p);
    let sign = if ((p - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let rhs = BigRational::from_integer(BigInt::from(sign) * p);
    let holds = padic_congruent(&lhs, &rhs, p, 3)?;
    let verdict = Verdict {
        holds,
        witness: Witness::PAdic {
            difference: &lhs - &rhs,
            p,
            required: 3,
        },
    };
    Ok(CongruenceReport::new("padic-4k1", FamilyParams::default().with_p(p), verdict)
        .with_elapsed(start.elapsed()))
}

/// `2/π`.
pub const TWO_OVER_PI: f64 = std::f64::consts::FRAC_2_PI;

/// Partial sums `S_1, …, S_len` of `Σ (4k+1) C(2k,k)³ / (-64)^k`, where
/// `S_N` adds the first `N` terms. Terms follow the ratio
/// `t_{k+1}/t_k = -(4k+5)/(4k+1) · (2(2k+1)/(k+1))³ / 64`.
pub fn ramanujan_partials(len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    let mut term = 1.0f64;
    let mut sum = 0.0f64;
    for k in 0..len {
        sum += term;
        out.push(sum);
        let kf = k as f64;
        let c = 2.0 * (2.0 * kf + 1.0) / (kf + 1.0);
        term *= -(4.0 * kf + 5.0) / (4.0 * kf + 1.0) * c * c * c / 64.0;
    }
    out
}

/// `(S_N, S_{N+1})`.
pub fn ramanujan_partial(n: usize) -> (f64, f64) {
    assert!(n >= 1, "partial sums start at N = 1");
    let s = ramanujan_partials(n + 1);
    (s[n - 1], s[n])
}

/// `S_N` and `S_{N+1}` lie on opposite sides of `2/π`.
pub fn verify_ramanujan(n: u64) -> Result<CongruenceReport> {
    if n == 0 {
        return Err(Error::ParamOutOfRange("N must be >= 1".into()));
    }
    let start = Instant::now();
    let (a, b) = ramanujan_partial(n as usize);
    Ok(bracket_report(n, a, b).with_elapsed(start.elapsed()))
}

pub(crate) fn bracket_report(n: u64, a: f64, b: f64) -> CongruenceReport {
    let (lower, upper) = if a < b { (a, b) } else { (b, a) };
    let verdict = Verdict {
        holds: lower < TWO_OVER_PI && TWO_OVER_PI < upper,
        witness: Witness::Bracket {
            lower,
            upper,
            target: TWO_OVER_PI,
            midpoint_error: ((a + b) / 2.0 - TWO_OVER_PI).abs(),
        },
    };
    CongruenceReport::new("series-4k1", FamilyParams::default().with_n(n), verdict)
}

//! Decision procedures for the congruence notions in play: divisibility of
//! Laurent polynomials, congruence of rational functions modulo a monic
//! modulus, and p-adic and integer congruences.
//!
//! `q` is a unit modulo every modulus here (constant term `±1`), so a
//! Laurent polynomial is congruent to zero iff its body is.

mod residue;

pub use residue::{CycloModulus, Residue};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bigpoly::{coprime, IntPoly, LaurentPoly, RatFun};
use crate::cyclofactor::{CycloProduct, CycloTable, Fraction};
use crate::error::{Error, Result};
use crate::report::{FactorCheck, Verdict, Witness};

fn check_modulus(modulus: &IntPoly) -> Result<()> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if modulus.constant_term().is_zero() {
        return Err(Error::ModulusHasZeroConstantTerm);
    }
    Ok(())
}

/// Whether `modulus` divides `value` in `Z[q, 1/q]`.
///
/// On success the witness is the quotient with the valuation of `value`
/// restored; otherwise it is the remainder of the body (valuation kept).
pub fn divides(modulus: &IntPoly, value: &LaurentPoly) -> Result<Verdict> {
    check_modulus(modulus)?;
    let body = value.body();
    match body.exact_div(modulus) {
        Ok(quo) => Ok(Verdict {
            holds: true,
            witness: Witness::Quotient(LaurentPoly::new(quo, value.valuation())),
        }),
        Err(Error::NotDivisible) => {
            let rem = if modulus.leading().is_some_and(|c| c.abs().is_one()) {
                body.div_rem_unit(modulus)?.1
            } else {
                crate::bigpoly::pseudo_rem(body, modulus)
            };
            Ok(Verdict {
                holds: false,
                witness: Witness::Remainder(LaurentPoly::new(rem, value.valuation())),
            })
        }
        Err(e) => Err(e),
    }
}

/// Whether `lhs ≡ scalar · rhs (mod m)` for fractions whose denominators are
/// coprime to `m`.
///
/// Decided on the integer-cleared cross difference
/// `den(scalar)·num_L·den_R − num(scalar)·num_R·den_L`, whose residue modulo
/// `m` is the witness.
pub fn ratfun_congruent_mod(
    m: &IntPoly,
    lhs: &RatFun,
    rhs: &RatFun,
    scalar: &BigRational,
) -> Result<Verdict> {
    if !m.is_monic() || m.degree().unwrap_or(0) < 1 {
        return Err(Error::NonMonicModulus);
    }
    for den in [lhs.den(), rhs.den()] {
        let r = den.rem_monic(m)?;
        if r.is_zero() || !coprime(&r, m) {
            return Err(Error::DenominatorNotCoprime);
        }
    }
    let left = (lhs.num() * rhs.den()).scale(scalar.denom());
    let right = (rhs.num() * lhs.den()).scale(scalar.numer());
    let residue = (&left - &right).rem_monic(m)?;
    Ok(Verdict {
        holds: residue.is_zero(),
        witness: Witness::Residue(residue),
    })
}

/// Exponent of the prime `p` in a nonzero integer.
pub fn p_valuation(x: &BigInt, p: u64) -> u32 {
    assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (quo, rem) = x.div_rem(&p);
        if !rem.is_zero() {
            return v;
        }
        x = quo;
        v += 1;
    }
}

/// Whether `p^k` divides the numerator of `lhs − rhs`.
pub fn padic_congruent(lhs: &BigRational, rhs: &BigRational, p: u64, k: u32) -> Result<bool> {
    let pb = BigInt::from(p);
    for x in [lhs, rhs] {
        if x.denom().is_multiple_of(&pb) {
            return Err(Error::DenominatorDivisibleByP(p));
        }
    }
    let diff = lhs - rhs;
    Ok(diff.is_zero() || p_valuation(diff.numer(), p) >= k)
}

/// Whether `modulus` divides `value`.
pub fn integer_congruent(value: &BigInt, modulus: &BigInt) -> Result<bool> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(value.is_multiple_of(modulus))
}

/// Cancels from `frac` every cyclotomic factor its denominator shares with
/// `modulus`, failing with `DenominatorNotCoprime` if one survives.
fn clear_shared_factors(
    frac: &Fraction,
    modulus: &CycloProduct,
    table: &CycloTable,
) -> Result<Fraction> {
    let mut numerator = frac.numerator.clone();
    let mut denominator = frac.denominator.clone();
    for (e, _) in modulus.factors() {
        let mut m = denominator.exponent(e);
        if m == 0 {
            continue;
        }
        let phi = table.get(e);
        while m > 0 {
            numerator = numerator
                .exact_div(&phi)
                .map_err(|_| Error::DenominatorNotCoprime)?;
            m -= 1;
        }
        denominator = denominator.div(&CycloProduct::cyclotomic(e).pow(denominator.exponent(e)))?;
    }
    Ok(Fraction {
        numerator,
        denominator,
    })
}

/// Whether `modulus` divides the fraction `frac` in the sense of
/// q-congruences: its denominator is coprime to `modulus` and `modulus`
/// divides its numerator exactly. One exact division by the expanded
/// modulus.
///
/// When the denominator is a monomial (times an integer) the witness is the
/// Laurent quotient of the value; otherwise it is the quotient of the
/// numerator.
pub fn fraction_divisible(
    frac: &Fraction,
    modulus: &CycloProduct,
    table: &CycloTable,
) -> Result<Verdict> {
    let frac = clear_shared_factors(frac, modulus, table)?;
    let m = modulus.expand()?;
    let den = &frac.denominator;
    let laurent_valuation = if den.factors().next().is_none() {
        -den.q_power()
    } else {
        0
    };
    divides(&m, &LaurentPoly::new(frac.numerator, laurent_valuation))
}

/// Multiplicity of `Φ_d` in `numerator` for each `(d, required)`, counted up
/// to `required + 1`, plus per-factor coprimality of the denominator.
pub fn factorwise_divisible(
    frac: &Fraction,
    required: &[(u64, u32)],
    table: &CycloTable,
) -> Verdict {
    let mut checks = Vec::with_capacity(required.len());
    for &(d, req) in required {
        let denominator_coprime = frac.denominator.exponent(d) == 0;
        let phi = table.get(d);
        let mut cur = frac.numerator.clone();
        let mut found = 0;
        if cur.is_zero() {
            found = req + 1;
        } else {
            while found <= req {
                match cur.exact_div(&phi) {
                    Ok(q) => {
                        cur = q;
                        found += 1;
                    }
                    Err(_) => break,
                }
            }
        }
        checks.push(FactorCheck {
            d,
            required: req,
            found,
            denominator_coprime,
        });
    }
    Verdict {
        holds: checks.iter().all(FactorCheck::holds),
        witness: Witness::Factorwise(checks),
    }
}

/// Exact rational value of `Σ terms` at `q = 1`, when every term is finite
/// there.
pub fn eval_at_one(frac: &Fraction) -> Option<BigRational> {
    let den = frac.denominator.expand().ok()?;
    let d = den.eval_at_one();
    (!d.is_zero()).then(|| BigRational::new(frac.numerator.eval_at_one(), d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::{q_pochhammer, QPochSpec};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn divides_examples() {
        let one_plus = p(&[1, 1]);
        let phi3 = p(&[1, 1, 1]);
        let modulus = &one_plus.pow(3) * &phi3;
        let value = LaurentPoly::new(&one_plus.pow(4) * &phi3, -1);
        let v = divides(&modulus, &value).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Witness::Quotient(LaurentPoly::new(one_plus.clone(), -1)));

        assert!(divides(&phi3, &LaurentPoly::zero()).unwrap().holds);

        let v = divides(&one_plus, &LaurentPoly::from(p(&[1, 0, 1]))).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Witness::Remainder(LaurentPoly::from(p(&[2]))));

        assert_eq!(
            divides(&p(&[0, 1]), &LaurentPoly::one()),
            Err(Error::ModulusHasZeroConstantTerm)
        );
    }

    #[test]
    fn ratfun_examples() {
        let phi3 = p(&[1, 1, 1]);
        let lhs = RatFun::reduce(
            q_pochhammer(QPochSpec::plus(1, 2, 3)),
            q_pochhammer(QPochSpec::plus(2, 2, 3)),
        )
        .unwrap();
        assert!(ratfun_congruent_mod(&phi3, &lhs, &RatFun::one(), &rat(1, 2)).unwrap().holds);
        assert!(!ratfun_congruent_mod(&phi3, &lhs, &RatFun::one(), &rat(1, 1)).unwrap().holds);
        assert!(ratfun_congruent_mod(&phi3, &lhs, &lhs, &rat(1, 1)).unwrap().holds);

        let inv = RatFun::reduce(IntPoly::one(), p(&[1, 1])).unwrap();
        let minus_q = RatFun::from(p(&[0, -1]));
        assert!(ratfun_congruent_mod(&phi3, &inv, &minus_q, &rat(1, 1)).unwrap().holds);

        let bad = RatFun::reduce(IntPoly::one(), phi3.clone()).unwrap();
        assert_eq!(
            ratfun_congruent_mod(&phi3, &bad, &RatFun::one(), &rat(1, 1)),
            Err(Error::DenominatorNotCoprime)
        );
        assert_eq!(
            ratfun_congruent_mod(&p(&[1, 2]), &inv, &inv, &rat(1, 1)),
            Err(Error::NonMonicModulus)
        );
    }

    #[test]
    fn padic_examples() {
        assert!(padic_congruent(&rat(3, 8), &rat(-3, 1), 3, 3).unwrap());
        assert!(!padic_congruent(&rat(3, 8), &rat(-3, 1), 3, 4).unwrap());
        assert!(padic_congruent(&rat(5, 7), &rat(5, 7), 3, 9).unwrap());
        assert!(!padic_congruent(&rat(1, 2), &rat(0, 1), 3, 1).unwrap());
        assert_eq!(
            padic_congruent(&rat(1, 3), &rat(0, 1), 3, 1),
            Err(Error::DenominatorDivisibleByP(3))
        );
    }

    #[test]
    fn integer_examples() {
        let b = BigInt::from;
        assert!(integer_congruent(&b(48), &b(24)).unwrap());
        assert!(integer_congruent(&b(0), &b(7)).unwrap());
        assert!(integer_congruent(&b(6), &b(6)).unwrap());
        assert!(!integer_congruent(&b(5), &b(6)).unwrap());
        assert_eq!(integer_congruent(&b(1), &b(0)), Err(Error::ZeroModulus));
    }

    #[test]
    fn fraction_and_factorwise() {
        let table = CycloTable::new();
        // q^-1 (1+q)^4 Φ3 modulo (1+q)^3 Φ3
        let value = CycloProduct::one_plus_q_pow(1).pow(4)
            * CycloProduct::cyclotomic(3)
            * CycloProduct::monomial(-1);
        let modulus = CycloProduct::one_plus_q_pow(1).pow(3) * CycloProduct::cyclotomic(3);
        let frac = CycloProduct::sum(&[value]).unwrap();
        let v = fraction_divisible(&frac, &modulus, &table).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Witness::Quotient(LaurentPoly::new(p(&[1, 1]), -1)));

        let fw = factorwise_divisible(&frac, &[(2, 4), (3, 1), (5, 1)], &table);
        let Witness::Factorwise(checks) = &fw.witness else { panic!() };
        assert_eq!(checks[0].found, 4);
        assert_eq!(checks[1].found, 1);
        assert_eq!(checks[2].found, 0);
        assert!(!fw.holds);

        // 1/Φ3 + qΦ2/Φ3 = 1: the shared Φ3 cancels, then 1 is not divisible
        let shared = CycloProduct::sum(&[
            CycloProduct::cyclotomic(3).pow(-1),
            CycloProduct::monomial(1) * CycloProduct::cyclotomic(2) * CycloProduct::cyclotomic(3).pow(-1),
        ])
        .unwrap();
        let v = fraction_divisible(&shared, &CycloProduct::cyclotomic(3), &table).unwrap();
        assert!(!v.holds);
        assert!(fraction_divisible(&shared, &CycloProduct::one_minus_q_pow(1), &table).is_ok());
        let bad = CycloProduct::sum(&[CycloProduct::cyclotomic(3).pow(-1)]).unwrap();
        assert_eq!(
            fraction_divisible(&bad, &CycloProduct::cyclotomic(3), &table),
            Err(Error::DenominatorNotCoprime)
        );
    }
}

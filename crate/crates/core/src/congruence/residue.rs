use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bigpoly::{coprime, IntPoly};
use crate::cyclofactor::{CycloProduct, CycloTable};
use crate::error::{Error, Result};
use crate::report::{Verdict, Witness};

/// A squarefree product of cyclotomic polynomials used as a modulus for
/// factored values, e.g. `Φ_d(q^2) = Φ_d(q)Φ_{2d}(q)` for odd `d`.
///
/// Residues are computed in `Z[q]/(q^N - 1)` with `N` the lcm of the
/// component indices, which the modulus divides. A factored value is split
/// into its component part, binomials `1 - q^f` that are units modulo every
/// component, and binomials that are not; the latter are paired off through
/// `(1 - q^f) / ∏_{e | f} Φ_e`. Nothing is ever divided in the quotient
/// ring: denominators are carried as a second residue.
#[derive(Debug, Clone)]
pub struct CycloModulus {
    components: Vec<u64>,
    period: usize,
    poly: IntPoly,
}

/// `num / den` modulo a [`CycloModulus`], with `den` a unit there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl CycloModulus {
    /// `Φ_d(q^base)`.
    pub fn new(d: u64, base: u64, table: &CycloTable) -> Result<Self> {
        Self::from_product(&CycloProduct::cyclotomic(d).substitute_power(base), table)
    }

    pub fn from_product(m: &CycloProduct, table: &CycloTable) -> Result<Self> {
        if m.q_power() != 0 || !m.scalar_part().is_one() {
            return Err(Error::ParamOutOfRange(
                "residue modulus must be a monic product of cyclotomic polynomials".into(),
            ));
        }
        let mut components = Vec::new();
        let mut period = 1u64;
        let mut poly = IntPoly::one();
        for (e, k) in m.factors() {
            if k != 1 {
                return Err(Error::ParamOutOfRange(
                    "residue modulus must be squarefree".into(),
                ));
            }
            components.push(e);
            period = period.lcm(&e);
            poly = &poly * &table.get(e);
        }
        if components.is_empty() {
            return Err(Error::NonMonicModulus);
        }
        Ok(CycloModulus {
            components,
            period: period as usize,
            poly,
        })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    fn fold(&self, p: &IntPoly) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.period];
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out[i % self.period] += c;
            }
        }
        out
    }

    /// `acc ·= (1 - q^f)` in the cyclic ring.
    fn mul_binomial(&self, acc: &mut [BigInt], f: u64) {
        let n = self.period;
        let shift = (f % n as u64) as usize;
        if shift == 0 {
            acc.iter_mut().for_each(|c| *c = BigInt::zero());
            return;
        }
        let rotated: Vec<BigInt> = (0..n).map(|i| acc[(i + n - shift) % n].clone()).collect();
        for (c, r) in acc.iter_mut().zip(rotated) {
            *c -= r;
        }
    }

    fn mul_cyclic(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.period;
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[(i + j) % n] += x * y;
                }
            }
        }
        out
    }

    fn rotate(&self, acc: &[BigInt], e: i64) -> Vec<BigInt> {
        let n = self.period as i64;
        let s = e.rem_euclid(n) as usize;
        let n = self.period;
        (0..n).map(|i| acc[(i + n - s) % n].clone()).collect()
    }

    fn reduce(&self, v: Vec<BigInt>) -> IntPoly {
        IntPoly::new(v)
            .rem_monic(&self.poly)
            .expect("cyclotomic products are monic")
    }

    /// Residue of a factored value whose denominator is coprime to the
    /// modulus; `DenominatorNotCoprime` otherwise.
    pub fn residue(&self, x: &CycloProduct, table: &CycloTable) -> Result<Residue> {
        if x.is_zero() {
            return Ok(Residue {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let n = self.period;
        let mut num = vec![BigInt::zero(); n];
        let mut den = vec![BigInt::zero(); n];
        num[0] = x.scalar_part().numer().clone();
        den[0] = x.scalar_part().denom().clone();

        // component part: Φ_e^v with v >= 0
        let mut rest = x.clone();
        for &e in &self.components {
            let v = x.exponent(e);
            if v < 0 {
                return Err(Error::DenominatorNotCoprime);
            }
            if v > 0 {
                let phi = self.fold(&table.get(e));
                for _ in 0..v {
                    num = self.mul_cyclic(&num, &phi);
                }
                rest = rest.div(&CycloProduct::cyclotomic(e).pow(v))?;
            }
        }
        num = self.rotate(&num, rest.q_power());
        let scalar_and_q = CycloProduct::scalar(rest.scalar_part().clone())
            * CycloProduct::monomial(rest.q_power());
        rest = rest.div(&scalar_and_q)?;

        let (negate, binomials) = rest.binomial_exponents();
        if negate {
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        // unit binomials: net count per residue class of f
        let mut classes: BTreeMap<u64, i64> = BTreeMap::new();
        let mut zero_divisors: Vec<(u64, i64)> = Vec::new();
        for (&f, &b) in &binomials {
            if self.components.iter().any(|&e| f % e == 0) {
                zero_divisors.push((f, b));
            } else {
                *classes.entry(f % n as u64).or_insert(0) += b;
            }
        }
        for (&cls, &b) in &classes {
            let target = if b > 0 { &mut num } else { &mut den };
            for _ in 0..b.unsigned_abs() {
                self.mul_binomial(target, cls);
            }
        }
        for (f, b) in zero_divisors {
            let mut u = &IntPoly::one() - &IntPoly::q_pow(f as usize);
            for &e in &self.components {
                if f % e == 0 {
                    u = u.exact_div(&table.get(e)).expect("Φ_e divides 1 - q^f");
                }
            }
            let u = self.fold(&u);
            let target = if b > 0 { &mut num } else { &mut den };
            for _ in 0..b.unsigned_abs() {
                *target = self.mul_cyclic(target, &u);
            }
        }
        let res = Residue {
            num: self.reduce(num),
            den: self.reduce(den),
        };
        if res.den.is_zero() || !coprime(&res.den, &self.poly) {
            return Err(Error::InternalInconsistency(
                "unit part of a residue is not a unit".into(),
            ));
        }
        Ok(res.normalized())
    }

    /// Residue of `Σ terms`, accumulated as a fraction.
    pub fn residue_of_sum<'a>(
        &self,
        terms: impl IntoIterator<Item = &'a CycloProduct>,
        table: &CycloTable,
    ) -> Result<Residue> {
        let mut acc = Residue {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        };
        for t in terms {
            let r = self.residue(t, table)?;
            let num = &(&acc.num * &r.den) + &(&r.num * &acc.den);
            let den = &acc.den * &r.den;
            acc = Residue {
                num: num.rem_monic(&self.poly)?,
                den: den.rem_monic(&self.poly)?,
            }
            .normalized();
        }
        Ok(acc)
    }

    /// Decides `x ≡ y`; the witness is the residue of the cross difference.
    pub fn congruent(&self, x: &Residue, y: &Residue) -> Result<Verdict> {
        let diff = &(&x.num * &y.den) - &(&y.num * &x.den);
        let r = diff.rem_monic(&self.poly)?;
        Ok(Verdict {
            holds: r.is_zero(),
            witness: Witness::Residue(r),
        })
    }
}

impl Residue {
    /// Divides out the common integer content and makes the denominator's
    /// leading coefficient positive.
    fn normalized(self) -> Self {
        let mut g = self.num.content().gcd(&self.den.content());
        if g.is_zero() {
            return self;
        }
        if self.den.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Residue {
            num: self.num.div_scalar_exact(&g).expect("content divides"),
            den: self.den.div_scalar_exact(&g).expect("content divides"),
        }
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::congruence::ratfun_congruent_mod;
    use crate::qkit::QPochSpec;

    fn check_against_expanded(x: &CycloProduct, y: &CycloProduct, d: u64, base: u64) {
        let table = CycloTable::new();
        let m = CycloModulus::new(d, base, &table).unwrap();
        let fast = m
            .congruent(&m.residue(x, &table).unwrap(), &m.residue(y, &table).unwrap())
            .unwrap();
        let slow = ratfun_congruent_mod(
            m.poly(),
            &x.to_ratfun().unwrap(),
            &y.to_ratfun().unwrap(),
            &BigRational::one(),
        )
        .unwrap();
        assert_eq!(fast.holds, slow.holds, "{x:?} vs {y:?} mod Φ{d}(q^{base})");
    }

    #[test]
    fn modulus_components() {
        let table = CycloTable::new();
        assert_eq!(CycloModulus::new(3, 1, &table).unwrap().components(), &[3]);
        assert_eq!(CycloModulus::new(3, 2, &table).unwrap().components(), &[3, 6]);
        assert_eq!(CycloModulus::new(4, 2, &table).unwrap().components(), &[8]);
        assert_eq!(
            CycloModulus::new(5, 2, &table).unwrap().poly(),
            &table.get(5).substitute_power(2)
        );
    }

    #[test]
    fn matches_expanded_route() {
        let half = |k| {
            CycloProduct::pochhammer(QPochSpec::plus(1, 2, k))
                .div(&CycloProduct::pochhammer(QPochSpec::plus(2, 2, k)))
                .unwrap()
        };
        let quarter = |k| {
            CycloProduct::pochhammer(QPochSpec::plus(2, 4, k))
                .div(&CycloProduct::pochhammer(QPochSpec::plus(4, 4, k)))
                .unwrap()
        };
        let c = |a: i64, b: i64| CycloProduct::scalar(BigRational::new(a.into(), b.into()));
        for d in [3u64, 5, 7] {
            for k in 0..(2 * d) {
                check_against_expanded(&half(k), &c(1, 2), d, 1);
                check_against_expanded(&half(k + d), &(&c(1, 2) * &half(k)), d, 1);
                check_against_expanded(&quarter(k + d), &(&c(1, 2) * &quarter(k)), d, 2);
                check_against_expanded(&quarter(k), &CycloProduct::monomial(k as i64), d, 2);
            }
        }
        let x = CycloProduct::cyclotomic(3).pow(2) * CycloProduct::one_plus_q_pow(1).pow(-1);
        check_against_expanded(&x, &CycloProduct::zero(), 3, 2);
        check_against_expanded(&x, &CycloProduct::zero(), 3, 1);
    }

    #[test]
    fn rejects_non_integral_values() {
        let table = CycloTable::new();
        let m = CycloModulus::new(3, 2, &table).unwrap();
        let x = CycloProduct::cyclotomic(6).pow(-1);
        assert_eq!(m.residue(&x, &table), Err(Error::DenominatorNotCoprime));
    }

    #[test]
    fn sums() {
        let table = CycloTable::new();
        let m = CycloModulus::new(3, 1, &table).unwrap();
        // 1/(1+q) + q ≡ 0 mod Φ3
        let terms = [CycloProduct::one_plus_q_pow(1).pow(-1), CycloProduct::monomial(1)];
        let r = m.residue_of_sum(&terms, &table).unwrap();
        assert!(r.num.is_zero());
        let zero = m.residue(&CycloProduct::zero(), &table).unwrap();
        assert!(m.congruent(&r, &zero).unwrap().holds);
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::arith::{divisors, factorize, mobius};
use super::sets::d_set;
use super::table::CycloTable;
use crate::bigpoly::{IntPoly, LaurentPoly, RatFun};
use crate::error::{Error, Result};
use crate::qkit::{QPochSpec, Sign};

/// `c · q^e · ∏ Φ_d(q)^{m_d}` with rational `c` and integer exponents.
///
/// Every summand in this crate is such a product, so multiplication and
/// division are exponent arithmetic and the representation is always fully
/// reduced: distinct cyclotomic polynomials and `q` are pairwise coprime
/// irreducibles. Zero is represented by a zero scalar with no factors.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloProduct {
    scalar: BigRational,
    q_power: i64,
    exps: BTreeMap<u64, i64>,
}

impl CycloProduct {
    pub fn one() -> Self {
        Self::scalar(BigRational::one())
    }

    pub fn zero() -> Self {
        Self::scalar(BigRational::zero())
    }

    pub fn scalar(c: BigRational) -> Self {
        CycloProduct {
            scalar: c,
            q_power: 0,
            exps: BTreeMap::new(),
        }
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Self::scalar(BigRational::from_integer(c.into()))
    }

    /// `q^e`.
    pub fn monomial(e: i64) -> Self {
        let mut p = Self::one();
        p.q_power = e;
        p
    }

    /// `(-1)^k`.
    pub fn sign_power(k: u64) -> Self {
        Self::integer(if k.is_multiple_of(2) { 1 } else { -1 })
    }

    /// `Φ_d(q)`.
    pub fn cyclotomic(d: u64) -> Self {
        assert!(d >= 1);
        let mut p = Self::one();
        p.exps.insert(d, 1);
        p
    }

    /// `1 - q^a = -∏_{e | a} Φ_e`.
    pub fn one_minus_q_pow(a: u64) -> Self {
        if a == 0 {
            return Self::zero();
        }
        let mut p = Self::integer(-1);
        for e in divisors(a) {
            p.exps.insert(e, 1);
        }
        p
    }

    /// `1 + q^a = ∏ Φ_e` over `e | 2a` with `e ∤ a`.
    pub fn one_plus_q_pow(a: u64) -> Self {
        if a == 0 {
            return Self::integer(2);
        }
        let mut p = Self::one();
        for e in divisors(2 * a) {
            if !a.is_multiple_of(e) {
                p.exps.insert(e, 1);
            }
        }
        p
    }

    /// `[n]_{q^base} = (1 - q^{n·base}) / (1 - q^base)`.
    pub fn q_integer(n: u64, base: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut p = Self::one();
        for e in divisors(n * base) {
            if !base.is_multiple_of(e) {
                p.exps.insert(e, 1);
            }
        }
        p
    }

    /// Factored `(±q^a; q^b)_k`.
    pub fn pochhammer(spec: QPochSpec) -> Self {
        let mut p = Self::one();
        for e in spec.exponents() {
            let f = match spec.sign {
                Sign::Plus => Self::one_minus_q_pow(e),
                Sign::Minus => Self::one_plus_q_pow(e),
            };
            p = &p * &f;
        }
        p
    }

    /// `[n choose k]_{q^base} = ∏_{d ∈ D_{n,k}} Φ_d(q^base)`; zero outside `0..=n`.
    pub fn q_binomial(n: u64, k: i64, base: u64) -> Self {
        if k < 0 || k as u64 > n {
            return Self::zero();
        }
        let mut p = Self::one();
        for d in d_set(n, k as u64).members {
            p.exps.insert(d, 1);
        }
        p.substitute_power(base)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar_part(&self) -> &BigRational {
        &self.scalar
    }

    pub fn q_power(&self) -> i64 {
        self.q_power
    }

    /// Exponent of `Φ_d` (zero when absent).
    pub fn exponent(&self, d: u64) -> i64 {
        self.exps.get(&d).copied().unwrap_or(0)
    }

    /// Nonzero `(d, exponent)` pairs in increasing `d`.
    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exps.iter().map(|(&d, &m)| (d, m))
    }

    /// Sum of `m_d · φ(d)` plus the `q` power: the degree of the expansion
    /// when the product is a polynomial.
    pub fn degree(&self) -> i64 {
        self.q_power
            + self
                .exps
                .iter()
                .map(|(&d, &m)| m * euler_phi(d) as i64)
                .sum::<i64>()
    }

    /// No negative exponents, no negative `q` power and an integer scalar.
    pub fn is_polynomial(&self) -> bool {
        self.scalar.is_integer() && self.q_power >= 0 && self.exps.values().all(|&m| m > 0)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        if self.is_zero() {
            assert!(e > 0, "zero raised to a negative power");
            return Self::zero();
        }
        let scalar = if e > 0 {
            num_traits::pow(self.scalar.clone(), e as usize)
        } else {
            num_traits::pow(self.scalar.recip(), (-e) as usize)
        };
        CycloProduct {
            scalar,
            q_power: self.q_power * e,
            exps: self.exps.iter().map(|(&d, &m)| (d, m * e)).collect(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(-1))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self * &Self::scalar(c.clone())
    }

    /// The positive part: scalar numerator, nonnegative `q` power and
    /// positive exponents.
    pub fn numerator(&self) -> Self {
        CycloProduct {
            scalar: BigRational::from_integer(self.scalar.numer().clone()),
            q_power: self.q_power.max(0),
            exps: self.exps.iter().filter(|(_, &m)| m > 0).map(|(&d, &m)| (d, m)).collect(),
        }
    }

    /// The denominator as a polynomial product with positive scalar.
    pub fn denominator(&self) -> Self {
        if self.is_zero() {
            return Self::one();
        }
        CycloProduct {
            scalar: BigRational::from_integer(self.scalar.denom().clone()),
            q_power: (-self.q_power).max(0),
            exps: self.exps.iter().filter(|(_, &m)| m < 0).map(|(&d, &m)| (d, -m)).collect(),
        }
    }

    /// `P(q^m)`, using `Φ_d(q^p) = Φ_{dp}` when `p | d` and `Φ_{dp}·Φ_d`
    /// otherwise, one prime at a time.
    pub fn substitute_power(&self, m: u64) -> Self {
        assert!(m >= 1);
        let mut cur = self.clone();
        for (p, e) in factorize(m) {
            for _ in 0..e {
                let mut exps = BTreeMap::new();
                for (&d, &k) in &cur.exps {
                    *exps.entry(d * p).or_insert(0) += k;
                    if d % p != 0 {
                        *exps.entry(d).or_insert(0) += k;
                    }
                }
                exps.retain(|_, k| *k != 0);
                cur = CycloProduct {
                    scalar: cur.scalar,
                    q_power: cur.q_power * p as i64,
                    exps,
                };
            }
        }
        cur
    }

    /// The same product rewritten as `sign · ∏ (1 - q^f)^{b_f}`.
    ///
    /// Uses `Φ_e = ∏_{f | e} (1 - q^f)^{μ(e/f)}` for `e > 1` and
    /// `Φ_1 = -(1 - q)`. The binomial exponents are unique.
    pub fn binomial_exponents(&self) -> (bool, BTreeMap<u64, i64>) {
        let mut negate = false;
        let mut out: BTreeMap<u64, i64> = BTreeMap::new();
        for (&e, &m) in &self.exps {
            if e == 1 && m % 2 != 0 {
                negate = !negate;
            }
            for f in divisors(e) {
                let mu = mobius(e / f);
                if mu != 0 {
                    *out.entry(f).or_insert(0) += mu * m;
                }
            }
        }
        out.retain(|_, b| *b != 0);
        (negate, out)
    }

    /// Expands a polynomial product into dense coefficients.
    ///
    /// The cyclotomic part is rewritten in binomials; all multiplications by
    /// `1 - q^f` run first, then every division by `1 - q^f`, each linear in
    /// the current length. Fails with `NotDivisible` if the product is not a
    /// polynomial.
    pub fn expand(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if !self.is_polynomial() {
            return Err(Error::NotDivisible);
        }
        let (negate, binomials) = self.binomial_exponents();
        let mut c = self.scalar.to_integer();
        if negate {
            c = -c;
        }
        let mut acc = IntPoly::constant(c);
        for (&f, &b) in &binomials {
            for _ in 0..b.max(0) {
                acc.mul_one_minus_q_pow(f as usize);
            }
        }
        for (&f, &b) in binomials.iter().rev() {
            for _ in 0..(-b).max(0) {
                acc.div_one_minus_q_pow(f as usize).map_err(|_| {
                    Error::InternalInconsistency(format!(
                        "binomial expansion left a remainder at 1 - q^{f}"
                    ))
                })?;
            }
        }
        Ok(acc.shift_up(self.q_power as usize))
    }

    /// Expansion allowing a negative `q` power.
    pub fn expand_laurent(&self) -> Result<LaurentPoly> {
        let shifted = self * &Self::monomial(-self.q_power);
        Ok(LaurentPoly::new(shifted.expand()?, self.q_power))
    }

    /// Reduced rational function; cheap because the factored form is already
    /// reduced up to integer content.
    pub fn to_ratfun(&self) -> Result<RatFun> {
        Ok(RatFun::clear_content(
            self.numerator().expand()?,
            self.denominator().expand()?,
        ))
    }

    /// Product of `Φ_d(q)` polynomials from the table, multiplied densely.
    /// An independent route to [`CycloProduct::expand`].
    pub fn expand_with_table(&self, table: &CycloTable) -> Result<IntPoly> {
        if !self.is_polynomial() {
            return Err(Error::NotDivisible);
        }
        let mut acc = IntPoly::constant(self.scalar.to_integer());
        for (&d, &m) in &self.exps {
            let phi = table.get(d);
            for _ in 0..m {
                acc = &acc * &phi;
            }
        }
        Ok(acc.shift_up(self.q_power as usize))
    }

    /// Least common multiple of the denominators of `terms`.
    pub fn common_denominator<'a>(terms: impl IntoIterator<Item = &'a CycloProduct>) -> Self {
        let mut scalar = BigInt::one();
        let mut q_power = 0i64;
        let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
        for t in terms {
            if t.is_zero() {
                continue;
            }
            scalar = scalar.lcm(t.scalar.denom());
            q_power = q_power.max(-t.q_power);
            for (&d, &m) in &t.exps {
                if m < 0 {
                    let e = exps.entry(d).or_insert(0);
                    *e = (*e).max(-m);
                }
            }
        }
        CycloProduct {
            scalar: BigRational::from_integer(scalar),
            q_power,
            exps,
        }
    }

    /// `Σ terms` over the least common denominator, numerator expanded.
    pub fn sum(terms: &[CycloProduct]) -> Result<Fraction> {
        let denominator = Self::common_denominator(terms);
        let mut numerator = IntPoly::zero();
        for t in terms {
            if t.is_zero() {
                continue;
            }
            numerator += &(t * &denominator).expand()?;
        }
        Ok(Fraction {
            numerator,
            denominator,
        })
    }
}

impl Mul for &CycloProduct {
    type Output = CycloProduct;
    fn mul(self, rhs: &CycloProduct) -> CycloProduct {
        if self.is_zero() || rhs.is_zero() {
            return CycloProduct::zero();
        }
        let mut exps = self.exps.clone();
        for (&d, &m) in &rhs.exps {
            let e = exps.entry(d).or_insert(0);
            *e += m;
            if *e == 0 {
                exps.remove(&d);
            }
        }
        CycloProduct {
            scalar: &self.scalar * &rhs.scalar,
            q_power: self.q_power + rhs.q_power,
            exps,
        }
    }
}

impl Mul for CycloProduct {
    type Output = CycloProduct;
    fn mul(self, rhs: CycloProduct) -> CycloProduct {
        &self * &rhs
    }
}

impl Neg for &CycloProduct {
    type Output = CycloProduct;
    fn neg(self) -> CycloProduct {
        CycloProduct {
            scalar: -&self.scalar,
            q_power: self.q_power,
            exps: self.exps.clone(),
        }
    }
}

impl fmt::Debug for CycloProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        if self.q_power != 0 {
            write!(f, "·q^{}", self.q_power)?;
        }
        for (d, m) in &self.exps {
            write!(f, "·Φ{d}^{m}")?;
        }
        Ok(())
    }
}

/// `numerator / denominator` where the denominator is kept factored.
#[derive(Debug, Clone, PartialEq)]
pub struct Fraction {
    pub numerator: IntPoly,
    /// Polynomial product: integer scalar, `q^e` with `e >= 0`, positive exponents.
    pub denominator: CycloProduct,
}

impl Fraction {
    /// The Laurent polynomial this fraction equals, when its denominator is
    /// a bare power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let den = &self.denominator;
        (den.exps.is_empty() && den.scalar.is_one())
            .then(|| LaurentPoly::new(self.numerator.clone(), -den.q_power))
    }

    /// Whether `Φ_d` is absent from the denominator.
    pub fn denominator_avoids(&self, d: u64) -> bool {
        self.denominator.exponent(d) == 0
    }

    /// Cancels every common factor and returns the canonical [`RatFun`].
    ///
    /// Since the denominator's factorisation is known, the gcd is found by
    /// stripping each `Φ_d` (and `q`) from the numerator while it divides.
    pub fn reduce(&self, table: &CycloTable) -> Result<RatFun> {
        if self.numerator.is_zero() {
            return Ok(RatFun::zero());
        }
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        let low = num.low_degree().unwrap_or(0) as i64;
        let strip_q = low.min(den.q_power);
        if strip_q > 0 {
            num = num.shift_down(strip_q as usize)?;
            den.q_power -= strip_q;
        }
        let factors: Vec<(u64, i64)> = den.factors().collect();
        for (d, m) in factors {
            let phi = table.get(d);
            let mut removed = 0;
            while removed < m {
                match num.exact_div(&phi) {
                    Ok(q) => {
                        num = q;
                        removed += 1;
                    }
                    Err(_) => break,
                }
            }
            if removed > 0 {
                den = den.div(&CycloProduct::cyclotomic(d).pow(removed))?;
            }
        }
        Ok(RatFun::clear_content(num, den.expand()?))
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

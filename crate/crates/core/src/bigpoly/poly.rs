use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` with arbitrary-precision integer
/// coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The highest stored coefficient is
/// always nonzero; the zero polynomial stores no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: usize) -> Self {
        Self::monomial(1, exp)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `q^e`; the low `e` coefficients must vanish.
    pub fn shift_down(&self, e: usize) -> Result<Self> {
        if self.is_zero() || e == 0 {
            return Ok(self.clone());
        }
        if self.low_degree().is_some_and(|low| low < e) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly {
            coeffs: self.coeffs[e..].to_vec(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide each of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (quo, rem) = x.div_rem(c);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.push(quo);
        }
        Ok(IntPoly { coeffs: out })
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `a(q^m)`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let mut coeffs = vec![BigInt::zero(); deg * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// In place: `self *= 1 - q^f`.
    pub fn mul_one_minus_q_pow(&mut self, f: usize) {
        self.mul_binomial(f, false);
    }

    /// In place: `self *= 1 + q^f`.
    pub fn mul_one_plus_q_pow(&mut self, f: usize) {
        self.mul_binomial(f, true);
    }

    fn mul_binomial(&mut self, f: usize, plus: bool) {
        if self.is_zero() {
            return;
        }
        if f == 0 {
            if plus {
                for c in &mut self.coeffs {
                    *c <<= 1;
                }
            } else {
                self.coeffs.clear();
            }
            return;
        }
        let len = self.coeffs.len();
        self.coeffs.resize(len + f, BigInt::zero());
        for i in (f..len + f).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if plus {
                hi[0] += &lo[i - f];
            } else {
                hi[0] -= &lo[i - f];
            }
        }
        self.normalize();
    }

    /// In place: `self /= 1 - q^f`, failing when the division is not exact.
    pub fn div_one_minus_q_pow(&mut self, f: usize) -> Result<()> {
        self.div_binomial(f, false)
    }

    /// In place: `self /= 1 + q^f`, failing when the division is not exact.
    pub fn div_one_plus_q_pow(&mut self, f: usize) -> Result<()> {
        self.div_binomial(f, true)
    }

    fn div_binomial(&mut self, f: usize, plus: bool) -> Result<()> {
        if f == 0 {
            if plus {
                *self = self.div_scalar_exact(&BigInt::from(2))?;
                return Ok(());
            }
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(());
        }
        let len = self.coeffs.len();
        if len <= f {
            return Err(Error::NotDivisible);
        }
        // (1 ∓ q^f)·c = p  ⇒  c_i = p_i ± c_{i-f}
        for i in f..len {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if plus {
                hi[0] -= &lo[i - f];
            } else {
                hi[0] += &lo[i - f];
            }
        }
        if self.coeffs[len - f..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        self.coeffs.truncate(len - f);
        self.normalize();
        Ok(())
    }

    /// Exact quotient `a / b` over the integers.
    pub fn exact_div(&self, b: &IntPoly) -> Result<IntPoly> {
        let (quo, rem) = self.long_division(b, true)?;
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Quotient and remainder for a divisor whose leading coefficient is ±1.
    pub fn div_rem_unit(&self, b: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = b.leading().ok_or(Error::DivisionByZero)?;
        if !lead.abs().is_one() {
            return Err(Error::NonMonicModulus);
        }
        self.long_division(b, false)
    }

    /// Remainder modulo a monic modulus of positive degree.
    pub fn rem_monic(&self, m: &IntPoly) -> Result<IntPoly> {
        if !m.is_monic() || m.degree() == Some(0) {
            return Err(Error::NonMonicModulus);
        }
        Ok(self.long_division(m, false)?.1)
    }

    /// Schoolbook long division that only walks the nonzero terms of the
    /// divisor. With `bail` set it stops at the first step whose leading
    /// coefficient is not divisible by the divisor's leading coefficient.
    fn long_division(&self, b: &IntPoly, bail: bool) -> Result<(IntPoly, IntPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok((IntPoly::zero(), IntPoly::zero()));
        };
        if da < db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let lead = &b.coeffs[db];
        let unit = lead.abs().is_one();
        let lead_neg = lead.is_negative();
        let tail: Vec<(usize, &BigInt)> = b.coeffs[..db]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();

        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = std::mem::take(&mut rem[i + db]);
            if top.is_zero() {
                continue;
            }
            let qi = if unit {
                if lead_neg {
                    -top
                } else {
                    top
                }
            } else {
                let (qi, r) = top.div_rem(lead);
                if !r.is_zero() {
                    if bail {
                        return Err(Error::NotDivisible);
                    }
                    return Err(Error::NonMonicModulus);
                }
                qi
            };
            for &(j, bj) in &tail {
                if bj.is_one() {
                    rem[i + j] -= &qi;
                } else if (-bj).is_one() {
                    rem[i + j] += &qi;
                } else {
                    rem[i + j] -= &qi * bj;
                }
            }
            quo[i] = qi;
        }
        rem.truncate(db);
        Ok((IntPoly::new(quo), IntPoly::new(rem)))
    }
}

fn mul_dense(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let (outer, inner) = if a.nonzero_terms() <= b.nonzero_terms() {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in outer.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let minus = (-ai).is_one();
        if ai.is_one() || minus {
            for (j, bj) in inner.coeffs.iter().enumerate() {
                if minus {
                    out[i + j] -= bj;
                } else {
                    out[i + j] += bj;
                }
            }
        } else {
            for (j, bj) in inner.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    out[i + j] += ai * bj;
                }
            }
        }
    }
    IntPoly::new(out)
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        mul_dense(self, rhs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        mul_dense(&self, &rhs)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[BigInt],
    offset: i64,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exp = offset + i as i64;
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match (exp, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{mag}q")?,
            (e, true) => write!(f, "q^{e}")?,
            (e, false) => write!(f, "{mag}q^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, 0)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Signed;

use super::gcd::poly_gcd;
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Reduced quotient of two integer polynomials.
///
/// The denominator is nonzero with positive leading coefficient and shares no
/// polynomial factor or integer content with the numerator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    /// Canonical reduced form of `num / den`.
    pub fn reduce(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::clear_content(num, den))
    }

    /// Normalises integer content and sign only; the caller guarantees the
    /// two parts share no polynomial factor of positive degree.
    pub(crate) fn clear_content(num: IntPoly, den: IntPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        RatFun {
            num: num.div_scalar_exact(&c).expect("content divides"),
            den: den.div_scalar_exact(&c).expect("content divides"),
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(IntPoly::one())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0) && self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::reduce(self.den.clone(), self.num.clone())
    }
}

impl From<IntPoly> for RatFun {
    fn from(p: IntPoly) -> Self {
        Self::clear_content(p, IntPoly::one())
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::reduce(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::reduce(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

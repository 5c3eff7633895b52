use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::poly::{write_terms, IntPoly};

/// `q^valuation · body` with `body(0) != 0`.
///
/// The valuation is renormalised after every operation; zero carries
/// valuation 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    body: IntPoly,
    valuation: i64,
}

impl LaurentPoly {
    pub fn new(body: IntPoly, valuation: i64) -> Self {
        match body.low_degree() {
            None => Self::zero(),
            Some(0) => LaurentPoly { body, valuation },
            Some(low) => LaurentPoly {
                body: body.shift_down(low).expect("low coefficients vanish"),
                valuation: valuation + low as i64,
            },
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            body: IntPoly::zero(),
            valuation: 0,
        }
    }

    pub fn one() -> Self {
        Self::from(IntPoly::one())
    }

    /// `c · q^exp` for any integer exponent.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(IntPoly::constant(c), exp)
    }

    pub fn body(&self) -> &IntPoly {
        &self.body
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Highest exponent present; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.body.degree().map(|d| d as i64 + self.valuation)
    }

    /// Coefficient of `q^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.valuation {
            return BigInt::default();
        }
        self.body.coeff((exp - self.valuation) as usize)
    }

    /// The ordinary polynomial, when no negative powers are present.
    pub fn to_poly(&self) -> Option<IntPoly> {
        if self.valuation < 0 {
            return None;
        }
        Some(self.body.shift_up(self.valuation as usize))
    }

    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            body: self.body.clone(),
            valuation: self.valuation + e,
        }
    }

    /// `a(q^m)` for `m >= 1`.
    pub fn substitute_power(&self, m: usize) -> Self {
        LaurentPoly::new(self.body.substitute_power(m), self.valuation * m as i64)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.body.eval_at_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LaurentPoly::new(self.body.scale(c), self.valuation)
    }

    fn aligned(&self, rhs: &Self) -> (IntPoly, IntPoly, i64) {
        let low = self.valuation.min(rhs.valuation);
        (
            self.body.shift_up((self.valuation - low) as usize),
            rhs.body.shift_up((rhs.valuation - low) as usize),
            low,
        )
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        LaurentPoly::new(p, 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, low) = self.aligned(rhs);
        LaurentPoly::new(&a + &b, low)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(&self.body * &rhs.body, self.valuation + rhs.valuation)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            body: -&self.body,
            valuation: self.valuation,
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.body.coeffs(), self.valuation)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_valuation() {
        let a = LaurentPoly::new(IntPoly::from_i64s(&[0, 0, 3, 1]), -5);
        assert_eq!(a.valuation(), -3);
        assert_eq!(a.body(), &IntPoly::from_i64s(&[3, 1]));
        assert_eq!(a.degree(), Some(-2));
        let z = LaurentPoly::new(IntPoly::zero(), 7);
        assert_eq!(z.valuation(), 0);
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn arithmetic_with_negative_powers() {
        let a = LaurentPoly::monomial(1, -1);
        let b = LaurentPoly::from(IntPoly::from_i64s(&[1, 1]));
        let ab = &a * &b;
        assert_eq!(ab.to_string(), "q^-1 + 1");
        assert_eq!((&ab - &a).to_string(), "1");
        assert!((&ab - &ab).is_zero());
        assert_eq!(ab.to_poly(), None);
        assert_eq!(ab.shift(1).to_poly(), Some(b.body().clone()));
    }
}

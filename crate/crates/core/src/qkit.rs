//! q-integers, q-shifted factorials with monomial arguments, Gaussian
//! binomial coefficients and the integer central binomial coefficient.

use num_bigint::BigInt;
use num_traits::One;

use crate::bigpoly::IntPoly;
use crate::error::{Error, Result};

/// Sign of the monomial argument of a q-shifted factorial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(sign · q^offset; q^step)_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QPochSpec {
    pub sign: Sign,
    pub offset: u64,
    pub step: u64,
    pub count: u64,
}

impl QPochSpec {
    /// `(q^offset; q^step)_count`
    pub fn plus(offset: u64, step: u64, count: u64) -> Self {
        QPochSpec {
            sign: Sign::Plus,
            offset,
            step,
            count,
        }
    }

    /// `(-q^offset; q^step)_count`
    pub fn minus(offset: u64, step: u64, count: u64) -> Self {
        QPochSpec {
            sign: Sign::Minus,
            offset,
            step,
            count,
        }
    }

    /// Exponents `offset + j·step` of the individual factors.
    pub fn exponents(&self) -> impl Iterator<Item = u64> + '_ {
        assert!(self.step >= 1, "q-shifted factorial step must be positive");
        (0..self.count).map(move |j| self.offset + j * self.step)
    }
}

/// `[n]_{q^base_exp} = 1 + q^m + … + q^{m(n-1)}` with `m = base_exp`.
pub fn q_integer(n: u64, base_exp: u64) -> IntPoly {
    assert!(base_exp >= 1);
    if n == 0 {
        return IntPoly::zero();
    }
    let m = base_exp as usize;
    let mut coeffs = vec![BigInt::default(); m * (n as usize - 1) + 1];
    for i in 0..n as usize {
        coeffs[i * m] = BigInt::one();
    }
    IntPoly::new(coeffs)
}

/// Expands `∏_{j<count} (1 - sign·q^{offset + j·step})`.
pub fn q_pochhammer(spec: QPochSpec) -> IntPoly {
    let mut acc = IntPoly::one();
    for e in spec.exponents() {
        match spec.sign {
            Sign::Plus => acc.mul_one_minus_q_pow(e as usize),
            Sign::Minus => acc.mul_one_plus_q_pow(e as usize),
        }
    }
    acc
}

/// Gaussian binomial `[n choose k]` in `q^base_exp`; zero outside `0..=n`.
///
/// Built as the quotient `(q;q)_n / ((q;q)_k (q;q)_{n-k})`, with the
/// numerator and denominator factors interleaved so that every partial
/// quotient `[n-k+j choose j]` is itself a polynomial and each exact
/// division is by a binomial.
pub fn q_binomial(n: u64, k: i64, base_exp: u64) -> Result<IntPoly> {
    if k < 0 || k as u64 > n {
        return Ok(IntPoly::zero());
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = IntPoly::one();
    for j in 1..=k {
        acc.mul_one_minus_q_pow((n - k + j) as usize);
        acc.div_one_minus_q_pow(j as usize).map_err(|_| {
            Error::InternalInconsistency(format!(
                "[{n} choose {k}] partial quotient at step {j} left a remainder"
            ))
        })?;
    }
    Ok(acc.substitute_power(base_exp as usize))
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> BigInt {
    let mut c = BigInt::one();
    for i in 1..=n {
        // c = C(n + i, i) after this step
        c = c * (n + i) / i;
    }
    c
}

/// `C(n, k)` with the same conventions as [`q_binomial`].
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::default();
    }
    let k = (k as u64).min(n - k as u64);
    let mut c = BigInt::one();
    for i in 1..=k {
        c = c * (n - k + i) / i;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// q-Pascal: `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
    fn pascal_table(max_n: usize) -> Vec<Vec<IntPoly>> {
        let mut rows: Vec<Vec<IntPoly>> = vec![vec![IntPoly::one()]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1].clone() } else { IntPoly::zero() };
                    let right = prev.get(k).map(|r| r.shift_up(k)).unwrap_or_default();
                    &left + &right
                })
                .collect();
            rows.push(row);
        }
        rows
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(1, 1), IntPoly::one());
        assert_eq!(q_integer(4, 1), p(&[1, 1, 1, 1]));
        assert_eq!(q_integer(5, 2), p(&[1, 0, 1, 0, 1, 0, 1, 0, 1]));
        assert!(q_integer(0, 3).is_zero());
    }

    #[test]
    fn pochhammers() {
        assert_eq!(q_pochhammer(QPochSpec::plus(3, 2, 0)), IntPoly::one());
        assert_eq!(q_pochhammer(QPochSpec::minus(1, 1, 2)), p(&[1, 1, 1, 1]));
        assert_eq!(
            q_pochhammer(QPochSpec::plus(1, 2, 2)),
            &p(&[1, -1]) * &p(&[1, 0, 0, -1])
        );
        assert!(q_pochhammer(QPochSpec::plus(0, 1, 3)).is_zero());
        assert_eq!(q_pochhammer(QPochSpec::minus(0, 1, 1)), p(&[2]));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(7, 0, 1).unwrap(), IntPoly::one());
        assert_eq!(q_binomial(2, 1, 1).unwrap(), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2, 1).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(4, 5, 1).unwrap().is_zero());
        assert!(q_binomial(4, -1, 2).unwrap().is_zero());
    }

    #[test]
    fn pascal_oracle_agrees() {
        let rows = pascal_table(20);
        for (n, row) in rows.iter().enumerate() {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&q_binomial(n as u64, k as i64, 1).unwrap(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn gaussian_binomial_properties() {
        for n in 0..=30u64 {
            for k in 0..=n as i64 {
                let g = q_binomial(n, k, 1).unwrap();
                assert_eq!(g.eval_at_one(), binomial(n, k));
                assert!(g.coeffs().iter().all(|c| c.sign() != num_bigint::Sign::Minus));
                if n <= 20 {
                    assert_eq!(g, q_binomial(n, n as i64 - k, 1).unwrap());
                    assert_eq!(q_binomial(n, k, 2).unwrap(), g.substitute_power(2));
                }
            }
        }
    }

    #[test]
    fn central_binomials() {
        assert_eq!(central_binomial(0), BigInt::from(1));
        assert_eq!(central_binomial(2), BigInt::from(6));
        assert_eq!(central_binomial(10), BigInt::from(184756));
        for n in 0..40 {
            assert_eq!(central_binomial(n), binomial(2 * n, n as i64));
        }
    }
}

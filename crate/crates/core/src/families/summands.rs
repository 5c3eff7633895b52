//! Summands and moduli in factored form.

use crate::cyclofactor::{a_factored, c_factored, CycloProduct};
use crate::qkit::QPochSpec;

type P = CycloProduct;

fn qint(m: u64, base: u64) -> P {
    P::q_integer(m, base)
}

fn central(k: u64, base: u64) -> P {
    P::q_binomial(2 * k, k as i64, base)
}

/// `(-q^{base(k+1)}; q^base)_{n-k-1}`.
fn tail(n: u64, k: u64, base: u64) -> P {
    P::pochhammer(QPochSpec::minus(base * (k + 1), base, n - k - 1))
}

fn tri(k: u64) -> i64 {
    (k * (k + 1) / 2) as i64
}

/// `(q^base; q^{2base})_k / (q^{2base}; q^{2base})_k`.
pub fn half_ratio(k: u64, base: u64) -> P {
    P::pochhammer(QPochSpec::plus(base, 2 * base, k))
        .div(&P::pochhammer(QPochSpec::plus(2 * base, 2 * base, k)))
        .expect("nonzero pochhammer")
}

/// `(-1)^k q^{k²+(r-2)k} [4k+1] [2k,k]^{2r-1} (-q^{k+1};q)^{4r-2}_{n-k-1}`
pub fn alt_4k1(n: u64, r: u64, k: u64) -> P {
    let r = r as i64;
    let ki = k as i64;
    P::sign_power(k)
        * P::monomial(ki * ki + (r - 2) * ki)
        * qint(4 * k + 1, 1)
        * central(k, 1).pow(2 * r - 1)
        * tail(n, k, 1).pow(4 * r - 2)
}

/// `q^{(r-2)k} [4k+1] [2k,k]^{2r} (-q^{k+1};q)^{4r}_{n-k-1}`
pub fn even_4k1(n: u64, r: u64, k: u64) -> P {
    let r = r as i64;
    P::monomial((r - 2) * k as i64)
        * qint(4 * k + 1, 1)
        * central(k, 1).pow(2 * r)
        * tail(n, k, 1).pow(4 * r)
}

/// `q^{(2r-4s-4)k} [4k+1]^{2s} [4k+1]_{q²}`, shared by the base-`q²` sums.
fn sq_head(r: u64, s: u64, k: u64) -> P {
    let e = 2 * r as i64 - 4 * s as i64 - 4;
    P::monomial(e * k as i64) * qint(4 * k + 1, 1).pow(2 * s as i64) * qint(4 * k + 1, 2)
}

/// `(-1)^k q^{2k²} · head · [2k,k]_{q²}^{2r-1} (-q^{2k+2};q²)^{4r-2}_{n-k-1}`
pub fn alt_4k1_sq(n: u64, r: u64, s: u64, k: u64) -> P {
    let r = r as i64;
    P::sign_power(k)
        * P::monomial(2 * (k * k) as i64)
        * sq_head(r as u64, s, k)
        * central(k, 2).pow(2 * r - 1)
        * tail(n, k, 2).pow(4 * r - 2)
}

/// `head · [2k,k]_{q²}^{2r} (-q^{2k+2};q²)^{4r}_{n-k-1}`
pub fn even_4k1_sq(n: u64, r: u64, s: u64, k: u64) -> P {
    let r = r as i64;
    sq_head(r as u64, s, k) * central(k, 2).pow(2 * r) * tail(n, k, 2).pow(4 * r)
}

/// `[3k+1] (q;q²)_k³ q^{-C(k+1,2)} / ((q;q)_k² (q²;q²)_k)`
pub fn ratio_3k1(k: u64) -> P {
    let num = qint(3 * k + 1, 1) * P::pochhammer(QPochSpec::plus(1, 2, k)).pow(3);
    let den = P::pochhammer(QPochSpec::plus(1, 1, k)).pow(2) * P::pochhammer(QPochSpec::plus(2, 2, k));
    num.div(&den).expect("nonzero pochhammer") * P::monomial(-tri(k))
}

/// `[3k+1] [2k,k]³ (-q^{k+1};q)⁴_{n-k-1} q^{-C(k+1,2)}`
pub fn central_3k1(n: u64, k: u64) -> P {
    qint(3 * k + 1, 1) * central(k, 1).pow(3) * tail(n, k, 1).pow(4) * P::monomial(-tri(k))
}

/// `(-1)^k q^{2k²} · head · ((q²;q⁴)_k/(q⁴;q⁴)_k)^{2r-1}`
pub fn ratio_alt_sq(r: u64, s: u64, k: u64) -> P {
    P::sign_power(k)
        * P::monomial(2 * (k * k) as i64)
        * sq_head(r, s, k)
        * half_ratio(k, 2).pow(2 * r as i64 - 1)
}

/// `head · ((q²;q⁴)_k/(q⁴;q⁴)_k)^{2r}`
pub fn ratio_even_sq(r: u64, s: u64, k: u64) -> P {
    sq_head(r, s, k) * half_ratio(k, 2).pow(2 * r as i64)
}

/// `q^{-C(k+1,2)} [3k+1] (q;q²)_k³ (-q;q)_k² / (q²;q²)_k³`
pub fn ratio_cubic(k: u64) -> P {
    P::monomial(-tri(k))
        * qint(3 * k + 1, 1)
        * half_ratio(k, 1).pow(3)
        * P::pochhammer(QPochSpec::minus(1, 1, k)).pow(2)
}

/// `[n]_{q^b} [2n-1, n-1]_{q^b}`
pub fn qbinom_block(n: u64, base: u64) -> P {
    qint(n, base) * P::q_binomial(2 * n - 1, n as i64 - 1, base)
}

/// `(1 + q^{b(n-1)})^e [n]_{q^b} [2n-1, n-1]_{q^b}`
pub fn binomial_modulus(n: u64, base: u64, e: i64) -> P {
    P::one_plus_q_pow(base * (n - 1)).pow(e) * qbinom_block(n, base)
}

pub fn ac_modulus(n: u64, base: u64) -> P {
    a_factored(n, base) * c_factored(n, base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigpoly::{IntPoly, LaurentPoly};

    fn expand_sum(terms: &[P]) -> LaurentPoly {
        CycloProduct::sum(terms).unwrap().to_laurent().unwrap()
    }

    #[test]
    fn two_term_sums() {
        let p = IntPoly::from_i64s;
        let s = expand_sum(&[central_3k1(2, 0), central_3k1(2, 1)]);
        assert_eq!(s, LaurentPoly::new(&p(&[1, 1]).pow(4) * &p(&[1, 1, 1]), -1));

        let s = expand_sum(&[alt_4k1_sq(2, 1, 0, 0), alt_4k1_sq(2, 1, 0, 1)]);
        let expected = &(&p(&[1, 0, 1]) * &p(&[1, 0, 1, 0, 1])) * &p(&[0, 0, 0, 0, -1]);
        assert_eq!(s, LaurentPoly::from(expected));

        // (1+x)^4 + x^{-1}(1+x)^2[5]_x = x^{-1}(1+x)^2(1+x+x^2)^2 with x = q²
        let s = expand_sum(&[even_4k1_sq(2, 1, 0, 0), even_4k1_sq(2, 1, 0, 1)]);
        let expected = &p(&[1, 0, 1]).pow(2) * &p(&[1, 0, 1, 0, 1]).pow(2);
        assert_eq!(s, LaurentPoly::new(expected, -2));
    }

    #[test]
    fn ratio_weights_reduce_like_central_binomials() {
        // (q²;q⁴)_k/(q⁴;q⁴)_k = [2k,k]_{q²} / (-q²;q²)_k²
        for k in 0..15 {
            let rhs = central(k, 2)
                .div(&P::pochhammer(QPochSpec::minus(2, 2, k)).pow(2))
                .unwrap();
            assert_eq!(half_ratio(k, 2), rhs);
        }
    }
}

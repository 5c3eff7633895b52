use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPoly;

/// Primitive gcd of `a` and `b` with positive leading coefficient.
///
/// Runs the primitive polynomial remainder sequence: each pseudo-remainder is
/// reduced to its primitive part before the next step, which keeps
/// coefficient growth polynomial. Integer content is discarded, so
/// `gcd(a, 0)` is the primitive part of `a`.
///
/// Panics when both inputs are zero.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "gcd of two zero polynomials is undefined"
    );
    let mut x = a.primitive_part();
    let mut y = b.primitive_part();
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        if y.degree() == Some(0) {
            return IntPoly::one();
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = r.primitive_part();
    }
    x.primitive_part()
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`, computed without fractions.
pub fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo-division by zero");
    let Some(da) = a.degree() else {
        return IntPoly::zero();
    };
    if da < db {
        return a.clone();
    }
    let lb = b.leading().expect("nonzero divisor");
    if lb.abs().is_one() {
        return a.div_rem_unit(b).expect("unit leading coefficient").1;
    }
    let bc = b.coeffs();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    for i in (db..=da).rev() {
        let top = std::mem::take(&mut r[i]);
        for c in r[..i].iter_mut() {
            *c *= lb;
        }
        if top.is_zero() {
            continue;
        }
        for j in 0..db {
            if !bc[j].is_zero() {
                r[i - db + j] -= &top * &bc[j];
            }
        }
    }
    r.truncate(db);
    IntPoly::new(r)
}

/// Whether `gcd(a, b)` is a nonzero constant.
///
/// Tries a Euclidean run modulo a 61-bit prime first: if neither leading
/// coefficient vanishes there and the modular gcd is constant, the integer
/// gcd is constant too. Otherwise falls back to [`poly_gcd`].
pub fn coprime(a: &IntPoly, b: &IntPoly) -> bool {
    if a.is_zero() && b.is_zero() {
        return false;
    }
    if modular_gcd_is_constant(a, b) {
        return true;
    }
    let g = poly_gcd(a, b);
    g.degree() == Some(0) && g.leading().is_some_and(Signed::is_positive)
}

const P61: u64 = (1 << 61) - 1;

fn reduce_mod_p(a: &IntPoly) -> Vec<u64> {
    let p = BigInt::from(P61);
    let mut v: Vec<u64> = a
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p);
            r.to_u64().expect("residue fits in u64")
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul_mod(x: u64, y: u64) -> u64 {
    ((x as u128 * y as u128) % P61 as u128) as u64
}

fn inv_mod(x: u64) -> u64 {
    let (mut base, mut e, mut acc) = (x, P61 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

fn modular_gcd_is_constant(a: &IntPoly, b: &IntPoly) -> bool {
    let mut x = reduce_mod_p(a);
    let mut y = reduce_mod_p(b);
    if x.len() != a.coeffs().len() || y.len() != b.coeffs().len() {
        return false;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        match y.len() {
            0 => return x.len() == 1,
            1 => return true,
            _ => {}
        }
        let inv = inv_mod(*y.last().unwrap());
        let dy = y.len() - 1;
        while x.len() >= y.len() {
            let top = mul_mod(*x.last().unwrap(), inv);
            let shift = x.len() - y.len();
            for (j, &c) in y.iter().enumerate() {
                let sub = mul_mod(top, c);
                let slot = &mut x[shift + j];
                *slot = if *slot >= sub { *slot - sub } else { *slot + P61 - sub };
            }
            debug_assert_eq!(x.last(), Some(&0));
            while x.last() == Some(&0) {
                x.pop();
            }
            if x.len() <= dy && x.len() < y.len() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
}

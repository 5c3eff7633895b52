use num_bigint::BigInt;
use num_rational::BigRational;

use qcong::bigpoly::{coprime, IntPoly};
use qcong::congruence::eval_at_one;
use qcong::cyclofactor::{CycloProduct, CycloTable};
use qcong::families::summands::{alt_4k1, alt_4k1_sq, binomial_modulus, even_4k1, even_4k1_sq};
use qcong::families::{
    modulus, sum_4k1, terms, verify_family, verify_family_factorwise, verify_half_sum,
    verify_pair_cancellation, Family, HalfSum, NuRecipe, NuSequence,
};
use qcong::qkit::binomial;
use qcong::report::FamilyParams;

fn fp(n: u64, r: u64, s: u64) -> FamilyParams {
    FamilyParams::default().with_n(n).with_r(r).with_s(s)
}

#[test]
fn base_q_sums_become_the_q_squared_sums_at_s_zero() {
    for n in 2..=8 {
        for r in 1..=3 {
            for k in 0..n {
                assert_eq!(alt_4k1(n, r, k).substitute_power(2), alt_4k1_sq(n, r, 0, k));
                assert_eq!(even_4k1(n, r, k).substitute_power(2), even_4k1_sq(n, r, 0, k));
            }
            let e = 2 * r as i64 - 2;
            assert_eq!(binomial_modulus(n, 1, e).substitute_power(2), binomial_modulus(n, 2, e));
            let plain = CycloProduct::sum(&terms(Family::Alt4k1, &fp(n, r, 0)).unwrap()).unwrap();
            let squared = CycloProduct::sum(&terms(Family::Alt4k1Sq, &fp(n, r, 0)).unwrap()).unwrap();
            assert_eq!(
                plain.to_laurent().unwrap().substitute_power(2),
                squared.to_laurent().unwrap(),
                "n={n} r={r}"
            );
        }
    }
}

fn at_one(family: Family, params: &FamilyParams) -> BigRational {
    let frac = CycloProduct::sum(&terms(family, params).unwrap()).unwrap();
    eval_at_one(&frac).unwrap()
}

#[test]
fn q_to_one_recovers_the_integer_sums() {
    // (-q^{2k+2};q²)_{n-k-1} -> 2^{n-k-1}, so the alternating sum picks up
    // (-1)^{n-1} against (-4)^{(2r-1)(n-k-1)}
    for n in 2..=12u64 {
        for r in 1..=3u64 {
            for s in 0..=2u64 {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                let alt = at_one(Family::Alt4k1Sq, &fp(n, r, s));
                let want = BigInt::from(sign) * sum_4k1(n, 2 * r - 1, s);
                assert_eq!(alt, BigRational::from_integer(want), "alt n={n} r={r} s={s}");
                let even = at_one(Family::Even4k1Sq, &fp(n, r, s));
                assert_eq!(even, BigRational::from_integer(sum_4k1(n, 2 * r, s)), "even n={n} r={r} s={s}");
            }
        }
    }
}

#[test]
fn modulus_at_one_matches_the_integer_modulus() {
    for n in 2..=12u64 {
        for r in 1..=3u64 {
            let m = modulus(Family::Alt4k1Sq, &fp(n, r, 0)).unwrap().expand().unwrap();
            let want = BigInt::from(2).pow(2 * r as u32 - 2) * n * binomial(2 * n - 1, n as i64 - 1);
            assert_eq!(m.eval_at_one(), want, "n={n} r={r}");
        }
    }
}

#[test]
fn factorwise_agrees_with_the_product_check() {
    let t = CycloTable::new();
    let q_families = [
        Family::Alt4k1,
        Family::Even4k1,
        Family::Alt4k1Sq,
        Family::Even4k1Sq,
        Family::Central3k1,
        Family::RatioAltSq,
        Family::RatioEvenSq,
        Family::RatioCubic,
    ];
    for n in 2..=10 {
        for f in q_families {
            let params = fp(n, 2, 1);
            let whole = verify_family(f, &params, &t).unwrap();
            let parts = verify_family_factorwise(f, &params, &t).unwrap();
            assert_eq!(whole.holds, parts.holds, "{f} n={n}");
            assert!(whole.holds, "{f} n={n}");
        }
    }
}

#[test]
fn nu_terms_are_integral_at_every_small_odd_d() {
    let t = CycloTable::new();
    for recipe in NuRecipe::ALL {
        let nu = NuSequence::new(recipe, 1, 0).unwrap();
        let terms: Vec<IntPoly> = (0..=20).map(|k| nu.term_ratfun(k).unwrap().den().clone()).collect();
        for d in (3..=15u64).step_by(2) {
            let m = t.get(d).substitute_power(recipe.base() as usize);
            for (k, den) in terms.iter().enumerate() {
                assert!(coprime(den, &m), "{recipe:?} d={d} k={k}");
            }
        }
    }
}

#[test]
fn pair_cancellation_implies_the_half_sum_vanishes() {
    let t = CycloTable::new();
    for d in (3..=11).step_by(2) {
        for r in 1..=2 {
            for s in 0..=1 {
                let pairs = (0..=(d - 1) / 2)
                    .all(|k| verify_pair_cancellation(d, k, r, s, &t).unwrap().holds);
                assert!(pairs, "d={d} r={r} s={s}");
                assert!(verify_half_sum(HalfSum::Alternating, d, r, s, &t).unwrap().holds);
            }
        }
    }
}

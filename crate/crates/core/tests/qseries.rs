use qcong::bigpoly::RatFun;
use qcong::cyclofactor::CycloProduct;
use qcong::qkit::{q_binomial, q_integer, q_pochhammer, QPochSpec};

fn qfact(n: u64) -> qcong::bigpoly::IntPoly {
    q_pochhammer(QPochSpec::plus(1, 1, n))
}

#[test]
fn q_binomial_is_the_reduced_factorial_quotient() {
    for n in 1..=12 {
        for k in 0..n {
            let den = &qfact(k) * &qfact(n - k);
            let f = RatFun::reduce(qfact(n), den).unwrap();
            assert!(f.is_polynomial(), "n={n} k={k}");
            assert_eq!(f.num(), &q_binomial(n, k as i64, 1).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn factored_and_dense_constructions_agree() {
    for n in 1..=12u64 {
        for base in 1..=2u64 {
            assert_eq!(CycloProduct::q_integer(n, base).expand().unwrap(), q_integer(n, base));
            for k in 0..=n as i64 {
                assert_eq!(
                    CycloProduct::q_binomial(n, k, base).expand().unwrap(),
                    q_binomial(n, k, base).unwrap()
                );
            }
            let minus = QPochSpec::minus(base, base, n);
            assert_eq!(CycloProduct::pochhammer(minus).expand().unwrap(), q_pochhammer(minus));
        }
    }
}

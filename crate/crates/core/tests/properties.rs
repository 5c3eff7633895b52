mod common;

use common::{run_suite, SUITES};

fn suite(name: &str) {
    let s = SUITES.iter().find(|s| s.name == name).expect("known suite");
    if let Err(e) = run_suite(s) {
        panic!("{name}: {e}");
    }
}

#[test]
fn ring_axioms() {
    suite("ring-axioms");
}

#[test]
fn division_round_trip() {
    suite("division-round-trip");
}

#[test]
fn q_binomials_follow_pascal() {
    suite("q-pascal-oracle");
}

#[test]
fn cyclotomics_multiply_to_q_pow_minus_one() {
    suite("phi-product");
}

#[test]
fn d_sets_factor_q_binomials() {
    suite("d-set-factorization");
}

#[test]
fn s_set_is_odd_part_of_d_set() {
    suite("s-d-odd-part");
}

#[test]
fn laurent_shift_preserves_divisibility() {
    suite("laurent-shift");
}

#[test]
fn divides_agrees_with_monic_remainder() {
    suite("divides-vs-rem");
}

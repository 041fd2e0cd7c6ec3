//! Randomized property suite for the a-priori size bounds.
//!
//! Every computed object is measured and compared against the bound
//! evaluators on the measured input sizes; a single violation fails the
//! suite.

mod common;

use orecl::DEFAULT_SEED;

#[test]
fn height_axioms_hold() {
    let n = common::check_height_axioms(1000, DEFAULT_SEED);
    assert_eq!(n, 1000);
}

#[test]
fn operator_product_bound_holds() {
    let n = common::check_op_mul_bound(500, DEFAULT_SEED);
    assert_eq!(n, 500);
}

#[test]
fn rising_factorial_bound_holds() {
    let n = common::check_rising_factorial_bound(500, DEFAULT_SEED);
    assert_eq!(n, 500);
}

#[test]
fn kernel_vector_bounds_hold() {
    let n = common::check_kernel_vector_bounds(500, DEFAULT_SEED);
    assert_eq!(n, 500);
}

#[test]
fn extended_ring_product_bounds_hold() {
    let n = common::check_mpoly_mul_bounds(500, DEFAULT_SEED);
    assert_eq!(n, 500);
}

#[test]
fn partial_action_bounds_hold() {
    let n = common::check_partial_action_bounds(500, DEFAULT_SEED);
    assert_eq!(n, 500);
}

#[test]
fn normal_form_matches_rewriting_oracle() {
    let n = common::check_normal_form_oracle(100, DEFAULT_SEED);
    assert_eq!(n, 100);
}

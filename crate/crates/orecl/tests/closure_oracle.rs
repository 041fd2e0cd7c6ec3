//! End-to-end oracle: randomized closure computations checked against
//! exact solution streams.
//!
//! Each case builds random operators, runs one of the five closure
//! constructions, and verifies the output operator against 50 terms of
//! power-series or sequence solutions of the inputs.

mod common;

use orecl::DEFAULT_SEED;

#[test]
fn random_closures_verify_against_streams() {
    let n = common::check_random_closures(100, DEFAULT_SEED);
    assert_eq!(n, 100);
}

//! One test per acceptance criterion; each prints a single PASS/FAIL line.
//! Run with `cargo test -p matlis --test acceptance -- --nocapture` to see them.

use matlis::suite::run_criterion;

fn check(number: usize) {
    let report = run_criterion(number, 0);
    println!("{report}");
    assert!(report.passed, "{report}");
}

#[test]
fn criterion_01_string_duality() {
    check(1);
}

#[test]
fn criterion_02_double_dual_unit() {
    check(2);
}

#[test]
fn criterion_03_socle_filtration() {
    check(3);
}

#[test]
fn criterion_04_endomorphism_truncation() {
    check(4);
}

#[test]
fn criterion_05_krull_schmidt() {
    check(5);
}

#[test]
fn criterion_06_duality_swaps_chain_conditions() {
    check(6);
}

#[test]
fn criterion_07_artinian_by_noetherian_split() {
    check(7);
}

#[test]
fn criterion_08_band_modules() {
    check(8);
}

#[test]
fn criterion_09_dvr_catalog() {
    check(9);
}

#[test]
fn criterion_10_parser_robustness() {
    check(10);
}

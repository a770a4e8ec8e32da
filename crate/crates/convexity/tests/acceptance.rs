//! End-to-end acceptance checks, one per criterion.  Each test prints a
//! single ledger line before asserting, so a full run reads as a checklist.

use convexity::report::{self, CriterionResult};

fn check(r: CriterionResult) {
    println!(
        "[{}] criterion {}: {} — {}",
        if r.passed { "PASS" } else { "FAIL" },
        r.id,
        r.name,
        r.detail
    );
    assert!(r.passed, "criterion {} failed: {}", r.id, r.detail);
}

#[test]
fn criterion_01_closed_sets() {
    check(report::criterion_closed_sets());
}

#[test]
fn criterion_02_subdivision() {
    check(report::criterion_subdivision());
}

#[test]
fn criterion_03_reflected_sphere() {
    check(report::criterion_reflected_sphere());
}

#[test]
fn criterion_04_order_complex_equality() {
    check(report::criterion_order_complex_equality());
}

#[test]
fn criterion_05_q_eulerian() {
    check(report::criterion_q_eulerian());
}

#[test]
fn criterion_06_fibers() {
    check(report::criterion_fibers());
}

#[test]
fn criterion_07_flag_identity() {
    check(report::criterion_flag_identity());
}

#[test]
fn criterion_08_enriched_counts() {
    check(report::criterion_enriched_counts());
}

#[test]
fn criterion_09_polynomial_identities() {
    check(report::criterion_polynomial_identities());
}

#[test]
fn criterion_10_extension() {
    check(report::criterion_extension());
}

#[test]
fn criterion_11_real_rootedness() {
    check(report::criterion_real_rootedness());
}

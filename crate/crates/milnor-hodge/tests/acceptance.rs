//! Acceptance gate: one test per criterion, each printing a pass/fail line
//! and failing loudly with the suite's notes if any check regressed.

use milnor_hodge::verify::{self, SuiteReport};

fn gate(criterion: usize, suite: SuiteReport) {
    let status = if suite.ok() { "pass" } else { "FAIL" };
    println!(
        "criterion {criterion} ({}): {status} ({} passed, {} failed)",
        suite.name, suite.passed, suite.failed
    );
    assert!(
        suite.ok(),
        "criterion {criterion} ({}) failed:\n{}",
        suite.name,
        suite.notes.join("\n")
    );
}

#[test]
fn criterion_1_spectrum_mass_and_symmetry() {
    gate(1, verify::suite_spectrum());
}

#[test]
fn criterion_2_chi_y_euler_specialization() {
    gate(2, verify::suite_chi_euler());
}

#[test]
fn criterion_3_signature_golden_set() {
    gate(3, verify::suite_signature_goldens());
}

#[test]
fn criterion_4_rhm_signature_agreement() {
    gate(4, verify::suite_rhm_signature());
}

#[test]
fn criterion_5_du_bois_booleans() {
    gate(5, verify::suite_du_bois());
}

#[test]
fn criterion_6_projective_degree_invariants() {
    gate(6, verify::suite_projective());
}

#[test]
fn criterion_7_palindromicity() {
    gate(7, verify::suite_palindromicity());
}

#[test]
fn criterion_8_stratified_calculus() {
    gate(8, verify::suite_stratified());
}

#[test]
fn criterion_9_quadric_family() {
    gate(9, verify::suite_quadric_family());
}

//! Acceptance suite: each numbered case runs one pinned criterion end to
//! end through `verify`, so the harness output carries one pass/fail line
//! per criterion. Tolerances and budgets live in the checks themselves.

use isospectral::verify;

fn assert_check(result: verify::CheckResult) {
    println!(
        "{} {:<26} {}",
        if result.passed { "PASS" } else { "FAIL" },
        result.name,
        result.detail
    );
    assert!(result.passed, "{}: {}", result.name, result.detail);
}

#[test]
fn criterion_01_splitting_example() {
    assert_check(verify::check_splitting_example());
}

#[test]
fn criterion_02_round_trip() {
    assert_check(verify::check_round_trip());
}

#[test]
fn criterion_03_flip_identity() {
    assert_check(verify::check_flip_identity());
}

#[test]
fn criterion_04_blowup_inverse_pair() {
    assert_check(verify::check_blowup_inverse_pair());
}

#[test]
fn criterion_05_lattice_isomorphism() {
    assert_check(verify::check_lattice_isomorphism());
}

#[test]
fn criterion_06_face_counts() {
    assert_check(verify::check_face_counts());
}

#[test]
fn criterion_07_euler_characteristics() {
    assert_check(verify::check_euler_characteristics());
}

#[test]
fn criterion_08_surface_d3() {
    assert_check(verify::check_surface_d3());
}

#[test]
fn criterion_09_petrie_polygon() {
    assert_check(verify::check_petrie_polygon());
}

#[test]
fn criterion_10_degeneration_entries() {
    assert_check(verify::check_degeneration_entries());
}

/// The full suite, module invariants included: `verify` must be green as a
/// whole, since a green run is what the command-line front end reports.
#[test]
fn full_property_suite() {
    let results = verify::run_all();
    for r in &results {
        println!(
            "{} {:<26} {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    assert!(results.iter().all(|r| r.passed));
}

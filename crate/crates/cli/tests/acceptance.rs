//! Acceptance battery: every check recomputes a desk-scale result
//! exhaustively and compares it against its closed form or stated value.
//! One test per criterion; each prints a PASS/FAIL line with the expected
//! and observed values (visible with --nocapture).

use rankcode_cli::verify::{self, Check};

fn assert_check(check: Check) {
    println!(
        "{} {} | expected: {} | observed: {}",
        if check.pass { "PASS" } else { "FAIL" },
        check.name,
        check.expected,
        check.observed
    );
    assert!(check.pass, "{}: expected {}, observed {}", check.name, check.expected, check.observed);
}

#[test]
fn constant_rank_3_1_2_is_7() {
    assert_check(verify::constant_rank_3_1_2());
}

#[test]
fn constant_rank_4_2_4_is_5() {
    assert_check(verify::constant_rank_4_2_4());
}

#[test]
fn constant_rank_families_match_closed_forms() {
    assert_check(verify::constant_rank_families());
}

#[test]
fn frobenius_4_2_reaches_distance_3() {
    assert_check(verify::gabidulin_4_2_distance());
}

#[test]
fn spectrum_formula_matches_enumeration() {
    assert_check(verify::spectrum_vs_enumeration());
}

#[test]
fn divisors_classify_frobenius_codes() {
    assert_check(verify::divisibility_classification());
}

#[test]
fn circulant_norm_equals_gcd_complement() {
    assert_check(verify::circulant_norm_theorem());
}

#[test]
fn repetition_covering_radius_is_n_minus_1() {
    assert_check(verify::repetition_covering_radii());
}

#[test]
fn covering_bounds_hold_on_random_codes() {
    assert_check(verify::covering_bounds_random_codes());
}

#[test]
fn fold_invariance_and_product_bound() {
    assert_check(verify::fold_and_product_covering());
}

#[test]
fn sphere_bound_dominated_by_exhaustive_minima() {
    assert_check(verify::sphere_bound_exhaustive());
}

#[test]
fn parity_condition_pipeline_builds_amrd_codes() {
    assert_check(verify::parity_condition_pipeline());
}

#[test]
fn rank_metric_corrects_more_than_hamming() {
    assert_check(verify::rank_vs_hamming_comparison());
}

#[test]
fn fuzzy_decoding_agrees_with_nearest_codeword() {
    assert_check(verify::fuzzy_membership_and_decoding());
}

#[test]
fn ensembles_aggregate_componentwise() {
    assert_check(verify::ensemble_componentwise_equivalence());
}

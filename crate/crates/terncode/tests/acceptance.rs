//! Acceptance suite: every criterion runs at its stated budget and prints
//! one line per check (`cargo test --test acceptance -- --nocapture`).
//! All comparisons inside the checks are exact integer comparisons.

use std::time::{Duration, Instant};
use terncode::verify::{self, Check};

const SEED: u64 = 0xA11CE;

fn assert_all(checks: Vec<Check>, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    let mut failed = Vec::new();
    for c in &checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} — {}", c.name, c.detail);
        if !c.passed {
            failed.push(c.name.clone());
        }
    }
    println!("elapsed {elapsed:.2?} (budget {budget:.2?})");
    assert!(failed.is_empty(), "failed checks: {failed:?}");
    assert!(elapsed < budget, "ran {elapsed:.2?}, budget {budget:.2?}");
}

/// Parseval and the autocorrelation identity (both branches) hold exactly
/// for 100 random functions at each n in 3..=6, and the fast transform
/// agrees with the naive one on the same corpus.
#[test]
fn criterion_1_walsh_identities() {
    let started = Instant::now();
    let checks = verify::walsh_identity_checks(&[3, 4, 5, 6], 100, SEED);
    assert_all(checks, started, Duration::from_secs(30));
}

/// The bent construction at n = 6, m in {2, 3} reproduces the exact
/// weight distribution {0:1, 486:728, 468:(3^m-1)*261, 495:(3^m-1)*468},
/// with confirmed dimension n + m and the AB condition satisfied.
#[test]
fn criterion_2_bent_weight_tables() {
    let started = Instant::now();
    let checks = verify::bent_table_checks();
    assert_all(checks, started, Duration::from_secs(60));
}

/// The dummy-extended construction at n = 7, m = 2, s = 1 reproduces its
/// exact frequencies and d = 3^7 - 3^6 - 3^4 + 3^3 = 1404.
#[test]
fn criterion_3_plateaued_weight_table() {
    let started = Instant::now();
    let checks = verify::plateaued_table_checks();
    assert_all(checks, started, Duration::from_secs(120));
}

/// The indicator-quadratic seed's 2Re multiset matches the closed form
/// exactly for (n, r) in {(6, 2), (7, 3)}.
#[test]
fn criterion_4_indicator_spectrum() {
    let started = Instant::now();
    let checks = verify::indicator_spectrum_checks();
    assert_all(checks, started, Duration::from_secs(60));
}

/// On >= 50 random functions with non-affine components (n in {3, 4},
/// m in {1, 2}), the exhaustive covering oracle, the Walsh
/// characterization and the weight-identity criterion agree 100%.
#[test]
fn criterion_5_differential_minimality() {
    let started = Instant::now();
    let checks = verify::differential_checks(4, 52, SEED);
    let agreement: Vec<Check> =
        checks.into_iter().filter(|c| c.name.contains("oracle_agreement")).collect();
    assert_eq!(agreement.len(), 1);
    assert_all(agreement, started, Duration::from_secs(600));
}

/// End-to-end AB-violating pipeline at (n, r, s, m) = (7, 3, 1, 2):
/// a [2186, 9, 981] code with w_max = 1701, AB violated, minimal by both
/// the composite and direct routes, and a 10^6-pair sampled covering test
/// finding no covering pair.
#[test]
fn criterion_6_ab_violating_pipeline() {
    let started = Instant::now();
    let checks = verify::ab_violation_checks(1_000_000, SEED);
    assert_all(checks, started, Duration::from_secs(900));
}

/// Identity cross-checks: the nine-term three-function Walsh identity on
/// 20 random triples at n = 4, exact block decomposition on 10 random
/// composites at n = 5, m = 3, and the plateaued-plus-indicator norm
/// bound never violated.
#[test]
fn criterion_7_identity_cross_checks() {
    let started = Instant::now();
    let checks = verify::cross_identity_checks(SEED ^ 0x9e37_79b9);
    assert_all(checks, started, Duration::from_secs(120));
}

/// Wherever the |W| < 3^n / 5 bound certifies minimality, the direct
/// check concurs — across the random corpus and the table instances.
#[test]
fn criterion_8_norm_bound_sufficiency() {
    let started = Instant::now();
    let checks = verify::differential_checks(4, 52, SEED ^ 0x5eed);
    let bound: Vec<Check> =
        checks.into_iter().filter(|c| c.name.contains("norm_bound")).collect();
    assert_eq!(bound.len(), 1);
    assert_all(bound, started, Duration::from_secs(600));
}

//! Acceptance suite: every shipped identity is exact, so each criterion is
//! an exact-equality check at pinned bounds. One test per criterion; each
//! prints a single pass/fail line (visible with `--nocapture`, and cargo's
//! own per-test lines mirror them).

use jucys::engine;
use jucys::oracle::oracle_expansion_with_guard;
use jucys::symfun::SymFun;
use jucys::verify::{
    check_catalan_tower, check_character_identities, check_fixture_series, check_jack,
    check_jucys_closed_form, check_leading_terms, check_moment_expansion, check_oracle_equivalence,
    check_phi_closed_form, check_phi_parity, check_psi_dichotomy, check_support_parity,
    check_theorem4_range, check_transition_measure, Check, DEFAULT_SEED,
};

fn report(number: u32, name: &str, checks: &[Check]) {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    if failed.is_empty() {
        println!("criterion {number:02} {name}: PASS");
    } else {
        println!("criterion {number:02} {name}: FAIL");
        for check in &failed {
            println!("    {}: {}", check.id, check.detail);
        }
    }
    assert!(failed.is_empty(), "criterion {number:02} {name} failed");
}

#[test]
fn criterion_01_jucys_closed_form() {
    let check = check_jucys_closed_form(7, false).expect("runs");
    report(1, "jucys closed form", &[check]);
}

#[test]
fn criterion_02_oracle_equivalence() {
    let mut checks = check_oracle_equivalence(6, 6, false).expect("runs");
    // spot checks at n = 7
    for k in 0..=4u32 {
        for f in [SymFun::P(k), SymFun::H(k), SymFun::Hl(k)] {
            let engine_side = engine::class_expansion_for(&f, 7).expect("engine");
            let oracle_side = oracle_expansion_with_guard(&f, 7, false).expect("oracle");
            checks.push(Check::from_outcome(
                format!("oracle-equivalence:{f}:n=7"),
                engine_side == oracle_side,
                "equal at n = 7",
                "mismatch at n = 7",
            ));
        }
    }
    report(2, "oracle equivalence", &checks);
}

#[test]
fn criterion_03_character_identity() {
    let checks = check_character_identities(9, 7).expect("runs");
    report(3, "character identity", &checks);
}

#[test]
fn criterion_04_central_character_relations() {
    let check = check_theorem4_range(7).expect("runs");
    report(4, "central character relations", &[check]);
}

#[test]
fn criterion_05_transition_measure() {
    let checks = check_transition_measure(10, 9, 8, DEFAULT_SEED).expect("runs");
    report(5, "transition measure moments", &checks);
}

#[test]
fn criterion_06_phi_closed_form() {
    let check = check_phi_closed_form(8, 13);
    report(6, "power-sum generating function closed form", &[check]);
}

#[test]
fn criterion_07_moment_expansion() {
    let check = check_moment_expansion(8, 7).expect("runs");
    report(7, "moment class expansions", &[check]);
}

#[test]
fn criterion_08_catalan_tower() {
    let checks = check_catalan_tower(20).expect("runs");
    report(8, "generalized Catalan tower", &checks);
}

#[test]
fn criterion_09_leading_terms() {
    let check = check_leading_terms(9).expect("runs");
    report(9, "leading-stratum closed forms", &[check]);
}

#[test]
fn criterion_10_support_parity() {
    let check = check_support_parity(10);
    report(10, "support and parity", &[check]);
}

#[test]
fn criterion_11_fixture_series_mandatory() {
    let check = check_fixture_series(&[2, 3, 4, 5], 13).expect("runs");
    report(11, "transcribed series fixtures (weights 2..5)", &[check]);
}

#[test]
fn criterion_11_fixture_series_extended() {
    let check = check_fixture_series(&[6, 7], 11).expect("runs");
    report(11, "transcribed series fixtures (weights 6, 7)", &[check]);
}

#[test]
fn criterion_12_jack() {
    let checks = check_jack(8, 10).expect("runs");
    report(12, "jack family", &checks);
}

#[test]
fn criterion_13_psi_dichotomy() {
    let check = check_psi_dichotomy(6, 13).expect("runs");
    report(13, "schur-side hook dichotomy", &[check]);
}

#[test]
fn phi_parity_support() {
    // Companion to criterion 10 on the generating-function side.
    let check = check_phi_parity(7, 13);
    report(10, "generating-function parity", &[check]);
}

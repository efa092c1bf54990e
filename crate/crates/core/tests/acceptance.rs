//! Acceptance suite: every release criterion, one test per criterion,
//! printing a pass/fail line each. All comparisons are exact integer
//! equality; there are no tolerances anywhere.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use fundstring::formulas::mult_string;
use fundstring::verify::{
    check_a_cell, check_fusion_cell, check_genfunc_cell, check_spin_cell, check_split_cell,
    check_string_cell, CellReport,
};
use fundstring::weights::{ballot, binom, Family, LieType, StringLabel, Weight};

fn assert_cells(criterion: &str, reports: Vec<CellReport>) {
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    let mismatches: u64 = reports.iter().map(|r| r.mismatches).sum();
    let verdict = if mismatches == 0 { "pass" } else { "FAIL" };
    println!("{criterion}: {verdict} ({checked} checks, {mismatches} mismatches)");
    for report in &reports {
        for example in &report.examples {
            eprintln!("  {}: {example}", report.name);
        }
    }
    assert_eq!(mismatches, 0, "{criterion} found mismatches");
    assert!(checked > 0, "{criterion} checked nothing");
}

#[test]
fn criterion_1_string_formula_oracle_equivalence() {
    let mut reports = Vec::new();
    for family in [Family::B, Family::C, Family::D] {
        for n in 2..=4usize {
            let lie = LieType::new(family, n).unwrap();
            for k in 0..=6i64 {
                for p in 1..=n {
                    reports.push(check_string_cell(lie, k, p));
                }
            }
        }
    }
    assert_cells("criterion 1 (string formulas vs oracle)", reports);
}

#[test]
fn criterion_2_spin_formula_equivalence() {
    let mut reports = Vec::new();
    for family in [Family::B, Family::D] {
        for n in 2..=4usize {
            let lie = LieType::new(family, n).unwrap();
            for k in 0..=6i64 {
                reports.push(check_spin_cell(lie, k));
            }
        }
    }
    assert_cells("criterion 2 (spin formulas vs oracle)", reports);
}

#[test]
fn criterion_3_family_a_equivalence() {
    let mut reports = Vec::new();
    for n in 1..=4usize {
        for k in 0..=6i64 {
            for p in 1..=n {
                reports.push(check_a_cell(n, k, p));
            }
        }
    }
    assert_cells("criterion 3 (family A equivalence, all orderings)", reports);
}

// Criteria 4 (dimension closure) and 5 (constancy on one-norm/zero-count
// classes) are folded into every string, A and spin cell; this test keeps
// them visible as their own pass lines over the criterion-1 ranges.
#[test]
fn criterion_4_and_5_dimension_closure_and_class_invariance() {
    let mut reports = Vec::new();
    for family in [Family::B, Family::C, Family::D] {
        let lie = LieType::new(family, 3).unwrap();
        for k in 0..=4i64 {
            for p in 1..=3usize {
                reports.push(check_string_cell(lie, k, p));
            }
        }
    }
    assert_cells(
        "criteria 4+5 (dimension closure, class invariance)",
        reports,
    );
}

#[test]
fn criterion_6_fusion_and_inversion_identities() {
    let mut reports = Vec::new();
    for family in [Family::B, Family::C, Family::D] {
        for n in 2..=3usize {
            let lie = LieType::new(family, n).unwrap();
            for k in 0..=4i64 {
                for p in 1..n {
                    reports.push(check_fusion_cell(lie, k, p));
                }
            }
        }
    }
    assert_cells("criterion 6 (fusion and inversion identities)", reports);
}

#[test]
fn criterion_7_top_splitting() {
    let mut reports = Vec::new();
    for n in 2..=3usize {
        for k in 0..=4i64 {
            reports.push(check_split_cell(n, k));
        }
    }
    assert_cells("criterion 7 (top splitting)", reports);
}

#[test]
fn criterion_8_generating_function() {
    let mut reports = Vec::new();
    for n in 2..=4usize {
        reports.push(check_genfunc_cell(n, 12));
    }
    assert_cells("criterion 8 (generating function)", reports);
}

#[test]
fn criterion_9_combinatorial_identities() {
    let mut checked = 0u64;
    for m in 0..=60i64 {
        for t in 0..=60i64 {
            let b = ballot(m, t);
            assert!(b >= BigInt::zero(), "ballot({m},{t}) negative");
            // rational form: (m+1) binom(m+2t, t) = ballot * (m+t+1),
            // which also states the divisibility
            let lhs = BigInt::from(binom(m + 2 * t, t)) * BigInt::from(m + 1);
            assert_eq!(lhs, b * BigInt::from(m + t + 1), "ballot({m},{t})");
            checked += 1;
        }
    }
    for n in 1..=40i64 {
        for r in 0..=40i64 {
            let sum: BigInt = (0..=r)
                .map(|s| BigInt::from(binom(s + n - 1, n - 1)))
                .sum();
            assert_eq!(sum, BigInt::from(binom(r + n, n)), "hockey stick n={n} r={r}");
            checked += 1;
        }
    }
    println!("criterion 9 (combinatorial identities): pass ({checked} checks)");
}

#[test]
fn criterion_10_large_rank_performance() {
    // family C, rank 200, k = 10^6, p = 10, a weight inside the support
    let lie = LieType::new(Family::C, 200).unwrap();
    let k = 1_000_000i64;
    let p = 10usize;
    let label = StringLabel::string(lie, k, p).unwrap();
    let mut coords = vec![0i64; 200];
    for (i, c) in coords.iter_mut().enumerate().take(100) {
        *c = if i % 2 == 0 { 3 } else { -2 };
    }
    let mu = Weight::integral(&coords);
    assert!(mu.one_norm_twice() / 2 <= k + p as i64);

    let start = Instant::now();
    let value = mult_string(&label, &mu);
    let elapsed = start.elapsed();

    assert!(!value.is_zero());
    assert!(value > num_bigint::BigUint::one());
    println!(
        "criterion 10 (large-rank closed form): pass ({} digits in {elapsed:?})",
        value.to_string().len()
    );
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "closed-form evaluation took {elapsed:?}, budget is 1s"
    );
}

//! The `verify` subcommand: runs the closed-form vs oracle cell checks
//! over user-selected ranges, fanning cells out to worker threads and
//! assembling a deterministic report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde_json::json;

use fundstring::verify::{
    check_a_cell, check_fusion_cell, check_genfunc_cell, check_spin_cell, check_split_cell,
    check_string_cell, CellReport,
};
use fundstring::weights::{Family, LieType};

use crate::{OutputMode, UsageError, VerifyArgs};

enum Cell {
    String(LieType, i64, usize),
    A(usize, i64, usize),
    Spin(LieType, i64),
    Fusion(LieType, i64, usize),
    Split(usize, i64),
    Genfunc(usize),
}

impl Cell {
    fn run(&self) -> CellReport {
        match self {
            Cell::String(lie, k, p) => check_string_cell(*lie, *k, *p),
            Cell::A(n, k, p) => check_a_cell(*n, *k, *p),
            Cell::Spin(lie, k) => check_spin_cell(*lie, *k),
            Cell::Fusion(lie, k, p) => check_fusion_cell(*lie, *k, *p),
            Cell::Split(n, k) => check_split_cell(*n, *k),
            Cell::Genfunc(n) => check_genfunc_cell(*n, 12),
        }
    }
}

fn parse_families(text: &str) -> Result<Vec<Family>, UsageError> {
    let mut families = Vec::new();
    for c in text.chars() {
        let family = match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            other => {
                return Err(UsageError(format!(
                    "unknown family `{other}` in --families; expected letters from ABCD"
                )))
            }
        };
        if !families.contains(&family) {
            families.push(family);
        }
    }
    if families.is_empty() {
        return Err(UsageError("--families must name at least one family".into()));
    }
    Ok(families)
}

fn build_cells(args: &VerifyArgs) -> Result<Vec<Cell>, UsageError> {
    let mut cells = Vec::new();
    for family in parse_families(&args.families)? {
        match family {
            Family::A => {
                for n in 1..=args.max_rank {
                    for k in 0..=args.max_k {
                        for p in 1..=n {
                            cells.push(Cell::A(n, k, p));
                        }
                    }
                }
            }
            Family::B | Family::C | Family::D => {
                for n in 2..=args.max_rank.max(1) {
                    let lie = LieType::new(family, n).expect("rank >= 2");
                    for k in 0..=args.max_k {
                        for p in 1..=n {
                            cells.push(Cell::String(lie, k, p));
                        }
                        for p in 1..n {
                            cells.push(Cell::Fusion(lie, k, p));
                        }
                        if family != Family::C {
                            cells.push(Cell::Spin(lie, k));
                        }
                        if family == Family::D {
                            cells.push(Cell::Split(n, k));
                        }
                    }
                    if family == Family::D {
                        cells.push(Cell::Genfunc(n));
                    }
                }
            }
        }
    }
    if cells.is_empty() {
        return Err(UsageError(format!(
            "no cells to verify: families {} need rank >= 2, got --max-rank {}",
            args.families, args.max_rank
        )));
    }
    Ok(cells)
}

fn run_cells(cells: &[Cell], jobs: usize) -> Vec<CellReport> {
    let jobs = if jobs == 0 {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    } else {
        jobs
    };
    let jobs = jobs.min(cells.len()).max(1);
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CellReport>>> = Mutex::new(vec![None; cells.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= cells.len() {
                    break;
                }
                let report = cells[index].run();
                slots.lock().unwrap()[index] = Some(report);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("every cell ran"))
        .collect()
}

pub fn run(args: &VerifyArgs) -> Result<u8, UsageError> {
    let cells = build_cells(args)?;
    let reports = run_cells(&cells, args.jobs);
    let total_checked: u64 = reports.iter().map(|r| r.checked).sum();
    let total_mismatches: u64 = reports.iter().map(|r| r.mismatches).sum();

    match args.output {
        OutputMode::Plain => {
            for report in &reports {
                println!(
                    "{}: {} checked, {} mismatches",
                    report.name, report.checked, report.mismatches
                );
                for example in &report.examples {
                    println!("  mismatch {example}");
                }
            }
            println!("total: {total_checked} checked, {total_mismatches} mismatches");
        }
        OutputMode::Json => {
            let cells_json: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "checked": r.checked,
                        "mismatches": r.mismatches,
                        "examples": r.examples,
                    })
                })
                .collect();
            let doc = json!({
                "cells": cells_json,
                "total_checked": total_checked,
                "total_mismatches": total_mismatches,
            });
            println!("{doc}");
        }
        OutputMode::Csv => {
            println!("cell,checked,mismatches");
            for report in &reports {
                println!(
                    "{},{},{}",
                    crate::csv_quote(&report.name),
                    report.checked,
                    report.mismatches
                );
            }
        }
    }

    Ok(if total_mismatches == 0 { 0 } else { 1 })
}

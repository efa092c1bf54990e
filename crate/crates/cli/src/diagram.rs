//! The `diagram` subcommand: every weight of a representation with its
//! exact multiplicity, from the closed formulas, with a dimension footer.

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

use fundstring::formulas::{multiplicity, split_top};
use fundstring::oracle::weyl_dimension;
use fundstring::weights::{for_each_lattice_weight, Family, StringLabel, Weight};

use crate::query::{resolve_target, QueryTarget};
use crate::{csv_quote, DiagramArgs, OutputMode, UsageError};

struct Row {
    weight: Weight,
    values: Vec<BigUint>,
}

fn label_dimension(label: &StringLabel) -> BigUint {
    label
        .highest_weights()
        .iter()
        .map(|lambda| weyl_dimension(label.lie(), lambda))
        .sum()
}

/// Candidate weights covering the support of the target.
fn for_each_candidate(target: &QueryTarget, f: &mut dyn FnMut(&Weight)) {
    let lie = target.lie();
    let n = lie.rank();
    let k = target.k();
    match target {
        QueryTarget::Single(label) if lie.family() == Family::A => {
            // ambient tuples with coordinate sum k + p
            let total = k + label.p() as i64;
            let mut coords = vec![0i64; n + 1];
            fn rec(pos: usize, left: i64, coords: &mut Vec<i64>, f: &mut dyn FnMut(&Weight)) {
                if pos + 1 == coords.len() {
                    coords[pos] = left;
                    f(&Weight::integral(coords));
                    return;
                }
                for v in 0..=left {
                    coords[pos] = v;
                    rec(pos + 1, left - v, coords, f);
                }
            }
            rec(0, total, &mut coords, f);
        }
        QueryTarget::Single(label) => {
            use fundstring::weights::Variant;
            let (budget, half_odd) = match label.variant() {
                Variant::String => (2 * (k + label.p() as i64), false),
                Variant::SpinPlus | Variant::SpinMinus => (2 * k + n as i64, true),
                Variant::SplitMinus | Variant::SplitPlus => (2 * (k + n as i64), false),
            };
            for_each_lattice_weight(n, budget, half_odd, f);
        }
        QueryTarget::Pair(..) => {
            for_each_lattice_weight(n, 2 * (k + n as i64), false, f);
        }
    }
}

pub fn run(args: &DiagramArgs) -> Result<u8, UsageError> {
    let target = resolve_target(&args.rep)?;
    if !args.force && (args.rep.rank > 8 || args.rep.k > 64) {
        return Err(UsageError(format!(
            "diagram guard: rank {} and k {} exceed the desk-scale bound (rank <= 8, k <= 64); pass --force to proceed",
            args.rep.rank, args.rep.k
        )));
    }

    let mut rows: Vec<Row> = Vec::new();
    for_each_candidate(&target, &mut |mu| {
        let values = match &target {
            QueryTarget::Single(label) => vec![multiplicity(label, mu)],
            QueryTarget::Pair(lie, k) => {
                let (lo, hi) = split_top(*lie, *k, mu);
                vec![lo, hi]
            }
        };
        if values.iter().any(|v| !v.is_zero()) {
            rows.push(Row {
                weight: mu.clone(),
                values,
            });
        }
    });

    let lie = target.lie();
    rows.sort_by_cached_key(|row| {
        (
            lie.dominant_representative(&row.weight).twice().to_vec(),
            row.weight.twice().to_vec(),
        )
    });

    let columns = match &target {
        QueryTarget::Single(_) => 1,
        QueryTarget::Pair(..) => 2,
    };
    let mut totals = vec![BigUint::zero(); columns];
    for row in &rows {
        for (t, v) in totals.iter_mut().zip(&row.values) {
            *t += v;
        }
    }
    let dims: Vec<BigUint> = target.component_labels().iter().map(label_dimension).collect();
    let dims = match &target {
        QueryTarget::Single(_) => vec![dims.iter().sum::<BigUint>()],
        QueryTarget::Pair(..) => dims,
    };

    match args.output {
        OutputMode::Plain => {
            for row in &rows {
                let values: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
                println!("{} {}", row.weight, values.join(" "));
            }
            let t: Vec<String> = totals.iter().map(|v| v.to_string()).collect();
            let d: Vec<String> = dims.iter().map(|v| v.to_string()).collect();
            println!("total {} dim {}", t.join(" "), d.join(" "));
        }
        OutputMode::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let m = if row.values.len() == 1 {
                        json!(row.values[0].to_string())
                    } else {
                        json!({
                            "split-": row.values[0].to_string(),
                            "split+": row.values[1].to_string(),
                        })
                    };
                    json!({"weight": row.weight.coordinate_strings(), "multiplicity": m})
                })
                .collect();
            let totals_json: Vec<String> = totals.iter().map(|v| v.to_string()).collect();
            let dims_json: Vec<String> = dims.iter().map(|v| v.to_string()).collect();
            let doc = json!({
                "family": lie.family().to_string(),
                "rank": lie.rank(),
                "k": target.k(),
                "p": target.p(),
                "variant": args.rep.variant.tag(),
                "rows": json_rows,
                "total": if totals_json.len() == 1 { json!(totals_json[0]) } else { json!(totals_json) },
                "dimension": if dims_json.len() == 1 { json!(dims_json[0]) } else { json!(dims_json) },
            });
            println!("{doc}");
        }
        OutputMode::Csv => {
            if columns == 1 {
                println!("weight,multiplicity");
                for row in &rows {
                    println!("{},{}", csv_quote(&row.weight.to_string()), row.values[0]);
                }
            } else {
                println!("weight,multiplicity_split_minus,multiplicity_split_plus");
                for row in &rows {
                    println!(
                        "{},{},{}",
                        csv_quote(&row.weight.to_string()),
                        row.values[0],
                        row.values[1]
                    );
                }
            }
            let t: Vec<String> = totals.iter().map(|v| v.to_string()).collect();
            let d: Vec<String> = dims.iter().map(|v| v.to_string()).collect();
            println!("# total {} dim {}", t.join(" "), d.join(" "));
        }
    }

    if totals != dims {
        eprintln!(
            "error: diagram total does not match the Weyl dimension ({:?} vs {:?})",
            totals.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            dims.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
        return Ok(1);
    }
    Ok(0)
}

//! The `mult` and `dim` subcommands.

use num_bigint::BigUint;
use serde_json::json;

use fundstring::formulas::{multiplicity, split_top};
use fundstring::oracle::weyl_dimension;

use crate::query::{label_tag, parse_weight, resolve_target, QueryTarget};
use crate::{csv_quote, DimArgs, MultArgs, OutputMode, UsageError};

fn scalar_json(target: &QueryTarget, tag: &str, weight: Option<&[String]>, value: serde_json::Value, key: &str) -> serde_json::Value {
    let mut object = json!({
        "family": target.lie().family().to_string(),
        "rank": target.lie().rank(),
        "k": target.k(),
        "p": target.p(),
        "variant": tag,
    });
    if let Some(coords) = weight {
        object["weight"] = json!(coords);
    }
    object[key] = value;
    object
}

pub fn run(args: &MultArgs) -> Result<u8, UsageError> {
    let target = resolve_target(&args.rep)?;
    let mu = parse_weight(target.lie(), &args.weight)?;
    let tag = args.rep.variant.tag();
    let coords = mu.coordinate_strings();
    match &target {
        QueryTarget::Single(label) => {
            let m = multiplicity(label, &mu);
            match args.output {
                OutputMode::Plain => println!("{m}"),
                OutputMode::Json => {
                    let doc = scalar_json(
                        &target,
                        tag,
                        Some(&coords),
                        json!(m.to_string()),
                        "multiplicity",
                    );
                    println!("{doc}");
                }
                OutputMode::Csv => {
                    println!("family,rank,k,p,variant,weight,multiplicity");
                    println!(
                        "{},{},{},{},{},{},{}",
                        target.lie().family(),
                        target.lie().rank(),
                        target.k(),
                        target.p(),
                        tag,
                        csv_quote(&mu.to_string()),
                        m
                    );
                }
            }
        }
        QueryTarget::Pair(lie, k) => {
            let (lo, hi) = split_top(*lie, *k, &mu);
            match args.output {
                OutputMode::Plain => println!("{lo} {hi}"),
                OutputMode::Json => {
                    let doc = scalar_json(
                        &target,
                        tag,
                        Some(&coords),
                        json!({"split-": lo.to_string(), "split+": hi.to_string()}),
                        "multiplicity",
                    );
                    println!("{doc}");
                }
                OutputMode::Csv => {
                    println!("family,rank,k,p,variant,weight,multiplicity");
                    for (part, m) in [("split-", &lo), ("split+", &hi)] {
                        println!(
                            "{},{},{},{},{},{},{}",
                            lie.family(),
                            lie.rank(),
                            k,
                            lie.rank(),
                            part,
                            csv_quote(&mu.to_string()),
                            m
                        );
                    }
                }
            }
        }
    }
    Ok(0)
}

fn label_dimension(label: &fundstring::weights::StringLabel) -> BigUint {
    label
        .highest_weights()
        .iter()
        .map(|lambda| weyl_dimension(label.lie(), lambda))
        .sum()
}

pub fn run_dim(args: &DimArgs) -> Result<u8, UsageError> {
    let target = resolve_target(&args.rep)?;
    let tag = args.rep.variant.tag();
    let components = target.component_labels();
    let dims: Vec<BigUint> = components.iter().map(label_dimension).collect();
    match &target {
        QueryTarget::Single(_) => {
            let d = &dims[0];
            match args.output {
                OutputMode::Plain => println!("{d}"),
                OutputMode::Json => {
                    let doc = scalar_json(&target, tag, None, json!(d.to_string()), "dimension");
                    println!("{doc}");
                }
                OutputMode::Csv => {
                    println!("family,rank,k,p,variant,dimension");
                    println!(
                        "{},{},{},{},{},{}",
                        target.lie().family(),
                        target.lie().rank(),
                        target.k(),
                        target.p(),
                        tag,
                        d
                    );
                }
            }
        }
        QueryTarget::Pair(lie, k) => match args.output {
            OutputMode::Plain => println!("{} {}", dims[0], dims[1]),
            OutputMode::Json => {
                let doc = scalar_json(
                    &target,
                    tag,
                    None,
                    json!({"split-": dims[0].to_string(), "split+": dims[1].to_string()}),
                    "dimension",
                );
                println!("{doc}");
            }
            OutputMode::Csv => {
                println!("family,rank,k,p,variant,dimension");
                for (label, d) in components.iter().zip(&dims) {
                    println!(
                        "{},{},{},{},{},{}",
                        lie.family(),
                        lie.rank(),
                        k,
                        lie.rank(),
                        label_tag(label),
                        d
                    );
                }
            }
        },
    }
    Ok(0)
}

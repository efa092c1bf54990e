//! The `bench` subcommand: times closed-formula evaluation over a seeded
//! stream of random in-support weights, and the recursion oracle too when
//! the rank is small enough for it to finish.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use fundstring::formulas::mult_string;
use fundstring::oracle::freudenthal;
use fundstring::weights::{Family, LieType, StringLabel, Weight};

use crate::{BenchArgs, OutputMode, UsageError};

/// Oracle timings are only attempted where the recursion is tractable.
fn oracle_feasible(rank: usize, k: i64) -> bool {
    rank <= 5 && k <= 12
}

fn sample_weight(rng: &mut ChaCha8Rng, lie: LieType, k: i64, p: usize) -> Weight {
    let family = lie.family();
    if family == Family::A {
        // ambient composition of k + p
        let parts = lie.rank() + 1;
        let mut left = k + p as i64;
        let mut coords = Vec::with_capacity(parts);
        for i in 0..parts - 1 {
            let cap = (2 * left / (parts - i) as i64).min(left);
            let v = rng.gen_range(0..=cap.max(0));
            coords.push(v);
            left -= v;
        }
        coords.push(left);
        return Weight::integral(&coords);
    }
    let n = lie.rank();
    let budget = k + p as i64;
    let cap = (budget / n as i64).max(0);
    let mut coords: Vec<i64> = (0..n)
        .map(|_| {
            let magnitude = rng.gen_range(0..=cap);
            if rng.gen_bool(0.5) {
                -magnitude
            } else {
                magnitude
            }
        })
        .collect();
    if matches!(family, Family::C | Family::D) {
        // keep k + p - |mu| even so the evaluation exercises the sums
        let norm: i64 = coords.iter().map(|c| c.abs()).sum();
        if (budget - norm) % 2 != 0 {
            coords[0] += if coords[0] <= 0 { 1 } else { -1 };
        }
    }
    Weight::integral(&coords)
}

fn percentile(sorted: &[Duration], hundredths: usize) -> Duration {
    let index = (sorted.len().saturating_sub(1)) * hundredths / 100;
    sorted[index]
}

struct Timings {
    median: Duration,
    p95: Duration,
}

fn summarize(mut samples: Vec<Duration>) -> Timings {
    samples.sort();
    Timings {
        median: percentile(&samples, 50),
        p95: percentile(&samples, 95),
    }
}

pub fn run(args: &BenchArgs) -> Result<u8, UsageError> {
    let lie = LieType::new(args.family.into(), args.rank).map_err(UsageError::from)?;
    let label = StringLabel::string(lie, args.k, args.p).map_err(UsageError::from)?;
    if args.samples == 0 {
        return Err(UsageError("--samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let weights: Vec<Weight> = (0..args.samples)
        .map(|_| sample_weight(&mut rng, lie, args.k, args.p))
        .collect();

    let mut closed_times = Vec::with_capacity(weights.len());
    for mu in &weights {
        let start = Instant::now();
        let value = mult_string(&label, mu);
        closed_times.push(start.elapsed());
        std::hint::black_box(value);
    }
    let closed = summarize(closed_times);

    let oracle = if oracle_feasible(args.rank, args.k) {
        let lambdas = label.highest_weights();
        let mut times = Vec::with_capacity(weights.len());
        for mu in &weights {
            let start = Instant::now();
            for lambda in &lambdas {
                std::hint::black_box(freudenthal(lie, lambda, mu));
            }
            times.push(start.elapsed());
        }
        Some(summarize(times))
    } else {
        None
    };

    match args.output {
        OutputMode::Plain => {
            println!("family {} rank {} k {} p {}", lie.family(), lie.rank(), args.k, args.p);
            println!("seed {}", args.seed);
            println!("samples {}", args.samples);
            println!("closed median {:?} p95 {:?}", closed.median, closed.p95);
            match &oracle {
                Some(t) => println!("oracle median {:?} p95 {:?}", t.median, t.p95),
                None => println!("oracle skipped (rank > 5 or k > 12)"),
            }
        }
        OutputMode::Json => {
            let mut doc = json!({
                "family": lie.family().to_string(),
                "rank": lie.rank(),
                "k": args.k,
                "p": args.p,
                "seed": args.seed,
                "samples": args.samples,
                "closed_median_ns": closed.median.as_nanos() as u64,
                "closed_p95_ns": closed.p95.as_nanos() as u64,
            });
            if let Some(t) = &oracle {
                doc["oracle_median_ns"] = json!(t.median.as_nanos() as u64);
                doc["oracle_p95_ns"] = json!(t.p95.as_nanos() as u64);
            }
            println!("{doc}");
        }
        OutputMode::Csv => {
            println!("metric,value");
            println!("seed,{}", args.seed);
            println!("samples,{}", args.samples);
            println!("closed_median_ns,{}", closed.median.as_nanos());
            println!("closed_p95_ns,{}", closed.p95.as_nanos());
            if let Some(t) = &oracle {
                println!("oracle_median_ns,{}", t.median.as_nanos());
                println!("oracle_p95_ns,{}", t.p95.as_nanos());
            }
        }
    }
    Ok(0)
}

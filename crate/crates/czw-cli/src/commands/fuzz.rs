//! `czw fuzz`: randomized sweep of the trichotomy.

use serde_json::json;

use czw_core::harness::{fuzz_trichotomy, FamilySelector, FuzzConfig, FuzzSummary};
use czw_core::tolerance::{AMPLITUDE_ZERO_TOL, SEPARABILITY_TOL};

use crate::flags::{parse_angle, Flags};
use crate::{default_seed, statefile, CliError};

fn summary_json(summary: &FuzzSummary, config: &FuzzConfig) -> serde_json::Value {
    json!({
        "schema": 1,
        "type": "fuzz-summary",
        "trials": summary.trials,
        "seed": config.seed,
        "n_values": config.n_values,
        "theta_values": config.theta_values,
        "histogram": {
            "none": summary.branch_histogram[0],
            "input": summary.branch_histogram[1],
            "output": summary.branch_histogram[2],
            "input+output": summary.branch_histogram[3],
            "simplifies": summary.branch_histogram[4],
            "input+simplifies": summary.branch_histogram[5],
            "output+simplifies": summary.branch_histogram[6],
            "all": summary.branch_histogram[7],
        },
        "failures": summary.failures.len(),
    })
}

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["json"])?;
    flags.ensure_only(&["n-max", "trials", "seed", "theta"])?;
    if !flags.positional().is_empty() {
        return Err(CliError::Usage("fuzz takes no positional arguments".into()));
    }

    let n_max: usize = flags.get_parsed("n-max")?.unwrap_or(4);
    if !(2..=8).contains(&n_max) {
        return Err(CliError::Usage("--n-max must be between 2 and 8".into()));
    }
    let trials: u64 = flags.get_parsed("trials")?.unwrap_or(1000);
    let seed: u64 = flags.get_parsed("seed")?.unwrap_or_else(default_seed);
    let theta_values = match flags.get("theta") {
        None => vec![std::f64::consts::PI, std::f64::consts::FRAC_PI_2, 1.0],
        Some(list) => list
            .split(',')
            .map(parse_angle)
            .collect::<Result<Vec<_>, _>>()?,
    };

    let config = FuzzConfig {
        n_values: (2..=n_max).collect(),
        theta_values,
        families: FamilySelector::ALL.to_vec(),
        trials,
        seed,
        sep_tol: SEPARABILITY_TOL,
        zero_tol: AMPLITUDE_ZERO_TOL,
    };

    let summary = fuzz_trichotomy(&config).map_err(|e| CliError::Data(e.to_string()))?;

    if flags.switch("json") {
        // Timing never enters the JSON stream, so identical runs are
        // byte-identical.
        for failure in &summary.failures {
            println!(
                "{}",
                json!({
                    "schema": 1,
                    "type": "fuzz-failure",
                    "trial": failure.trial,
                    "seed": failure.seed,
                    "family": failure.family,
                    "n": failure.n,
                    "targets": failure.targets.to_string(),
                    "theta": failure.theta,
                    "state": statefile::serialize_state(&failure.dump.state),
                })
            );
        }
        println!("{}", summary_json(&summary, &config));
    } else {
        println!(
            "fuzz: {} trials, n ≤ {}, seed {}",
            summary.trials, n_max, seed
        );
        println!("branch histogram:");
        for (idx, count) in summary.branch_histogram.iter().enumerate() {
            if *count > 0 || idx == 0 {
                println!("  {:<12} {}", FuzzSummary::histogram_label(idx), count);
            }
        }
        println!("failures: {}", summary.failures.len());
        println!("wall time: {:.3}s", summary.wall_time.as_secs_f64());
        for failure in &summary.failures {
            eprintln!(
                "FAILURE trial {} seed {} family {} n {} targets {} theta {}",
                failure.trial,
                failure.seed,
                failure.family,
                failure.n,
                failure.targets,
                failure.theta
            );
            eprintln!("{}", statefile::serialize_state(&failure.dump.state));
        }
    }

    if summary.failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Contradiction)
    }
}

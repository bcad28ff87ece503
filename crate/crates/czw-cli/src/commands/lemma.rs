//! `czw lemma`: sample and check coefficient equation systems.

use num_complex::Complex64;
use serde_json::json;

use czw_core::lemmas::{check, remark_residual, sample_system, ConclusionBranch, LemmaArity};
use czw_core::rng::derive_seed;
use czw_core::tolerance::LEMMA_RESIDUAL_TOL;

use crate::flags::{parse_angle, Flags};
use crate::{default_seed, CliError};

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["json"])?;
    flags.ensure_only(&["arity", "eta-theta", "count", "seed"])?;
    if !flags.positional().is_empty() {
        return Err(CliError::Usage(
            "lemma takes no positional arguments".into(),
        ));
    }

    let arity = match flags.require("arity")? {
        "4" => LemmaArity::FourSets,
        "3" => LemmaArity::ThreeSets,
        "2" => LemmaArity::TwoSets,
        other => {
            return Err(CliError::Usage(format!(
                "unsupported arity {other:?}; expected 4, 3, or 2"
            )))
        }
    };
    let eta_theta = match flags.get("eta-theta") {
        Some(text) => parse_angle(text)?,
        None => std::f64::consts::PI,
    };
    let eta = Complex64::from_polar(1.0, eta_theta);
    let count: u64 = flags.get_parsed("count")?.unwrap_or(1000);
    let seed: u64 = flags.get_parsed("seed")?.unwrap_or_else(default_seed);

    let mut c_side = 0u64;
    let mut d_side = 0u64;
    let mut vacuous = 0u64;
    let mut violated = 0u64;
    let mut hypothesis_failures = 0u64;
    let mut max_residual = 0.0f64;
    let mut max_remark = 0.0f64;

    for trial in 0..count {
        let sys = sample_system(arity, eta, derive_seed(seed, trial))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let report = check(&sys, LEMMA_RESIDUAL_TOL);
        if !report.hypothesis_holds {
            hypothesis_failures += 1;
        }
        max_residual = max_residual.max(report.max_residual);
        if let Some(r) = remark_residual(&sys) {
            max_remark = max_remark.max(r);
        }
        match report.conclusion_branch {
            ConclusionBranch::CSideZero => c_side += 1,
            ConclusionBranch::DSideZero => d_side += 1,
            ConclusionBranch::Vacuous => vacuous += 1,
            ConclusionBranch::Violated => violated += 1,
        }
    }

    if flags.switch("json") {
        println!(
            "{}",
            json!({
                "schema": 1,
                "type": "lemma-summary",
                "arity": match arity {
                    LemmaArity::FourSets => 4,
                    LemmaArity::ThreeSets => 3,
                    LemmaArity::TwoSets => 2,
                },
                "eta_theta": eta_theta,
                "count": count,
                "seed": seed,
                "c_side_zero": c_side,
                "d_side_zero": d_side,
                "vacuous": vacuous,
                "violated": violated,
                "hypothesis_failures": hypothesis_failures,
                "max_residual": max_residual,
                "max_remark_residual": max_remark,
            })
        );
    } else {
        println!("lemma systems: {count} sampled, arity {arity:?}, η = e^(i·{eta_theta})");
        println!("  c-side zero: {c_side}");
        println!("  d-side zero: {d_side}");
        println!("  vacuous:     {vacuous}");
        println!("  violated:    {violated}");
        println!("  hypothesis failures: {hypothesis_failures}");
        println!("  max residual: {max_residual:.2e}");
        println!("  max remark residual: {max_remark:.2e}");
    }

    if violated == 0 && hypothesis_failures == 0 {
        Ok(())
    } else {
        Err(CliError::Contradiction)
    }
}

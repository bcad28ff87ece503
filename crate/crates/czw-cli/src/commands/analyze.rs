//! `czw analyze`: the three-branch verdict for one state.

use num_complex::Complex64;
use serde_json::json;

use czw_core::separability::SeparationCertificate;
use czw_core::simplification::SimplificationKind;
use czw_core::state::PureState;
use czw_core::strings::PartialString;
use czw_core::tolerance::{AMPLITUDE_ZERO_TOL, SEPARABILITY_TOL};
use czw_core::trichotomy::{verify_trichotomy, TrichotomyReport};

use crate::flags::{parse_angle, parse_qubit_list, Flags};
use crate::{statefile, CliError};

fn fmt_complex(z: Complex64) -> String {
    format!(
        "{:.4}{}{:.4}i",
        z.re,
        if z.im < 0.0 { "-" } else { "+" },
        z.im.abs()
    )
}

fn describe_factor(label: &str, factor: &PureState) -> String {
    let width = factor.qubit_count().max(1);
    let entries: Vec<String> = factor
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm() > 1e-12)
        .map(|(idx, z)| format!("{idx:0width$b} ↦ {}", fmt_complex(*z)))
        .collect();
    format!(
        "  factor {label} on {}: {}",
        factor.carrier(),
        entries.join(", ")
    )
}

fn print_certificate(side: &str, cert: &SeparationCertificate) {
    println!(
        "{side}      separable across ({}|{}); residual = {:.2e}",
        cert.split.a(),
        cert.split.b(),
        cert.residual
    );
    println!("{}", describe_factor("A", &cert.factor_a));
    println!("{}", describe_factor("B", &cert.factor_b));
}

fn print_report(report: &TrichotomyReport) {
    match &report.input_certificate {
        Some(cert) => print_certificate("input:", cert),
        None => println!(
            "input:      S-entangled (σ₂ = {:.4})",
            min_sigma2(&report.input_splits)
        ),
    }
    match &report.output_certificate {
        Some(cert) => print_certificate("output:", cert),
        None => println!(
            "output:     S-entangled (σ₂ = {:.4})",
            min_sigma2(&report.output_splits)
        ),
    }
    match report.simplification.kind {
        SimplificationKind::None => println!(
            "simplifies: none (smallest obstruction amplitude {:.4})",
            report.simplification.max_offending_amplitude
        ),
        SimplificationKind::FixedPoint => println!(
            "simplifies: fixed point (gate leaves the state unchanged; residual {:.2e})",
            report.simplification.max_offending_amplitude
        ),
        SimplificationKind::Reduces => println!(
            "simplifies: reduces at qubit {} (gate acts without it; residual {:.2e})",
            report.simplification.witness_index.unwrap_or(0),
            report.simplification.max_offending_amplitude
        ),
    }
    if report.holds {
        println!("trichotomy: HOLDS via {}", report.branch_label());
    } else {
        println!("trichotomy: VIOLATED (numerics bug; dump follows)");
    }
}

fn min_sigma2(splits: &[czw_core::separability::SplitDiagnostic]) -> f64 {
    splits
        .iter()
        .map(|d| d.singular_values.get(1).copied().unwrap_or(0.0))
        .fold(f64::INFINITY, f64::min)
}

fn certificate_json(cert: &SeparationCertificate) -> serde_json::Value {
    let side = |factor: &PureState| -> Vec<serde_json::Value> {
        factor
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(idx, z)| {
                json!({
                    "string": PartialString::from_index_in(factor.carrier(), idx).to_string(),
                    "re": z.re,
                    "im": z.im,
                })
            })
            .collect()
    };
    json!({
        "side_a": cert.split.a().to_string(),
        "side_b": cert.split.b().to_string(),
        "factor_a": side(&cert.factor_a),
        "factor_b": side(&cert.factor_b),
        "residual": cert.residual,
    })
}

fn report_json(report: &TrichotomyReport) -> serde_json::Value {
    let splits = |diags: &[czw_core::separability::SplitDiagnostic]| -> Vec<serde_json::Value> {
        diags
            .iter()
            .map(|d| {
                json!({
                    "side_a": d.split.a().to_string(),
                    "side_b": d.split.b().to_string(),
                    "singular_values": d.singular_values,
                })
            })
            .collect()
    };
    json!({
        "schema": 1,
        "type": "analyze",
        "input_entangled": report.input_entangled,
        "output_entangled": report.output_entangled,
        "simplifies": match report.simplification.kind {
            SimplificationKind::None => "none",
            SimplificationKind::FixedPoint => "fixed-point",
            SimplificationKind::Reduces => "reduces",
        },
        "witness_index": report.simplification.witness_index,
        "input_certificate": report.input_certificate.as_ref().map(certificate_json),
        "output_certificate": report.output_certificate.as_ref().map(certificate_json),
        "input_splits": splits(&report.input_splits),
        "output_splits": splits(&report.output_splits),
        "holds": report.holds,
        "branches": report.branch_label(),
        "counterexample": report.counterexample.as_ref().map(|dump| json!({
            "targets": dump.targets.to_string(),
            "theta": dump.theta,
            "sep_tol": dump.sep_tol,
            "zero_tol": dump.zero_tol,
            "state": statefile::serialize_state(&dump.state),
        })),
    })
}

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &["renormalize", "json"])?;
    flags.ensure_only(&["s", "theta", "tol"])?;
    let [path] = flags.positional() else {
        return Err(CliError::Usage(
            "analyze takes exactly one state-file argument".into(),
        ));
    };

    let s = parse_qubit_list(flags.require("s")?)?;
    if s.len() < 2 {
        return Err(CliError::Usage(
            "the target set must have at least two qubits (|S| ≥ 2)".into(),
        ));
    }
    let theta = parse_angle(flags.require("theta")?)?;
    let sep_tol: f64 = flags.get_parsed("tol")?.unwrap_or(SEPARABILITY_TOL);

    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::File(format!("cannot read {path}: {e}")))?;
    let psi = statefile::parse_state_file(&text, flags.switch("renormalize"))?;

    if !s.is_subset_of(psi.carrier()) {
        return Err(CliError::Usage(format!(
            "target set {s} does not fit the {}-qubit state",
            psi.qubit_count()
        )));
    }

    let report = verify_trichotomy(&psi, s, theta, sep_tol, AMPLITUDE_ZERO_TOL)
        .map_err(|e| CliError::Data(e.to_string()))?;

    if flags.switch("json") {
        println!("{}", report_json(&report));
    } else {
        print_report(&report);
    }

    if report.holds {
        Ok(())
    } else {
        if !flags.switch("json") {
            if let Some(dump) = &report.counterexample {
                eprintln!("counterexample dump:");
                eprintln!("  targets = {}, theta = {}", dump.targets, dump.theta);
                eprintln!(
                    "  tolerances: separability {:.1e}, amplitude zero {:.1e}",
                    dump.sep_tol, dump.zero_tol
                );
                eprintln!("  state:\n{}", statefile::serialize_state(&dump.state));
            }
        }
        Err(CliError::Contradiction)
    }
}

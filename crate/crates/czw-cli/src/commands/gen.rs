//! `czw gen`: write state files for the generator families.

use czw_core::harness::{generate, FamilyKind, StateFamily};
use czw_core::separability::Bipartition;
use czw_core::strings::PartialString;
use czw_core::tolerance::MAX_QUBITS;

use crate::flags::{parse_qubit_list, Flags};
use crate::{default_seed, statefile, CliError};

pub fn run(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args, &[])?;
    flags.ensure_only(&["family", "n", "s", "i", "x", "split", "seed", "out"])?;
    if !flags.positional().is_empty() {
        return Err(CliError::Usage("gen takes no positional arguments".into()));
    }

    let n: usize = flags
        .get_parsed("n")?
        .ok_or_else(|| CliError::Usage("missing required flag --n".into()))?;
    if n == 0 || n > MAX_QUBITS {
        return Err(CliError::Usage(format!(
            "--n must be between 1 and {MAX_QUBITS}"
        )));
    }
    let seed: u64 = flags.get_parsed("seed")?.unwrap_or_else(default_seed);

    let kind = match flags.require("family")? {
        "plus" => FamilyKind::PlusAll,
        "haar" => FamilyKind::Haar,
        "product" => {
            let a = parse_qubit_list(flags.require("split")?)?;
            let b = a.complement_within(n);
            let split =
                Bipartition::new(a, b).map_err(|e| CliError::Usage(format!("bad --split: {e}")))?;
            FamilyKind::Product { split }
        }
        "fixed-point" => FamilyKind::ForcedFixedPoint {
            targets: parse_qubit_list(flags.require("s")?)?,
        },
        "reduce" => {
            let targets = parse_qubit_list(flags.require("s")?)?;
            let pinned: usize = flags
                .get_parsed("i")?
                .ok_or_else(|| CliError::Usage("reduce needs --i <qubit>".into()))?;
            FamilyKind::ForcedReduce { targets, pinned }
        }
        "basis" => {
            let bits = flags.require("x")?;
            let string = PartialString::from_bitstring(bits)
                .map_err(|e| CliError::Usage(format!("bad --x: {e}")))?;
            FamilyKind::Basis { string }
        }
        other => {
            return Err(CliError::Usage(format!(
            "unknown family {other:?}; expected plus, haar, product, fixed-point, reduce, or basis"
        )))
        }
    };

    let psi =
        generate(&StateFamily { kind, seed }, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let text = statefile::serialize_state(&psi);

    match flags.get("out") {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::File(format!("cannot write {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

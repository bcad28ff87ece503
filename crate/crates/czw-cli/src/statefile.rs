//! The state file format.
//!
//! ```text
//! # an optional comment
//! n=2
//! 00 0.5 0
//! 01 0.5 0
//! 10 0.5 0
//! 11 -0.5 0
//! ```
//!
//! First non-comment line declares the qubit count; each following line
//! is a bitstring (leftmost character is qubit 1) and the real and
//! imaginary parts of its amplitude as decimal floats. Unlisted basis
//! states are zero. Serialization prints floats in shortest round-trip
//! form, so a write/read cycle reproduces amplitudes bit for bit.

use num_complex::Complex64;

use czw_core::state::{PureState, StateError};
use czw_core::strings::{PartialString, QubitSet};
use czw_core::tolerance::MAX_QUBITS;

use crate::CliError;

pub fn parse_state_file(text: &str, renormalize: bool) -> Result<PureState, CliError> {
    let mut lines = text
        .lines()
        .map(|line| match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        })
        .map(str::trim)
        .filter(|line| !line.is_empty());

    let header = lines
        .next()
        .ok_or_else(|| CliError::Data("empty state file".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| CliError::Data(format!("expected n=<count>, got {header:?}")))?
        .trim()
        .parse()
        .map_err(|_| CliError::Data(format!("bad qubit count in {header:?}")))?;
    if n == 0 || n > MAX_QUBITS {
        return Err(CliError::Data(format!(
            "qubit count {n} outside 1..={MAX_QUBITS}"
        )));
    }

    let carrier = QubitSet::full(n);
    let mut amps = vec![Complex64::ZERO; 1 << n];
    let mut seen = vec![false; 1 << n];
    for line in lines {
        let mut fields = line.split_whitespace();
        let bits = fields
            .next()
            .ok_or_else(|| CliError::Data(format!("malformed row {line:?}")))?;
        let re = fields
            .next()
            .ok_or_else(|| CliError::Data(format!("row {line:?} is missing the real part")))?;
        let im = fields
            .next()
            .ok_or_else(|| CliError::Data(format!("row {line:?} is missing the imaginary part")))?;
        if fields.next().is_some() {
            return Err(CliError::Data(format!("trailing fields in row {line:?}")));
        }
        if bits.len() != n {
            return Err(CliError::Data(format!(
                "bitstring {bits:?} has length {}, expected {n}",
                bits.len()
            )));
        }
        let string = PartialString::from_bitstring(bits).map_err(|_| {
            CliError::Data(format!("bitstring {bits:?} has characters outside 0/1"))
        })?;
        let idx = string.index_in(carrier).expect("length checked");
        if seen[idx] {
            return Err(CliError::Data(format!("duplicate bitstring {bits}")));
        }
        seen[idx] = true;
        let re: f64 = re
            .parse()
            .map_err(|_| CliError::Data(format!("bad real part {re:?}")))?;
        let im: f64 = im
            .parse()
            .map_err(|_| CliError::Data(format!("bad imaginary part {im:?}")))?;
        amps[idx] = Complex64::new(re, im);
    }

    let built = if renormalize {
        PureState::new_renormalized(carrier, amps)
    } else {
        PureState::new(carrier, amps)
    };
    built.map_err(|e| match e {
        StateError::NotNormalized { norm_sq, .. } => CliError::Data(format!(
            "state has squared norm {norm_sq}; pass --renormalize to scale it"
        )),
        other => CliError::Data(other.to_string()),
    })
}

/// Serialize a full-register state; zero amplitudes are omitted.
pub fn serialize_state(psi: &PureState) -> String {
    let n = psi.qubit_count();
    let carrier = psi.carrier();
    let mut out = format!("n={n}\n");
    for (idx, z) in psi.amplitudes().iter().enumerate() {
        if z.re == 0.0 && z.im == 0.0 {
            continue;
        }
        let string = PartialString::from_index_in(carrier, idx);
        out.push_str(&format!("{string} {} {}\n", z.re, z.im));
    }
    out
}

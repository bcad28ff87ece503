//! Minimal flag parsing shared by the subcommands.
//!
//! Flags are `--name value` pairs except for a per-command list of
//! boolean switches. Anything unrecognized is a usage error so typos
//! fail loudly with exit code 64.

use std::collections::{BTreeMap, BTreeSet};

use czw_core::strings::QubitSet;

use crate::CliError;

pub struct Flags {
    named: BTreeMap<String, String>,
    switches: BTreeSet<String>,
    positional: Vec<String>,
}

impl Flags {
    pub fn parse(args: &[String], switch_names: &[&str]) -> Result<Flags, CliError> {
        let mut named = BTreeMap::new();
        let mut switches = BTreeSet::new();
        let mut positional = Vec::new();
        let mut iter = args.iter().peekable();
        while let Some(arg) = iter.next() {
            if let Some(name) = arg.strip_prefix("--") {
                if switch_names.contains(&name) {
                    switches.insert(name.to_string());
                } else {
                    let value = iter
                        .next()
                        .ok_or_else(|| CliError::Usage(format!("--{name} needs a value")))?;
                    if named.insert(name.to_string(), value.clone()).is_some() {
                        return Err(CliError::Usage(format!("--{name} given twice")));
                    }
                }
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Flags {
            named,
            switches,
            positional,
        })
    }

    pub fn positional(&self) -> &[String] {
        &self.positional
    }

    pub fn switch(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.named.get(name).map(String::as_str)
    }

    pub fn require(&self, name: &str) -> Result<&str, CliError> {
        self.get(name)
            .ok_or_else(|| CliError::Usage(format!("missing required flag --{name}")))
    }

    pub fn get_parsed<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, CliError> {
        match self.get(name) {
            None => Ok(None),
            Some(text) => text
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("--{name}: cannot parse {text:?}"))),
        }
    }

    /// Reject flags that none of the command's readers consumed.
    pub fn ensure_only(&self, known: &[&str]) -> Result<(), CliError> {
        for name in self.named.keys() {
            if !known.contains(&name.as_str()) {
                return Err(CliError::Usage(format!("unknown flag --{name}")));
            }
        }
        Ok(())
    }
}

/// Angle arguments: the literals `pi`, `pi/2`, `-pi` (generally
/// ±pi/<integer>) plus plain decimals.
pub fn parse_angle(text: &str) -> Result<f64, CliError> {
    let trimmed = text.trim();
    let (sign, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, trimmed),
    };
    if body == "pi" {
        return Ok(sign * std::f64::consts::PI);
    }
    if let Some(den) = body.strip_prefix("pi/") {
        let den: f64 = den
            .parse()
            .map_err(|_| CliError::Usage(format!("bad angle {text:?}")))?;
        if den == 0.0 {
            return Err(CliError::Usage("angle denominator is zero".into()));
        }
        return Ok(sign * std::f64::consts::PI / den);
    }
    body.parse::<f64>()
        .map(|v| sign * v)
        .map_err(|_| CliError::Usage(format!("bad angle {text:?}")))
}

/// Comma-separated 1-based qubit indices, e.g. "1,3,4".
pub fn parse_qubit_list(text: &str) -> Result<QubitSet, CliError> {
    let mut indices = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let i: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("bad qubit index {part:?}")))?;
        indices.push(i);
    }
    if indices.is_empty() {
        return Err(CliError::Usage("empty qubit list".into()));
    }
    QubitSet::from_indices(indices).map_err(|e| CliError::Usage(e.to_string()))
}

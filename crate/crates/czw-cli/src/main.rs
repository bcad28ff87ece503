//! Command-line front end: analyze a state against a phase gate, fuzz
//! the trichotomy, check lemma equation systems, and generate state
//! files.

use std::process::exit;

mod commands;
mod flags;
mod statefile;

/// Exit codes are a stable contract: 0 ok, 2 internal contradiction,
/// 64 usage, 65 bad data, 66 file trouble.
pub const EXIT_CONTRADICTION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_FILE: i32 = 66;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    File(String),
    /// A check that can only fail on a numerics bug failed; diagnostics
    /// were already printed.
    Contradiction,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::File(_) => EXIT_FILE,
            CliError::Contradiction => EXIT_CONTRADICTION,
        }
    }
}

const USAGE: &str = "\
usage: czw <command> [flags]

commands:
  analyze <state-file> --s LIST --theta ANGLE [--tol T] [--renormalize] [--json]
      evaluate the three-branch verdict for the phase gate on the state

  fuzz [--n-max N] [--trials K] [--seed S] [--theta LIST] [--json]
      sweep random (state, targets, phase) triples and count branch hits

  lemma --arity {4,3,2} [--eta-theta ANGLE] [--count K] [--seed S] [--json]
      sample coefficient systems and check the equation-system conclusions

  gen --family {plus,haar,product,fixed-point,reduce,basis} --n N
      [--s LIST] [--i Q] [--x BITS] [--split LIST] [--seed S] [--out FILE]
      write a state file for a generator family

angles accept pi, -pi, pi/<int>, or decimals; qubit lists are
comma-separated 1-based indices. CZW_SEED overrides the default seed
where --seed is not given.";

/// Default seed when neither --seed nor CZW_SEED is given.
fn default_seed() -> u64 {
    std::env::var("CZW_SEED")
        .ok()
        .and_then(|text| text.parse().ok())
        .unwrap_or(1)
}

fn main() {
    // Die quietly when the consumer of a pipe goes away, like any
    // other line-oriented tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some((command, rest)) = args.split_first() else {
        eprintln!("{USAGE}");
        exit(EXIT_USAGE);
    };

    let result = match command.as_str() {
        "analyze" => commands::analyze::run(rest),
        "fuzz" => commands::fuzz::run(rest),
        "lemma" => commands::lemma::run(rest),
        "gen" => commands::gen::run(rest),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            return;
        }
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    };

    if let Err(err) = result {
        match &err {
            CliError::Usage(msg) => eprintln!("error: {msg}\n\n{USAGE}"),
            CliError::Data(msg) => eprintln!("error: {msg}"),
            CliError::File(msg) => eprintln!("error: {msg}"),
            CliError::Contradiction => {}
        }
        exit(err.exit_code());
    }
}

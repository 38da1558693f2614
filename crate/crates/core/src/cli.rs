//! Command-line front end.
//!
//! Exit codes: 0 affirmative, 1 negative or rejection, 2 usage or input
//! error. Standard output carries exactly one JSON document or one CSV
//! stream; diagnostics go to standard error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::nuij::{
    build_pencil, iterate_compose, verify_shift_identity, viete, HyperbolicPoly, NuijCandidate,
};
use crate::poly::isolate_and_refine_roots;
use crate::scalar::Rational;
use crate::toeplitz::{detrep_bipoly, recover_udr, udr_sequence_rational, verify_udr};

pub const CSV_HEADER: &str = "s,root_index,interval_lo,interval_hi,multiplicity";

#[derive(Debug, Parser)]
#[command(
    name = "nuij",
    version,
    about = "Exact Nuij-sequence and Toeplitz determinantal toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a sequence is a Nuij sequence.
    CheckNuij {
        /// JSON sequence, e.g. {"d":3,"a":["1","0","0"]}
        #[arg(long, value_parser = parse_seq)]
        seq: NuijCandidate,
    },
    /// Sequence generated by the special Toeplitz matrix T_{alpha,beta}.
    FromToeplitz {
        /// Diagonal entry, "p" or "p/q"
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Rational,
        /// Off-diagonal entry, "p" or "p/q"
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Rational,
        /// Size of the matrix (length of the sequence)
        #[arg(long)]
        d: usize,
    },
    /// Recover (alpha, beta) for a sequence, or reject it.
    CheckUdr {
        /// JSON sequence, e.g. {"d":3,"a":["1","0","0"]}
        #[arg(long, value_parser = parse_seq)]
        seq: NuijCandidate,
    },
    /// Compose two or more sequences, left to right.
    Compose {
        /// JSON sequence; repeat for each factor
        #[arg(long, value_parser = parse_seq, required = true, num_args = 1)]
        seq: Vec<NuijCandidate>,
    },
    /// Check det(zI + diag(roots) + s T_{alpha,beta}) against the pencil.
    VerifyDetrep {
        /// JSON list of rationals λ; p = ∏(z + λ_i)
        #[arg(long, value_parser = parse_roots)]
        roots: RootList,
        /// Diagonal entry, "p" or "p/q"
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Rational,
        /// Off-diagonal entry, "p" or "p/q"
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// Check the shift identity T_a((z+w)^d) = q_a(z+w).
    VerifyShift {
        /// JSON sequence, e.g. {"d":3,"a":["1","0","0"]}
        #[arg(long, value_parser = parse_seq)]
        seq: NuijCandidate,
    },
    /// Root trajectories of the pencil over a uniform grid of s values, as CSV.
    PencilRoots {
        /// JSON list of rationals λ; p = ∏(z + λ_i)
        #[arg(long, value_parser = parse_roots)]
        roots: RootList,
        /// JSON sequence, e.g. {"d":3,"a":["1","0","0"]}
        #[arg(long, value_parser = parse_seq)]
        seq: NuijCandidate,
        /// First s value
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        s_min: Rational,
        /// Last s value
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        s_max: Rational,
        /// Number of s values, endpoints included
        #[arg(long)]
        steps: usize,
        /// Maximum width of each isolating interval
        #[arg(long, value_parser = parse_rational)]
        width: Rational,
    },
    /// Elementary symmetric polynomials of the given values.
    Viete {
        /// JSON list of rationals λ; p = ∏(z + λ_i)
        #[arg(long, value_parser = parse_roots)]
        roots: RootList,
    },
}

#[derive(Debug, Clone)]
struct RootList(Vec<Rational>);

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_seq(s: &str) -> Result<NuijCandidate, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid sequence: {e}"))
}

fn parse_roots(s: &str) -> Result<RootList, String> {
    serde_json::from_str(s)
        .map(RootList)
        .map_err(|e| format!("invalid root list: {e}"))
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: i32, value: &impl Serialize) -> Self {
        let mut stdout = serde_json::to_string(value).expect("serializable");
        stdout.push('\n');
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `argv` (program name first) and runs the selected subcommand.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let text = e.to_string();
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            return Outcome::usage(line);
        }
    };
    match run(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn affirm(b: bool) -> i32 {
    if b {
        0
    } else {
        1
    }
}

fn run(command: Command) -> crate::Result<Outcome> {
    Ok(match command {
        Command::CheckNuij { seq } => {
            let report = seq.membership();
            Outcome::json(affirm(report.member), &report)
        }
        Command::FromToeplitz { alpha, beta, d } => {
            Outcome::json(0, &udr_sequence_rational(&alpha, &beta, d)?)
        }
        Command::CheckUdr { seq } => {
            let outcome = recover_udr(&seq);
            Outcome::json(affirm(outcome.is_accepted()), &outcome)
        }
        Command::Compose { seq } => Outcome::json(0, &iterate_compose(&seq)?),
        Command::VerifyDetrep { roots, alpha, beta } => {
            let equal = verify_udr(&roots.0, &alpha, &beta)?;
            let pencil = detrep_bipoly(&roots.0, &alpha, &beta);
            Outcome::json(affirm(equal), &json!({ "equal": equal, "pencil": pencil }))
        }
        Command::VerifyShift { seq } => {
            let equal = verify_shift_identity(&seq);
            Outcome::json(affirm(equal), &json!({ "equal": equal }))
        }
        Command::PencilRoots {
            roots,
            seq,
            s_min,
            s_max,
            steps,
            width,
        } => pencil_roots(&roots.0, &seq, &s_min, &s_max, steps, &width)?,
        Command::Viete { roots } => Outcome::json(0, &viete(&roots.0)),
    })
}

/// `steps` grid values from `s_min` to `s_max` inclusive (just `s_min` when
/// `steps == 1`).
pub fn s_grid(s_min: &Rational, s_max: &Rational, steps: usize) -> Vec<Rational> {
    match steps {
        0 => Vec::new(),
        1 => vec![s_min.clone()],
        _ => {
            let h = (s_max - s_min) / Rational::from((steps - 1) as i64);
            (0..steps)
                .map(|i| s_min + &(&h * &Rational::from(i as i64)))
                .collect()
        }
    }
}

fn pencil_roots(
    lambdas: &[Rational],
    a: &NuijCandidate,
    s_min: &Rational,
    s_max: &Rational,
    steps: usize,
    width: &Rational,
) -> crate::Result<Outcome> {
    if steps == 0 {
        return Ok(Outcome::usage("--steps must be at least 1"));
    }
    if s_min > s_max {
        return Ok(Outcome::usage("--s-min must not exceed --s-max"));
    }
    let p = HyperbolicPoly::from_lambdas(lambdas);
    let pencil = build_pencil(&p, a)?;
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    // rows are assembled in full before anything is written
    for s in s_grid(s_min, s_max, steps) {
        let iso = isolate_and_refine_roots(&pencil.section(&s), width)?;
        for (k, iv) in iso.intervals.iter().enumerate() {
            writeln!(csv, "{s},{k},{},{},{}", iv.lo, iv.hi, iv.multiplicity).expect("string write");
        }
    }
    Ok(Outcome {
        code: 0,
        stdout: csv,
        stderr: String::new(),
    })
}

//! Command-line front end for the `sizeramsey` crate.
//!
//! Every command is a pure function of its flags and input files: trials
//! derive their seeds from `--seed` and the trial index, run in parallel,
//! and are written in trial order. Data goes to `--out` or standard output;
//! diagnostics go to standard error. Column layouts are listed in
//! `SCHEMA.md` next to this crate's manifest.

pub mod args;
pub mod bounds;
pub mod check;
pub mod error;
pub mod oracle;
pub mod output;
pub mod sample;
pub mod trial;

use std::time::Instant;

use sizeramsey::model::RamseyParams;

use crate::args::{Cli, Command, Format, Global, HostArgs};
pub use crate::error::CliError;

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Sample(a) => sample::run(&cli.global, a),
        Command::RamseyTrial(a) => trial::run(&cli.global, a),
        Command::CheckExpansion(a) => check::run(&cli.global, a),
        Command::Bounds(a) => bounds::run(&cli.global, a),
        Command::Oracle(a) => oracle::run(&cli.global, a),
    }
}

pub(crate) fn require_seed(global: &Global, why: &str) -> Result<u64, CliError> {
    global
        .seed
        .ok_or_else(|| CliError::usage(format!("--seed is required {why}")))
}

pub(crate) fn trial_count(global: &Global) -> Result<u64, CliError> {
    match global.trials {
        Some(0) => Err(CliError::usage("--trials must be at least 1")),
        Some(t) => Ok(t),
        None => Ok(1),
    }
}

pub(crate) fn format_or(global: &Global, default: Format) -> Format {
    global.format.unwrap_or(default)
}

pub(crate) fn host_params(host: &HostArgs) -> Result<RamseyParams, CliError> {
    match host.p {
        Some(_) if !host.allow_out_of_regime => Err(CliError::OutOfRegime(
            "an explicit --p leaves the canonical regime; pass --allow-out-of-regime".into(),
        )),
        Some(p) => Ok(RamseyParams::with_probability(host.n, host.r, p)?),
        None => Ok(RamseyParams::new(host.n, host.r)?),
    }
}

pub(crate) fn log(global: &Global, message: impl AsRef<str>) {
    if !global.quiet {
        eprintln!("{}", message.as_ref());
    }
}

/// Milliseconds since `start`, only when `--timing` is set.
pub(crate) fn elapsed_ms(global: &Global, start: Instant) -> Option<u64> {
    global.timing.then(|| start.elapsed().as_millis() as u64)
}

// The command-line chapter of the guide runs as a doc-test here.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod guide {}

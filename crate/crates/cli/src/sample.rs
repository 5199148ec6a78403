use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sizeramsey::expansion::{
    check_expansion_exact, check_expansion_monte_carlo, ExactOutcome, MonteCarloOutcome,
    DEFAULT_ENUMERATION_CAP,
};
use sizeramsey::format::graph_to_json;
use sizeramsey::model::{sample_host, ExpansionCheck, Regime};
use sizeramsey::{build_host, derive_seed, RamseyParams};

use crate::args::{ExpansionMode, Format, Global, SampleArgs};
use crate::error::CliError;
use crate::output::{create_dir, emit, real, render_json, render_rows, write_file};

#[derive(Debug, Clone, Serialize)]
pub struct SampleRow {
    pub row: &'static str,
    pub trial: Option<u64>,
    pub seed: Option<u64>,
    pub sample_seed: Option<u64>,
    pub attempts: Option<u32>,
    pub vertex_count: Option<usize>,
    pub edge_count: Option<usize>,
    #[serde(serialize_with = "real")]
    pub edge_probability: Option<f64>,
    #[serde(serialize_with = "real")]
    pub edge_lower: Option<f64>,
    #[serde(serialize_with = "real")]
    pub edge_upper: Option<f64>,
    pub satisfies_ii: Option<bool>,
    pub regime: Option<Regime>,
    pub expansion: Option<&'static str>,
    pub expansion_witness_found: Option<bool>,
    pub expansion_max_seen: Option<usize>,
    #[serde(serialize_with = "real")]
    pub window_rate: Option<f64>,
    #[serde(serialize_with = "real")]
    pub mean_edge_count: Option<f64>,
    pub runtime_ms: Option<u64>,
}

pub fn run(global: &Global, args: &SampleArgs) -> Result<(), CliError> {
    let params = crate::host_params(&args.host)?;
    let seed = crate::require_seed(global, "to sample hosts")?;
    let trials = crate::trial_count(global)?;
    if let Some(dir) = &args.graph_dir {
        create_dir(dir)?;
    }
    crate::log(
        global,
        format!(
            "sample: {trials} host(s) on {} vertices, p = {}",
            params.host_vertices(),
            params.edge_probability()
        ),
    );
    let results: Vec<Result<SampleRow, CliError>> = (0..trials)
        .into_par_iter()
        .map(|trial| one_trial(global, args, &params, seed, trial))
        .collect();

    let mut rows = Vec::with_capacity(results.len() + 1);
    let mut failure = None;
    for result in results {
        match result {
            Ok(row) => rows.push(row),
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    if failure.is_none() {
        rows.push(summary(&rows, seed));
    }
    let format = crate::format_or(global, Format::Csv);
    emit(&render_rows(&rows, format)?, global.out.as_deref())?;
    match failure {
        Some(e) => Err(e),
        None => {
            let s = rows.last().expect("summary row");
            crate::log(
                global,
                format!(
                    "sample: window rate {}, mean edge count {}",
                    s.window_rate.unwrap_or(0.0),
                    s.mean_edge_count.unwrap_or(0.0)
                ),
            );
            Ok(())
        }
    }
}

fn one_trial(
    global: &Global,
    args: &SampleArgs,
    params: &RamseyParams,
    seed: u64,
    trial: u64,
) -> Result<SampleRow, CliError> {
    let start = Instant::now();
    let trial_seed = derive_seed(seed, trial);
    let (host, mut report) = if args.raw {
        sample_host(params, trial_seed)
    } else {
        build_host(params, trial_seed, args.host.retry_limit)?
    };
    let budget = params.expansion_budget();
    report.expansion_checked = match args.expansion {
        ExpansionMode::None => ExpansionCheck::Skipped,
        ExpansionMode::Exact => {
            let cap = global.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
            let outcome = check_expansion_exact(&host, params.n(), budget, cap)?;
            ExpansionCheck::Exact {
                passed: outcome == ExactOutcome::Pass,
            }
        }
        ExpansionMode::MonteCarlo => {
            let outcome = check_expansion_monte_carlo(
                &host,
                params.n(),
                budget,
                args.expansion_trials,
                derive_seed(trial_seed, u64::MAX),
            )?;
            match outcome {
                MonteCarloOutcome::Violated { witness, trial } => ExpansionCheck::MonteCarlo {
                    trials: trial + 1,
                    witness_found: true,
                    max_seen: witness.edge_count,
                },
                MonteCarloOutcome::NoWitnessFound { trials, max_seen } => {
                    ExpansionCheck::MonteCarlo {
                        trials,
                        witness_found: false,
                        max_seen,
                    }
                }
            }
        }
    };
    if let Some(dir) = &args.graph_dir {
        write_file(&dir.join(format!("host-{trial}.json")), graph_to_json(&host).as_bytes())?;
        write_file(&dir.join(format!("report-{trial}.json")), &render_json(&report)?)?;
    }
    let (expansion, witness_found, max_seen) = match report.expansion_checked {
        ExpansionCheck::Skipped => (None, None, None),
        ExpansionCheck::Exact { passed } => (Some("exact"), Some(!passed), None),
        ExpansionCheck::MonteCarlo {
            witness_found,
            max_seen,
            ..
        } => (Some("monte-carlo"), Some(witness_found), Some(max_seen)),
    };
    Ok(SampleRow {
        row: "trial",
        trial: Some(trial),
        seed: Some(trial_seed),
        sample_seed: Some(report.sample_seed),
        attempts: Some(report.attempts),
        vertex_count: Some(report.vertex_count),
        edge_count: Some(report.edge_count),
        edge_probability: Some(report.edge_probability),
        edge_lower: Some(report.edge_lower),
        edge_upper: Some(report.edge_upper),
        satisfies_ii: Some(report.satisfies_ii),
        regime: Some(report.regime),
        expansion,
        expansion_witness_found: witness_found,
        expansion_max_seen: max_seen,
        window_rate: None,
        mean_edge_count: None,
        runtime_ms: crate::elapsed_ms(global, start),
    })
}

fn summary(rows: &[SampleRow], seed: u64) -> SampleRow {
    let k = rows.len() as f64;
    let in_window = rows.iter().filter(|r| r.satisfies_ii == Some(true)).count() as f64;
    let edges: usize = rows.iter().filter_map(|r| r.edge_count).sum();
    SampleRow {
        row: "summary",
        trial: None,
        seed: Some(seed),
        sample_seed: None,
        attempts: None,
        vertex_count: None,
        edge_count: None,
        edge_probability: None,
        edge_lower: None,
        edge_upper: None,
        satisfies_ii: None,
        regime: None,
        expansion: None,
        expansion_witness_found: None,
        expansion_max_seen: None,
        window_rate: Some(in_window / k),
        mean_edge_count: Some(edges as f64 / k),
        runtime_ms: None,
    }
}

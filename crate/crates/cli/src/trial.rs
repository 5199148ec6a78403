use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sizeramsey::format::{colouring_to_json, graph_to_json};
use sizeramsey::{
    adversary_colour, build_host, derive_seed, find_monochromatic_path, validate_witness,
    verify_path, Colouring, DfsCertificate, DfsOutcome, Graph, PhaseRecord,
};

use crate::args::{Format, Global, TrialArgs};
use crate::error::CliError;
use crate::output::{create_dir, emit, load_colouring, load_graph, real, render_json, render_rows, write_file};

#[derive(Debug, Clone, Serialize)]
pub struct TrialRow {
    pub row: &'static str,
    pub trial: Option<u64>,
    pub seed: Option<u64>,
    pub adversary: Option<String>,
    pub vertex_count: Option<usize>,
    pub edge_count: Option<usize>,
    pub colour: Option<u32>,
    pub colour_class_size: Option<usize>,
    pub outcome: Option<DfsOutcome>,
    pub path_found: Option<bool>,
    pub certificate_valid: Option<bool>,
    pub phases_used: Option<usize>,
    pub max_f_count: Option<usize>,
    pub threshold: Option<usize>,
    #[serde(serialize_with = "real")]
    pub path_found_rate: Option<f64>,
    pub runtime_ms: Option<u64>,
}

/// `Some(valid)` for path and witness certificates, `None` when there is
/// nothing to check.
pub fn certificate_valid(host: &Graph, c: &Colouring, cert: &DfsCertificate) -> Option<bool> {
    match cert.outcome {
        DfsOutcome::PathFound => Some(
            cert.path
                .as_ref()
                .is_some_and(|p| verify_path(host, c, p, cert.n, cert.colour)),
        ),
        DfsOutcome::WitnessFound => Some(
            cert.expansion_witness(host)
                .is_some_and(|w| validate_witness(host, &w)),
        ),
        DfsOutcome::BudgetOkContradiction => None,
    }
}

pub fn run(global: &Global, args: &TrialArgs) -> Result<(), CliError> {
    let fixed_host = match &args.graph {
        Some(path) => {
            if global.trials.is_some_and(|t| t != 1) {
                return Err(CliError::usage("--graph runs exactly one trial"));
            }
            let g = load_graph(path)?;
            let c = match &args.colouring {
                Some(cp) => Some(load_colouring(cp, &g)?),
                None => None,
            };
            Some((g, c))
        }
        None => None,
    };
    let needs_seed = !matches!(fixed_host, Some((_, Some(_))));
    let seed = if needs_seed {
        Some(crate::require_seed(global, "to sample hosts or colourings")?)
    } else {
        global.seed
    };
    let params = if fixed_host.is_none() {
        Some(crate::host_params(&args.host)?)
    } else {
        None
    };
    let trials = crate::trial_count(global)?;
    if let Some(dir) = &args.certificates {
        create_dir(dir)?;
    }
    crate::log(
        global,
        format!(
            "ramsey-trial: {trials} trial(s), n = {}, r = {}, adversary {}",
            args.host.n, args.host.r, args.adversary
        ),
    );

    let results: Vec<Result<TrialRow, CliError>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let start = Instant::now();
            let trial_seed = seed.map(|s| derive_seed(s, trial));
            let owned;
            let (host, given) = match &fixed_host {
                Some((g, c)) => (g, c.clone()),
                None => {
                    let params = params.as_ref().expect("sampled hosts have parameters");
                    let host_seed = derive_seed(trial_seed.expect("seed checked"), 0);
                    owned = build_host(params, host_seed, args.host.retry_limit)?.0;
                    (&owned, None)
                }
            };
            let colouring = match given {
                Some(c) => c,
                None => adversary_colour(
                    host,
                    args.host.n,
                    args.host.r,
                    args.adversary,
                    derive_seed(trial_seed.expect("seed checked"), 1),
                )?,
            };
            one_trial(global, args, trial, trial_seed, host, &colouring, start)
        })
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
        failure = rows
            .iter()
            .find(|r| r.certificate_valid == Some(false))
            .map(|r| {
                CliError::Invariant(format!(
                    "certificate of trial {} failed re-validation",
                    r.trial.unwrap_or(0)
                ))
            });
    }
    if failure.is_none() {
        let found = rows.iter().filter(|r| r.path_found == Some(true)).count();
        rows.push(TrialRow {
            row: "summary",
            trial: None,
            seed,
            adversary: rows.first().and_then(|r| r.adversary.clone()),
            vertex_count: None,
            edge_count: None,
            colour: None,
            colour_class_size: None,
            outcome: None,
            path_found: None,
            certificate_valid: None,
            phases_used: None,
            max_f_count: None,
            threshold: None,
            path_found_rate: Some(found as f64 / trials as f64),
            runtime_ms: None,
        });
        crate::log(global, format!("ramsey-trial: path found in {found} of {trials}"));
    }
    let format = crate::format_or(global, Format::Csv);
    emit(&render_rows(&rows, format)?, global.out.as_deref())?;
    failure.map_or(Ok(()), Err)
}

fn one_trial(
    global: &Global,
    args: &TrialArgs,
    trial: u64,
    trial_seed: Option<u64>,
    host: &Graph,
    colouring: &Colouring,
    start: Instant,
) -> Result<TrialRow, CliError> {
    let cert = find_monochromatic_path(host, colouring, args.host.n, args.all_colours)?;
    let valid = certificate_valid(host, colouring, &cert);
    if let Some(dir) = &args.certificates {
        write_file(&dir.join(format!("cert-{trial}.json")), &render_json(&cert.to_json())?)?;
        write_file(&dir.join(format!("host-{trial}.json")), graph_to_json(host).as_bytes())?;
        write_file(
            &dir.join(format!("colouring-{trial}.json")),
            colouring_to_json(colouring).as_bytes(),
        )?;
    }
    let found = cert.outcome == DfsOutcome::PathFound;
    Ok(TrialRow {
        row: "trial",
        trial: Some(trial),
        seed: trial_seed,
        adversary: Some(if args.colouring.is_some() {
            "file".to_string()
        } else {
            args.adversary.to_string()
        }),
        vertex_count: Some(host.vertex_count()),
        edge_count: Some(host.edge_count()),
        colour: Some(cert.colour),
        colour_class_size: Some(cert.colour_class_size),
        outcome: Some(cert.outcome),
        path_found: Some(found),
        certificate_valid: valid,
        phases_used: Some(cert.phase_log.len() + usize::from(found)),
        max_f_count: cert.phase_log.iter().map(PhaseRecord::f_count).max(),
        threshold: Some(cert.threshold),
        path_found_rate: None,
        runtime_ms: crate::elapsed_ms(global, start),
    })
}

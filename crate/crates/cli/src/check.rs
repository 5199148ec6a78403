use std::path::Path;

use serde::Serialize;
use sizeramsey::dfs::CertificateJson;
use sizeramsey::expansion::{
    check_expansion_exact, check_expansion_monte_carlo, pad_pair, ExpansionWitness, ExactOutcome,
    MonteCarloOutcome, DEFAULT_ENUMERATION_CAP,
};
use sizeramsey::{validate_witness, verify_path, Colouring, DfsOutcome, Graph, Path as GraphPath, VertexSet};

use crate::args::{CheckMethod, ExpansionArgs, Format, Global};
use crate::error::CliError;
use crate::output::{emit, join_vertices, load_colouring, load_graph, load_json, real, render_json, render_rows};

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum Outcome {
    Exact(ExactOutcome),
    MonteCarlo(MonteCarloOutcome),
}

#[derive(Debug, Serialize)]
struct Report {
    method: &'static str,
    n: usize,
    budget: f64,
    #[serde(flatten)]
    outcome: Outcome,
}

#[derive(Debug, Serialize)]
pub struct ExpansionRow {
    pub method: &'static str,
    pub n: usize,
    #[serde(serialize_with = "real")]
    pub budget: Option<f64>,
    pub result: &'static str,
    pub edge_count: Option<usize>,
    #[serde(rename = "S")]
    pub s: Option<String>,
    #[serde(rename = "T")]
    pub t: Option<String>,
    pub trial: Option<u64>,
    pub trials: Option<u64>,
    pub max_seen: Option<usize>,
}

/// Result of re-checking a `ramsey-trial` certificate against its inputs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Revalidation {
    pub valid: bool,
    pub outcome: DfsOutcome,
    pub checked: &'static str,
    pub threshold: usize,
    pub witness: Option<ExpansionWitness>,
}

pub fn run(global: &Global, args: &ExpansionArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    if let Some(cert) = &args.certificate {
        let colouring_path = args.colouring.as_deref().expect("clap requires --colouring");
        return revalidate_files(global, &g, cert, colouring_path, args.n);
    }
    let budget = match (args.budget, args.r) {
        (Some(b), _) => b,
        (None, Some(r)) if r >= 2 => 70.0 * (r as f64).ln() * args.n as f64,
        (None, Some(_)) => return Err(CliError::usage("--r must be at least 2")),
        (None, None) => return Err(CliError::usage("give --budget or --r")),
    };
    let (method, outcome) = match args.method {
        CheckMethod::Exact => {
            let cap = global.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
            ("exact", Outcome::Exact(check_expansion_exact(&g, args.n, budget, cap)?))
        }
        CheckMethod::MonteCarlo => {
            let seed = crate::require_seed(global, "for --method monte-carlo")?;
            let trials = crate::trial_count(global)?;
            let outcome = check_expansion_monte_carlo(&g, args.n, budget, trials, seed)?;
            ("monte-carlo", Outcome::MonteCarlo(outcome))
        }
    };
    crate::log(global, format!("check-expansion: {method} check of n = {} against {budget}", args.n));
    let bytes = match crate::format_or(global, Format::Json) {
        Format::Json => render_json(&Report {
            method,
            n: args.n,
            budget,
            outcome,
        })?,
        Format::Csv => render_rows(&[row(method, args.n, budget, &outcome)], Format::Csv)?,
    };
    emit(&bytes, global.out.as_deref())
}

fn row(method: &'static str, n: usize, budget: f64, outcome: &Outcome) -> ExpansionRow {
    let mut row = ExpansionRow {
        method,
        n,
        budget: Some(budget),
        result: "pass",
        edge_count: None,
        s: None,
        t: None,
        trial: None,
        trials: None,
        max_seen: None,
    };
    let witness = match outcome {
        Outcome::Exact(ExactOutcome::Pass) => None,
        Outcome::Exact(ExactOutcome::Violated { witness }) => Some(witness),
        Outcome::MonteCarlo(MonteCarloOutcome::Violated { witness, trial }) => {
            row.trial = Some(*trial);
            Some(witness)
        }
        Outcome::MonteCarlo(MonteCarloOutcome::NoWitnessFound { trials, max_seen }) => {
            row.result = "no-witness-found";
            row.trials = Some(*trials);
            row.max_seen = Some(*max_seen);
            None
        }
    };
    if let Some(w) = witness {
        row.result = "violated";
        row.edge_count = Some(w.edge_count);
        row.s = Some(join_vertices(&w.s));
        row.t = Some(join_vertices(&w.t));
    }
    row
}

fn revalidate_files(
    global: &Global,
    g: &Graph,
    cert_path: &Path,
    colouring_path: &Path,
    n: usize,
) -> Result<(), CliError> {
    let c = load_colouring(colouring_path, g)?;
    let cert: CertificateJson = load_json(cert_path)?;
    let report = revalidate(g, &c, &cert, n);
    emit(&render_json(&report)?, global.out.as_deref())?;
    if report.valid {
        crate::log(global, format!("check-expansion: certificate {} is valid", cert_path.display()));
        Ok(())
    } else {
        Err(CliError::Invariant(format!(
            "certificate {} failed {}",
            cert_path.display(),
            report.checked
        )))
    }
}

/// Re-checks a certificate using only the host, the colouring, and `n`.
///
/// Paths go through `verify_path`. Witnesses are padded to `n` and must
/// reach the pigeonhole threshold `ceil(|class| / 7r)` on the host. A
/// budget-ok certificate must log phases whose counts sum to the class size
/// and all stay below the threshold.
pub fn revalidate(g: &Graph, c: &Colouring, cert: &CertificateJson, n: usize) -> Revalidation {
    let class = c.class_sizes().get(cert.colour as usize).copied();
    let threshold = class.map_or(0, |k| k.div_ceil(7 * c.r() as usize));
    let mut report = Revalidation {
        valid: false,
        outcome: cert.outcome,
        checked: "colour",
        threshold,
        witness: None,
    };
    let Some(class) = class else { return report };
    match cert.outcome {
        DfsOutcome::PathFound => {
            report.checked = "verify_path";
            report.valid = cert
                .path
                .as_ref()
                .and_then(|vs| GraphPath::from_vertices(g, vs.clone()))
                .is_some_and(|p| verify_path(g, c, &p, n, cert.colour));
        }
        DfsOutcome::WitnessFound => {
            report.checked = "validate_witness";
            let padded = cert.witness.as_ref().and_then(|w| {
                let s = VertexSet::from_vertices(g.vertex_count(), w.s.iter().copied()).ok()?;
                let t = VertexSet::from_vertices(g.vertex_count(), w.t.iter().copied()).ok()?;
                let (s, t) = pad_pair(g, &s, &t, n)?;
                ExpansionWitness::measure(g, &s, &t, threshold as f64).ok()
            });
            report.valid = padded.as_ref().is_some_and(|w| validate_witness(g, w))
                && cert.witness.as_ref().is_some_and(|w| w.edge_count >= threshold && class > 0);
            report.witness = padded;
        }
        DfsOutcome::BudgetOkContradiction => {
            report.checked = "phase_log";
            let sum: usize = cert.phase_log.iter().map(|p| p.f_count).sum();
            let below = cert.phase_log.iter().all(|p| class == 0 || p.f_count < threshold);
            report.valid = cert.path.is_none() && cert.witness.is_none() && sum == class && below;
        }
    }
    report
}

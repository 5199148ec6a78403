//! Host-graph parameters and the seeded binomial random graph sampler.
//!
//! The canonical host for `n` and `r` is `G(7rn, p)` with `p = 22 ln(r) / n`;
//! "log" is the natural logarithm throughout.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::reals;

/// Resampling budget for property (ii) in [`build_host`].
pub const DEFAULT_RETRY_LIMIT: u32 = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("p = 22 ln({r}) / {n} = {p} exceeds 1; n must exceed 22 ln r")]
    ProbabilityAboveOne { n: usize, r: u32, p: f64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no sample satisfied the edge-count window after {attempts} attempts (last edge count {last_edge_count})")]
    RetryLimitExhausted { attempts: u32, last_edge_count: usize },
}

/// Whether a parameter bundle follows the canonical construction or uses an
/// explicit probability override.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Canonical,
    OutOfRegime,
}

/// The parameter bundle `(n, r)` with every derived threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamseyParams {
    n: usize,
    r: u32,
    host_vertices: usize,
    #[serde(with = "reals")]
    edge_probability: f64,
    #[serde(with = "reals")]
    expansion_budget: f64,
    #[serde(with = "reals")]
    edge_lower: f64,
    #[serde(with = "reals")]
    edge_upper: f64,
    phase_count: usize,
    regime: Regime,
}

impl RamseyParams {
    /// Canonical parameters; refuses `p > 1`.
    pub fn new(n: usize, r: u32) -> Result<Self, ModelError> {
        Self::check_shape(n, r)?;
        let p = canonical_probability(n, r);
        if p > 1.0 {
            return Err(ModelError::ProbabilityAboveOne { n, r, p });
        }
        Ok(Self::build(n, r, p, Regime::Canonical))
    }

    /// Parameters with an explicit edge probability, for desk-scale runs
    /// where the canonical `p` exceeds 1. Always marked out-of-regime.
    pub fn with_probability(n: usize, r: u32, p: f64) -> Result<Self, ModelError> {
        Self::check_shape(n, r)?;
        if !(p > 0.0 && p <= 1.0) {
            return Err(ModelError::InvalidProbability(p));
        }
        Ok(Self::build(n, r, p, Regime::OutOfRegime))
    }

    fn check_shape(n: usize, r: u32) -> Result<(), ModelError> {
        if n == 0 {
            return Err(ModelError::InvalidParams("n must be at least 1".into()));
        }
        if r < 2 {
            return Err(ModelError::InvalidParams("r must be at least 2".into()));
        }
        let vertices = 7u64 * r as u64 * n as u64;
        if vertices > Vertex::MAX as u64 {
            return Err(ModelError::InvalidParams(format!(
                "host would have {vertices} vertices"
            )));
        }
        Ok(())
    }

    fn build(n: usize, r: u32, p: f64, regime: Regime) -> Self {
        let log_r = (r as f64).ln();
        let (nf, rf) = (n as f64, r as f64);
        Self {
            n,
            r,
            host_vertices: 7 * r as usize * n,
            edge_probability: p,
            expansion_budget: 70.0 * log_r * nf,
            edge_lower: 500.0 * log_r * rf * rf * nf,
            edge_upper: 600.0 * log_r * rf * rf * nf,
            phase_count: 7 * r as usize,
            regime,
        }
    }

    /// Target path length in vertices.
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    /// `7rn`.
    pub fn host_vertices(&self) -> usize {
        self.host_vertices
    }
    pub fn edge_probability(&self) -> f64 {
        self.edge_probability
    }
    /// `70 ln(r) n`, the per-pair edge budget of property (iii).
    pub fn expansion_budget(&self) -> f64 {
        self.expansion_budget
    }
    /// `500 ln(r) r^2 n`.
    pub fn edge_lower(&self) -> f64 {
        self.edge_lower
    }
    /// `600 ln(r) r^2 n`.
    pub fn edge_upper(&self) -> f64 {
        self.edge_upper
    }
    /// `7r`.
    pub fn phase_count(&self) -> usize {
        self.phase_count
    }
    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Property (ii): strict edge-count window.
    pub fn edge_count_in_window(&self, edges: usize) -> bool {
        let e = edges as f64;
        self.edge_lower < e && e < self.edge_upper
    }
}

/// `22 ln(r) / n`, unclamped.
pub fn canonical_probability(n: usize, r: u32) -> f64 {
    22.0 * (r as f64).ln() / n as f64
}

/// Seed for sub-run `index` of a run seeded with `seed`: the `index + 1`-th
/// output of a SplitMix64 stream started at `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut z = seed.wrapping_add(GAMMA.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Samples `G(vertex_count, p)`.
///
/// The generator is ChaCha8 seeded with `seed` through
/// `SeedableRng::seed_from_u64`. Pairs are visited in colexicographic order
/// (`(0,1), (0,2), (1,2), (0,3), ...`) and the gap to the next included pair
/// is drawn from a geometric distribution, so the cost is proportional to
/// the number of edges rather than the number of pairs. The returned edge
/// sequence is in that same colex order.
pub fn sample_gnp(vertex_count: usize, p: f64, seed: u64) -> Result<Graph, ModelError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ModelError::InvalidProbability(p));
    }
    if vertex_count > Vertex::MAX as usize {
        return Err(ModelError::InvalidParams(format!(
            "{vertex_count} vertices exceed the vertex index space"
        )));
    }
    let mut edges = Vec::new();
    if p > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log_q = (1.0 - p).ln();
        let total = vertex_count as i64;
        let (mut v, mut w): (i64, i64) = (1, -1);
        while v < total {
            let u: f64 = rng.gen();
            // At p = 1 this is 0 / -inf = 0, so every pair is taken.
            let skip = ((1.0 - u).ln() / log_q).floor() as i64;
            w = w.saturating_add(1).saturating_add(skip);
            while w >= v && v < total {
                w -= v;
                v += 1;
            }
            if v < total {
                edges.push((w as Vertex, v as Vertex));
            }
        }
    }
    Ok(Graph::new(vertex_count, edges).expect("sampled pairs are distinct and in range"))
}

/// Outcome of an optional property (iii) check attached to a sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum ExpansionCheck {
    Skipped,
    Exact { passed: bool },
    MonteCarlo { trials: u64, witness_found: bool, max_seen: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    /// Seed supplied by the caller.
    pub seed: u64,
    /// Derived seed of the accepted sample.
    pub sample_seed: u64,
    pub attempts: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    #[serde(with = "reals")]
    pub edge_probability: f64,
    #[serde(with = "reals")]
    pub edge_lower: f64,
    #[serde(with = "reals")]
    pub edge_upper: f64,
    pub satisfies_ii: bool,
    pub regime: Regime,
    pub expansion_checked: ExpansionCheck,
}

/// One sample of the host at `derive_seed(seed, 0)`, whether or not it
/// satisfies property (ii).
pub fn sample_host(params: &RamseyParams, seed: u64) -> (Graph, SampleReport) {
    sample_attempt(params, seed, 0)
}

fn sample_attempt(params: &RamseyParams, seed: u64, attempt: u32) -> (Graph, SampleReport) {
    let sample_seed = derive_seed(seed, attempt as u64);
    let g = sample_gnp(params.host_vertices(), params.edge_probability(), sample_seed)
        .expect("validated parameters");
    let report = SampleReport {
        seed,
        sample_seed,
        attempts: attempt + 1,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        edge_probability: params.edge_probability(),
        edge_lower: params.edge_lower(),
        edge_upper: params.edge_upper(),
        satisfies_ii: params.edge_count_in_window(g.edge_count()),
        regime: params.regime(),
        expansion_checked: ExpansionCheck::Skipped,
    };
    (g, report)
}

/// Samples the host, resampling with derived seeds until property (ii)
/// holds or `retry_limit` attempts have been spent.
pub fn build_host(
    params: &RamseyParams,
    seed: u64,
    retry_limit: u32,
) -> Result<(Graph, SampleReport), ModelError> {
    let mut last_edge_count = 0;
    for attempt in 0..retry_limit {
        let (g, report) = sample_attempt(params, seed, attempt);
        if report.satisfies_ii {
            return Ok((g, report));
        }
        last_edge_count = report.edge_count;
    }
    Err(ModelError::RetryLimitExhausted {
        attempts: retry_limit,
        last_edge_count,
    })
}

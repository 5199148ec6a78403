//! Closed-form quantities behind the host construction: expected edge
//! counts, the Chernoff tail and union bound, and the table of known
//! size-Ramsey upper and lower bound coefficients.
//!
//! Exact finite-`n` expressions are the primary outputs. The asymptotic
//! forms (`33 ln(r) n`, `539 ln(r) r^2 n`, `-10.9 ln(r) n`) are exposed
//! alongside for comparison only.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::RamseyParams;
use crate::reals;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("r must be at least 2 (got {0})")]
    ColourCount(u32),
    #[error("the power-law bound needs C > 5 (got {0})")]
    ConstantTooSmall(f64),
}

/// Exact `E[X_{S,T}] = (n^2 + C(n,2)) p` for disjoint `|S| = |T| = n`.
pub fn expected_pair_edges(params: &RamseyParams) -> f64 {
    let n = params.n() as f64;
    (n * n + n * (n - 1.0) / 2.0) * params.edge_probability()
}

/// The leading-order form `(3/2) n^2 p`, which is `33 ln(r) n` at the
/// canonical probability.
pub fn pair_edges_asymptote(params: &RamseyParams) -> f64 {
    let n = params.n() as f64;
    1.5 * n * n * params.edge_probability()
}

/// Exact `E|E| = C(7rn, 2) p`.
pub fn expected_host_edges(params: &RamseyParams) -> f64 {
    let v = params.host_vertices() as f64;
    v * (v - 1.0) / 2.0 * params.edge_probability()
}

/// `(7rn)^2 p / 2`, which is `539 ln(r) r^2 n` at the canonical probability.
pub fn host_edges_asymptote(params: &RamseyParams) -> f64 {
    let v = params.host_vertices() as f64;
    v * v / 2.0 * params.edge_probability()
}

/// Per-pair tail bound `P(X_{S,T} >= 2 mu) <= exp(-mu / 3)`, kept in log form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChernoffBound {
    #[serde(with = "reals")]
    pub mean: f64,
    /// `-mu / 3` with the exact finite-`n` mean.
    #[serde(with = "reals")]
    pub log_bound: f64,
    /// `-10.9 ln(r) n`, the rounded-down exponent used in the union bound.
    #[serde(with = "reals")]
    pub log_simplified: f64,
    /// Whether the budget `70 ln(r) n` is at least `2 mu`, so that the tail
    /// at the budget is dominated by the tail at `2 mu`.
    pub budget_covers_twice_mean: bool,
}

impl ChernoffBound {
    pub fn probability(&self) -> f64 {
        self.log_bound.exp()
    }
}

pub fn chernoff_failure_bound(params: &RamseyParams) -> ChernoffBound {
    let mean = expected_pair_edges(params);
    ChernoffBound {
        mean,
        log_bound: -mean / 3.0,
        log_simplified: -10.9 * (params.r() as f64).ln() * params.n() as f64,
        budget_covers_twice_mean: params.expansion_budget() >= 2.0 * mean,
    }
}

/// `2 ln(7 e r) - 10.9 ln r`: the union-bound log-probability per unit of `n`.
/// Negative exactly when `(7 e r)^2 < r^10.9`.
pub fn union_bound_coefficient(r: u32) -> f64 {
    let r = r as f64;
    2.0 * (7.0 * std::f64::consts::E * r).ln() - 10.9 * r.ln()
}

/// Log of `(7er)^{2n} exp(-10.9 ln(r) n)`, the union bound over all `(S, T)`.
pub fn union_bound_failure(params: &RamseyParams) -> f64 {
    params.n() as f64 * union_bound_coefficient(params.r())
}

/// Bounds on the size-Ramsey number of `P_n` with `r` colours, each as a
/// coefficient of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "variant")]
pub enum BoundVariant {
    /// Upper bound `600 ln(r) r^2`, from the phased DFS on `G(7rn, p)`.
    LogQuadratic,
    /// Krivelevich's upper bound `400^5 C r^{2 + 1/(C-4)}` for `C > 5`;
    /// `None` selects the minimizing `C`.
    Krivelevich { c: Option<f64> },
    /// Lower bound `(r+3) r / 4`, up to an unknown `O(r^2)` additive term.
    QuadraticLower,
    /// Upper bound `33 r 4^r`.
    ExponentialUpper,
}

impl BoundVariant {
    pub const ALL: [BoundVariant; 4] = [
        BoundVariant::LogQuadratic,
        BoundVariant::Krivelevich { c: None },
        BoundVariant::QuadraticLower,
        BoundVariant::ExponentialUpper,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundVariant::LogQuadratic => "log-quadratic",
            BoundVariant::Krivelevich { .. } => "krivelevich",
            BoundVariant::QuadraticLower => "quadratic-lower",
            BoundVariant::ExponentialUpper => "exponential-upper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub variant: BoundVariant,
    #[serde(with = "reals")]
    pub coefficient: f64,
    /// The constant `C` used by the Krivelevich variant.
    pub c: Option<f64>,
    pub is_lower_bound: bool,
    pub note: Option<&'static str>,
}

/// `400^5 C r^{2 + 1/(C-4)}`.
pub fn krivelevich_coefficient(r: u32, c: f64) -> Result<f64, BoundsError> {
    if r < 2 {
        return Err(BoundsError::ColourCount(r));
    }
    if c.is_nan() || c <= 5.0 {
        return Err(BoundsError::ConstantTooSmall(c));
    }
    Ok(400f64.powi(5) * c * (r as f64).powf(2.0 + 1.0 / (c - 4.0)))
}

/// The `C > 5` minimizing the Krivelevich coefficient at this `r`, found by
/// golden-section search on `ln C + ln(r) / (C - 4)`, which is unimodal on
/// `(4, inf)`.
pub fn krivelevich_optimal_c(r: u32) -> Result<f64, BoundsError> {
    if r < 2 {
        return Err(BoundsError::ColourCount(r));
    }
    let log_r = (r as f64).ln();
    let objective = |c: f64| c.ln() + log_r / (c - 4.0);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (5.0, 2.0 * (8.0 + log_r) + 10.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (objective(x1), objective(x2));
    while hi - lo > 1e-12 * hi {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        }
    }
    let c = (lo + hi) / 2.0;
    // The minimizer never sits on the C = 5 boundary for r >= 2 (it is >= 6.05).
    debug_assert!(c > 5.0);
    Ok(c)
}

pub fn bound_table(r: u32, variants: &[BoundVariant]) -> Result<Vec<BoundEntry>, BoundsError> {
    if r < 2 {
        return Err(BoundsError::ColourCount(r));
    }
    let rf = r as f64;
    variants
        .iter()
        .map(|&variant| {
            let entry = match variant {
                BoundVariant::LogQuadratic => BoundEntry {
                    variant,
                    coefficient: 600.0 * rf.ln() * rf * rf,
                    c: None,
                    is_lower_bound: false,
                    note: None,
                },
                BoundVariant::Krivelevich { c } => {
                    let c = match c {
                        Some(c) => c,
                        None => krivelevich_optimal_c(r)?,
                    };
                    BoundEntry {
                        variant,
                        coefficient: krivelevich_coefficient(r, c)?,
                        c: Some(c),
                        is_lower_bound: false,
                        note: Some("the minimizing C is of order ln r"),
                    }
                }
                BoundVariant::QuadraticLower => BoundEntry {
                    variant,
                    coefficient: (rf + 3.0) * rf / 4.0,
                    c: None,
                    is_lower_bound: true,
                    note: Some("minus an unknown O(r^2) term"),
                },
                BoundVariant::ExponentialUpper => BoundEntry {
                    variant,
                    coefficient: 33.0 * rf * 4f64.powf(rf),
                    c: None,
                    is_lower_bound: false,
                    note: None,
                },
            };
            Ok(entry)
        })
        .collect()
}

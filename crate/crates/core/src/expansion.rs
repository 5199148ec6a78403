//! Checking the pair-density property: for all disjoint `S, T` with
//! `|S| = |T| = n`, at most `budget` edges lie inside `S ∪ T` with an
//! endpoint in `S`.
//!
//! The exact checker enumerates every ordered pair and is only usable at desk
//! scale. The Monte Carlo checker samples pairs and never reports a pass,
//! since absence of a violation in `k` samples says nothing about the
//! exponentially many pairs it did not draw.

use std::ops::ControlFlow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{induced_edge_count, Graph, GraphError, Vertex, VertexSet};
use crate::model::derive_seed;

/// Upper limit on the number of ordered `(S, T)` pairs the exact checker visits.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

const MONTE_CARLO_BLOCK: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExpansionError {
    #[error("exact check would visit {pairs} (S, T) pairs, above the cap of {cap}")]
    CapExceeded { pairs: u128, cap: u128 },
    #[error("need 2n <= |V| (n = {n}, |V| = {vertex_count})")]
    TooFewVertices { n: usize, vertex_count: usize },
    #[error("at least one trial is required")]
    NoTrials,
}

/// A pair `(S, T)` whose qualifying edge count reaches `budget`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionWitness {
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    #[serde(rename = "T")]
    pub t: Vec<Vertex>,
    pub edge_count: usize,
    pub budget: f64,
}

impl ExpansionWitness {
    /// Counts the qualifying edges of `(s, t)` in `g`; the result is not
    /// checked against `budget`.
    pub fn measure(
        g: &Graph,
        s: &VertexSet,
        t: &VertexSet,
        budget: f64,
    ) -> Result<Self, GraphError> {
        Ok(Self {
            edge_count: induced_edge_count(g, s, t)?,
            s: s.to_vec(),
            t: t.to_vec(),
            budget,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ExactOutcome {
    Pass,
    Violated { witness: ExpansionWitness },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum MonteCarloOutcome {
    Violated { witness: ExpansionWitness, trial: u64 },
    NoWitnessFound { trials: u64, max_seen: usize },
}

/// `C(a, b)`, saturating at `u128::MAX`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((a - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of ordered disjoint `(S, T)` pairs with `|S| = |T| = n`.
pub fn ordered_pair_count(vertex_count: usize, n: usize) -> u128 {
    let v = vertex_count as u64;
    let first = binomial(v, n as u64);
    if n > vertex_count {
        return 0;
    }
    first.saturating_mul(binomial(v - n as u64, n as u64))
}

/// Calls `visit` on every `k`-subset of `items`, in lexicographic order.
fn for_each_combination<F>(items: &[Vertex], k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    if k > items.len() {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen: Vec<Vertex> = idx.iter().map(|&i| items[i]).collect();
    loop {
        visit(&chosen)?;
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + items.len() - k) else {
            return ControlFlow::Continue(());
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in pos..k {
            chosen[j] = items[idx[j]];
        }
    }
}

/// Enumerates `S` then `T` (each in lexicographic order of its sorted vertex
/// list) and returns the first pair whose count strictly exceeds `budget`.
pub fn check_expansion_exact(
    g: &Graph,
    n: usize,
    budget: f64,
    cap: u128,
) -> Result<ExactOutcome, ExpansionError> {
    let pairs = ordered_pair_count(g.vertex_count(), n);
    if pairs > cap {
        return Err(ExpansionError::CapExceeded { pairs, cap });
    }
    let all: Vec<Vertex> = g.vertices().collect();
    let mut s_set = VertexSet::new(g.vertex_count());
    let mut found = None;
    let _ = for_each_combination(&all, n, |s| {
        s_set.clear();
        s.iter().for_each(|&v| {
            s_set.insert(v);
        });
        // count(S, T) = e(S) + sum over v in T of |N(v) ∩ S|
        let mut inner = 0;
        let mut into_s = vec![0usize; g.vertex_count()];
        for &v in s {
            for inc in g.neighbours(v) {
                if s_set.contains(inc.neighbour) {
                    inner += (v < inc.neighbour) as usize;
                } else {
                    into_s[inc.neighbour as usize] += 1;
                }
            }
        }
        let rest: Vec<Vertex> = all.iter().copied().filter(|&v| !s_set.contains(v)).collect();
        for_each_combination(&rest, n, |t| {
            let count = inner + t.iter().map(|&v| into_s[v as usize]).sum::<usize>();
            if count as f64 > budget {
                found = Some(ExpansionWitness {
                    s: s.to_vec(),
                    t: t.to_vec(),
                    edge_count: count,
                    budget,
                });
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
    });
    Ok(match found {
        Some(witness) => ExactOutcome::Violated { witness },
        None => ExactOutcome::Pass,
    })
}

/// Draws `trials` uniform disjoint pairs; trial `i` uses its own generator
/// seeded with `derive_seed(seed, i)`, so the result does not depend on how
/// trials are scheduled across threads.
pub fn check_expansion_monte_carlo(
    g: &Graph,
    n: usize,
    budget: f64,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloOutcome, ExpansionError> {
    if trials == 0 {
        return Err(ExpansionError::NoTrials);
    }
    if 2 * n > g.vertex_count() {
        return Err(ExpansionError::TooFewVertices {
            n,
            vertex_count: g.vertex_count(),
        });
    }
    let mut max_seen = 0;
    let mut start = 0;
    while start < trials {
        let end = (start + MONTE_CARLO_BLOCK).min(trials);
        let block: Vec<(u64, usize)> = (start..end)
            .into_par_iter()
            .map(|trial| {
                let (s, t) = sample_disjoint_pair(g.vertex_count(), n, derive_seed(seed, trial));
                let count = induced_edge_count(g, &s, &t).expect("sampled sets are disjoint");
                (trial, count)
            })
            .collect();
        for (trial, count) in block {
            if count as f64 > budget {
                let (s, t) = sample_disjoint_pair(g.vertex_count(), n, derive_seed(seed, trial));
                let witness = ExpansionWitness {
                    s: s.to_vec(),
                    t: t.to_vec(),
                    edge_count: count,
                    budget,
                };
                return Ok(MonteCarloOutcome::Violated { witness, trial });
            }
            max_seen = max_seen.max(count);
        }
        start = end;
    }
    Ok(MonteCarloOutcome::NoWitnessFound { trials, max_seen })
}

/// A uniformly random ordered pair of disjoint `n`-subsets of `[0, vertex_count)`.
pub fn sample_disjoint_pair(vertex_count: usize, n: usize, seed: u64) -> (VertexSet, VertexSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, vertex_count, 2 * n).into_vec();
    let (s, t) = picked.split_at(n);
    let to_set = |vs: &[usize]| {
        VertexSet::from_vertices(vertex_count, vs.iter().map(|&v| v as Vertex))
            .expect("sampled indices are in range")
    };
    (to_set(s), to_set(t))
}

/// Recomputes every witness invariant: equal cardinalities, distinct
/// in-range vertices, disjointness, the stored count, and `count >= budget`.
pub fn validate_witness(g: &Graph, w: &ExpansionWitness) -> bool {
    if w.s.len() != w.t.len() {
        return false;
    }
    let (Ok(s), Ok(t)) = (
        VertexSet::from_vertices(g.vertex_count(), w.s.iter().copied()),
        VertexSet::from_vertices(g.vertex_count(), w.t.iter().copied()),
    ) else {
        return false;
    };
    if s.len() != w.s.len() || t.len() != w.t.len() {
        return false;
    }
    match induced_edge_count(g, &s, &t) {
        Ok(count) => count == w.edge_count && count as f64 >= w.budget,
        Err(_) => false,
    }
}

/// Grows `s` and then `t` to `n` vertices each using the lowest-index
/// vertices outside `s ∪ t`. The qualifying edge count cannot decrease.
/// `None` if either set already exceeds `n`, the sets overlap, or there are
/// fewer than `2n` vertices.
pub fn pad_pair(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    n: usize,
) -> Option<(VertexSet, VertexSet)> {
    if s.len() > n || t.len() > n || 2 * n > g.vertex_count() || !s.is_disjoint(t) {
        return None;
    }
    let (mut s, mut t) = (s.clone(), t.clone());
    let mut free = g.vertices().filter(|&v| !s.contains(v) && !t.contains(v)).collect::<Vec<_>>().into_iter();
    while s.len() < n {
        s.insert(free.next()?);
    }
    while t.len() < n {
        t.insert(free.next()?);
    }
    Some((s, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(universe: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(universe, vs.iter().copied()).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2800, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
        assert_eq!(binomial(2800, 200), u128::MAX);
        assert_eq!(ordered_pair_count(4, 2), 6);
        assert_eq!(ordered_pair_count(3, 2), 0);
    }

    #[test]
    fn combinations_in_lexicographic_order() {
        let mut seen = Vec::new();
        let _ = for_each_combination(&[1, 4, 6, 9], 2, |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(
            seen,
            vec![vec![1, 4], vec![1, 6], vec![1, 9], vec![4, 6], vec![4, 9], vec![6, 9]]
        );
        let mut empty = 0;
        let _ = for_each_combination(&[1, 2], 0, |_| {
            empty += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn exact_k4_single_vertices() {
        let out = check_expansion_exact(&Graph::complete(4), 1, 0.5, DEFAULT_ENUMERATION_CAP);
        let expected = ExpansionWitness {
            s: vec![0],
            t: vec![1],
            edge_count: 1,
            budget: 0.5,
        };
        assert_eq!(out, Ok(ExactOutcome::Violated { witness: expected }));
    }

    #[test]
    fn exact_passes() {
        let cap = DEFAULT_ENUMERATION_CAP;
        assert_eq!(check_expansion_exact(&Graph::empty(6), 2, 0.1, cap), Ok(ExactOutcome::Pass));
        assert_eq!(check_expansion_exact(&Graph::complete(4), 2, 5.0, cap), Ok(ExactOutcome::Pass));
        assert!(matches!(
            check_expansion_exact(&Graph::complete(4), 2, 4.5, cap),
            Ok(ExactOutcome::Violated { .. })
        ));
    }

    #[test]
    fn exact_respects_cap() {
        let g = Graph::empty(40);
        assert!(matches!(
            check_expansion_exact(&g, 10, 1.0, DEFAULT_ENUMERATION_CAP),
            Err(ExpansionError::CapExceeded { .. })
        ));
    }

    #[test]
    fn monte_carlo_cases() {
        let out = check_expansion_monte_carlo(&Graph::complete(4), 1, 0.5, 50, 9).unwrap();
        match out {
            MonteCarloOutcome::Violated { witness, trial } => {
                assert_eq!(trial, 0);
                assert!(validate_witness(&Graph::complete(4), &witness));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            check_expansion_monte_carlo(&Graph::empty(10), 3, 0.5, 100, 1),
            Ok(MonteCarloOutcome::NoWitnessFound { trials: 100, max_seen: 0 })
        );
        assert!(check_expansion_monte_carlo(&Graph::empty(5), 3, 0.5, 1, 1).is_err());
        assert!(check_expansion_monte_carlo(&Graph::empty(5), 1, 0.5, 0, 1).is_err());
    }

    #[test]
    fn witness_validation() {
        let g = Graph::complete(4);
        let ExactOutcome::Violated { witness } =
            check_expansion_exact(&g, 2, 4.5, DEFAULT_ENUMERATION_CAP).unwrap()
        else {
            panic!("expected a violation")
        };
        assert!(validate_witness(&g, &witness));

        let mut overlapping = witness.clone();
        overlapping.t[0] = overlapping.s[0];
        assert!(!validate_witness(&g, &overlapping));

        let mut inflated = witness.clone();
        inflated.edge_count += 1;
        assert!(!validate_witness(&g, &inflated));

        let mut too_high = witness.clone();
        too_high.budget = 6.0;
        assert!(!validate_witness(&g, &too_high));

        let mut out_of_range = witness;
        out_of_range.t[1] = 9;
        assert!(!validate_witness(&g, &out_of_range));
    }

    #[test]
    fn padding_uses_lowest_free_vertices() {
        let g = Graph::path(8);
        let (s, t) = pad_pair(&g, &set(8, &[5]), &set(8, &[2]), 3).unwrap();
        assert_eq!(s.to_vec(), vec![0, 1, 5]);
        assert_eq!(t.to_vec(), vec![2, 3, 4]);
        assert!(pad_pair(&g, &set(8, &[5]), &set(8, &[2]), 5).is_none());
        assert!(pad_pair(&g, &set(8, &[1, 2]), &set(8, &[3]), 1).is_none());
    }

    #[test]
    fn witness_json_field_names() {
        let w = ExpansionWitness {
            s: vec![0],
            t: vec![1],
            edge_count: 1,
            budget: 0.5,
        };
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"S":[0],"T":[1],"edge_count":1,"budget":0.5}"#
        );
    }
}

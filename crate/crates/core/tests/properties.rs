mod common;

use common::*;
use proptest::prelude::*;
use sizeramsey::bounds::{expected_pair_edges, union_bound_coefficient};
use sizeramsey::expansion::{
    check_expansion_exact, check_expansion_monte_carlo, sample_disjoint_pair, validate_witness,
    ExactOutcome, MonteCarloOutcome, DEFAULT_ENUMERATION_CAP,
};
use sizeramsey::format::{graph_from_json_str, graph_to_json};
use sizeramsey::{
    build_host, derive_seed, induced_edge_count, monochromatic_subgraph, sample_gnp,
    RamseyParams, VertexSet,
};

proptest! {
    #[test]
    fn induced_count_grows_with_t(g in arb_graph(12), split in any::<u64>(), extra in any::<u64>()) {
        let v = g.vertex_count();
        let s = VertexSet::from_vertices(v, g.vertices().filter(|x| split >> x & 1 == 1)).unwrap();
        let t = VertexSet::from_vertices(v, g.vertices().filter(|x| split >> x & 1 == 0 && extra >> x & 1 == 1)).unwrap();
        let t_big = VertexSet::from_vertices(v, g.vertices().filter(|x| split >> x & 1 == 0)).unwrap();
        let small = induced_edge_count(&g, &s, &t).unwrap();
        let big = induced_edge_count(&g, &s, &t_big).unwrap();
        prop_assert!(small <= big);
    }

    #[test]
    fn induced_count_plus_inside_t_is_union(g in arb_graph(12), split in any::<u64>(), keep in any::<u64>()) {
        let v = g.vertex_count();
        let s = VertexSet::from_vertices(v, g.vertices().filter(|x| split >> x & 1 == 1 && keep >> x & 1 == 1)).unwrap();
        let t = VertexSet::from_vertices(v, g.vertices().filter(|x| split >> x & 1 == 0 && keep >> x & 1 == 1)).unwrap();
        let union = VertexSet::from_vertices(v, s.iter().chain(t.iter())).unwrap();
        let lhs = induced_edge_count(&g, &s, &t).unwrap() + edges_inside(&g, &t);
        prop_assert_eq!(lhs, edges_inside(&g, &union));
        prop_assert_eq!(
            induced_edge_count(&g, &s, &t).unwrap(),
            naive_pair_count(&g, &s.to_vec(), &t.to_vec())
        );
    }

    #[test]
    fn colour_classes_partition_edges((g, c) in arb_coloured_graph(10, 4)) {
        let mut seen = vec![0u32; g.edge_count()];
        for colour in 0..c.r() {
            let (class, map) = monochromatic_subgraph(&g, &c, colour).unwrap();
            prop_assert_eq!(class.vertex_count(), g.vertex_count());
            prop_assert_eq!(class.edge_count(), map.len());
            prop_assert!(map.windows(2).all(|w| w[0] < w[1]));
            for (k, &orig) in map.iter().enumerate() {
                prop_assert_eq!(class.edge(k), g.edge(orig));
                seen[orig] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&x| x == 1));
    }

    #[test]
    fn graph_json_round_trip(g in arb_graph(15)) {
        prop_assert_eq!(graph_from_json_str(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn adjacency_is_consistent(g in arb_graph(15)) {
        for v in g.vertices() {
            let list = g.neighbours(v);
            prop_assert!(list.windows(2).all(|w| w[0].neighbour < w[1].neighbour));
            for inc in list {
                let (a, b) = g.edge(inc.edge);
                prop_assert!((a, b) == (v.min(inc.neighbour), v.max(inc.neighbour)));
            }
        }
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }
}

#[test]
fn sampler_pair_rates_and_mean() {
    let (v, p, samples) = (30usize, 0.3, 2000u64);
    let pairs = v * (v - 1) / 2;
    let mut hits = vec![0u32; v * v];
    let mut total = 0usize;
    for i in 0..samples {
        let g = sample_gnp(v, p, derive_seed(2024, i)).unwrap();
        total += g.edge_count();
        for &(a, b) in g.edges() {
            hits[a as usize * v + b as usize] += 1;
        }
    }
    let sd = (p * (1.0 - p) / samples as f64).sqrt();
    for a in 0..v {
        for b in a + 1..v {
            let rate = hits[a * v + b] as f64 / samples as f64;
            assert!((rate - p).abs() <= 4.0 * sd, "pair ({a},{b}) rate {rate}");
        }
    }
    let mean = total as f64 / samples as f64;
    let se = (pairs as f64 * p * (1.0 - p) / samples as f64).sqrt();
    assert!((mean - pairs as f64 * p).abs() <= 3.0 * se, "mean {mean}");
}

#[test]
fn host_serialization_is_deterministic() {
    let params = RamseyParams::new(50, 2).unwrap();
    let (a, ra) = build_host(&params, 77, 100).unwrap();
    let (b, rb) = build_host(&params, 77, 100).unwrap();
    assert_eq!(graph_to_json(&a), graph_to_json(&b));
    assert_eq!(serde_json::to_string(&ra).unwrap(), serde_json::to_string(&rb).unwrap());
}

#[test]
fn pair_expectation_matches_sampling_at_desk_scale() {
    // r = 2, n = 40: p = 22 ln 2 / 40 ~ 0.381, host on 560 vertices.
    let params = RamseyParams::new(40, 2).unwrap();
    let hosts = 200u64;
    let pairs_per_host = 5u64;
    let mut counts = Vec::new();
    for h in 0..hosts {
        let g = sample_gnp(params.host_vertices(), params.edge_probability(), derive_seed(11, h)).unwrap();
        for j in 0..pairs_per_host {
            let (s, t) = sample_disjoint_pair(g.vertex_count(), 40, derive_seed(12, h * pairs_per_host + j));
            counts.push(induced_edge_count(&g, &s, &t).unwrap() as f64);
        }
    }
    let k = counts.len() as f64;
    let mean = counts.iter().sum::<f64>() / k;
    let var = counts.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
    let se = (var / k).sqrt();
    let expected = expected_pair_edges(&params);
    assert!((mean - expected).abs() <= 3.0 * se, "mean {mean} vs {expected} (se {se})");
}

#[test]
fn union_coefficient_negative_on_log_sweep() {
    let mut r = 2f64;
    while r <= 1e6 {
        let ri = r.round() as u32;
        assert!(union_bound_coefficient(ri) < 0.0, "r = {ri}");
        r *= 1.05;
    }
    assert!(union_bound_coefficient(1_000_000) < 0.0);
}

fn small_graph_cases() -> Vec<sizeramsey::Graph> {
    (0..200u64)
        .map(|i| {
            let v = 2 + (i % 7) as usize;
            let p = [0.2, 0.4, 0.6, 0.8][(i / 7 % 4) as usize];
            sample_gnp(v, p, derive_seed(99, i)).unwrap()
        })
        .collect()
}

#[test]
fn exact_checker_matches_naive_enumeration() {
    for g in small_graph_cases() {
        for n in 1..=3 {
            for budget in [0.5, 1.5, 2.5, 5.0] {
                let naive = naive_disjoint_pairs(g.vertex_count(), n)
                    .into_iter()
                    .map(|(s, t)| {
                        let c = naive_pair_count(&g, &s, &t);
                        (s, t, c)
                    })
                    .find(|(_, _, c)| *c as f64 > budget);
                let exact = check_expansion_exact(&g, n, budget, DEFAULT_ENUMERATION_CAP).unwrap();
                match (exact, naive) {
                    (ExactOutcome::Pass, None) => {}
                    (ExactOutcome::Violated { witness }, Some(_)) => {
                        assert_eq!(witness.edge_count, naive_pair_count(&g, &witness.s, &witness.t));
                        assert!(witness.edge_count as f64 > budget);
                        assert!(validate_witness(&g, &witness));
                    }
                    (e, n) => panic!("disagreement on {g:?}: {e:?} vs {n:?}"),
                }
            }
        }
    }
}

#[test]
fn monte_carlo_witnesses_imply_exact_witnesses() {
    for (i, g) in small_graph_cases().into_iter().enumerate() {
        for n in 1..=3usize {
            if 2 * n > g.vertex_count() {
                continue;
            }
            let per_side = sizeramsey::expansion::binomial(g.vertex_count() as u64, n as u64) as u64;
            let trials = 10 * per_side * per_side;
            for budget in [0.5, 1.5, 2.5] {
                let mc = check_expansion_monte_carlo(&g, n, budget, trials, i as u64).unwrap();
                let exact = check_expansion_exact(&g, n, budget, DEFAULT_ENUMERATION_CAP).unwrap();
                match mc {
                    MonteCarloOutcome::Violated { witness, .. } => {
                        assert!(validate_witness(&g, &witness));
                        assert!(matches!(exact, ExactOutcome::Violated { .. }));
                    }
                    MonteCarloOutcome::NoWitnessFound { max_seen, .. } => {
                        assert!(max_seen as f64 <= budget);
                    }
                }
            }
        }
    }
}

#[test]
fn exact_pass_is_monotone_in_budget() {
    for g in small_graph_cases().into_iter().take(80) {
        for n in 1..=2 {
            let budgets = [0.5, 1.0, 1.5, 2.5, 3.0, 5.0, 8.0];
            let mut passed = false;
            for b in budgets {
                let pass = check_expansion_exact(&g, n, b, DEFAULT_ENUMERATION_CAP).unwrap() == ExactOutcome::Pass;
                assert!(!passed || pass, "pass at a lower budget but not at {b}");
                passed |= pass;
            }
        }
    }
}

#[test]
fn vertex_set_cardinality_is_cached_correctly() {
    let mut s = set(10, &[1, 3, 5]);
    assert!(!s.insert(3));
    assert!(s.insert(4));
    assert!(s.remove(1));
    assert!(!s.remove(1));
    assert_eq!(s.len(), s.iter().count());
    assert_eq!(s.to_vec(), vec![3, 4, 5]);
}

mod common;

use common::*;
use proptest::prelude::*;
use sizeramsey::dfs::majority_colour;
use sizeramsey::oracle::{canonical_colouring_count, colouring_count, contains_path};
use sizeramsey::{
    adversary_colour, arrows_decide, derive_seed, dfs_grow, find_monochromatic_path,
    longest_path_exact, monochromatic_subgraph, phase_run, sample_gnp, validate_witness,
    verify_path, Colouring, DfsOutcome, DfsState, Enumeration, Graph, StartPolicy, Strategy as Adversary,
    Transition,
};

fn replay_checked(g: &Graph) {
    let mut state = DfsState::new(g, StartPolicy::LowestIndex);
    let mut steps = Vec::new();
    state.check_invariants().unwrap();
    while let Some(t) = {
        let before = (state.unexplored_count(), state.dead().len());
        let t = state.step();
        if t.is_some() {
            let after = (state.unexplored_count(), state.dead().len());
            let progressed = (after.0 + 1 == before.0 && after.1 == before.1)
                || (after.0 == before.0 && after.1 == before.1 + 1);
            assert!(progressed, "{before:?} -> {after:?}");
        }
        t
    } {
        state.check_invariants().unwrap();
        steps.push(t);
    }
    assert!(state.is_exhausted());
    assert!(steps.len() <= 2 * g.vertex_count());
    assert_eq!(steps, dfs_grow(g, StartPolicy::LowestIndex, None).transitions);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn every_transition_keeps_invariants(g in arb_graph(14)) {
        replay_checked(&g);
    }

    #[test]
    fn dfs_longest_is_a_real_path(g in arb_graph(10)) {
        let grown = dfs_grow(&g, StartPolicy::LowestIndex, None);
        let (best, _) = longest_path_exact(&g, 16).unwrap();
        prop_assert!(grown.longest.len() <= best);
        prop_assert!(grown.longest.len() >= 1.min(g.vertex_count()));
        let c = Colouring::constant(&g, 1, 0).unwrap();
        prop_assert!(verify_path(&g, &c, &grown.longest, grown.longest.len(), 0));
    }

    #[test]
    fn longest_path_matches_naive_scan(g in arb_graph(7)) {
        let (len, path) = longest_path_exact(&g, 16).unwrap();
        prop_assert_eq!(len, naive_longest_path(&g));
        prop_assert_eq!(path.len(), len);
        prop_assert!(verify_path(&g, &Colouring::constant(&g, 1, 0).unwrap(), &path, len, 0));
        for n in 0..=8 {
            prop_assert_eq!(contains_path(&g, n).unwrap(), n <= len);
        }
    }

    #[test]
    fn phases_partition_the_class((g, c) in arb_coloured_graph(16, 3), n in 2usize..6, phases in 1usize..8) {
        for colour in 0..c.r() {
            let cert = phase_run(&g, &c, colour, n, phases).unwrap();
            let (class, original) = monochromatic_subgraph(&g, &c, colour).unwrap();
            match cert.outcome {
                DfsOutcome::PathFound => {
                    prop_assert!(verify_path(&g, &c, cert.path.as_ref().unwrap(), n, colour));
                }
                _ => {
                    let mut all: Vec<usize> = cert.phase_log.iter().flat_map(|rec| rec.f_edges.clone()).collect();
                    all.sort_unstable();
                    prop_assert_eq!(all, original.clone());
                    prop_assert_eq!(class.edge_count(), cert.colour_class_size);
                    for rec in &cert.phase_log {
                        prop_assert!(rec.t.len() < n);
                        if rec.index < cert.phase_log.len() {
                            prop_assert_eq!(rec.s.len(), n);
                        }
                    }
                    if let Some(w) = cert.expansion_witness(&g) {
                        prop_assert!(validate_witness(&g, &w));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_enumeration_agrees_with_full(g in arb_graph(6).prop_filter("at most six edges", |g| g.edge_count() <= 6), n in 2usize..5, r in 1u32..=3) {
        let full = arrows_decide(&g, n, r, Enumeration::Exhaustive, u128::MAX).unwrap();
        let canon = arrows_decide(&g, n, r, Enumeration::Canonicalized, u128::MAX).unwrap();
        prop_assert_eq!(full.arrows, canon.arrows);
        prop_assert!(full.colourings_examined as u128 <= colouring_count(g.edge_count(), r, Enumeration::Exhaustive));
        prop_assert!(canon.colourings_examined as u128 <= canonical_colouring_count(g.edge_count(), r));
        for verdict in [full, canon] {
            match verdict.counterexample {
                Some(c) => {
                    prop_assert!(!verdict.arrows);
                    for colour in 0..r {
                        let (class, _) = monochromatic_subgraph(&g, &c, colour).unwrap();
                        prop_assert!(longest_path_exact(&class, 16).unwrap().0 < n);
                    }
                }
                None => prop_assert!(verdict.arrows),
            }
        }
    }
}

#[test]
fn adversaries_on_triangle() {
    // Lowest-index DFS misses P_3 only when the majority pair is a star centred at 0.
    let k3 = Graph::complete(3);
    let centred_at_zero = |c: &Colouring, colour| {
        (0..3).filter(|&k| c.colour(k) == colour).collect::<Vec<_>>() == vec![0, 1]
    };
    for strategy in Adversary::ALL {
        for seed in 0..20 {
            let c = adversary_colour(&k3, 3, 2, strategy, seed).unwrap();
            let cert = find_monochromatic_path(&k3, &c, 3, true).unwrap();
            let verdict = arrows_decide(&k3, 3, 2, Enumeration::Exhaustive, u128::MAX).unwrap();
            assert!(verdict.arrows);
            if cert.outcome == DfsOutcome::PathFound {
                assert!(verify_path(&k3, &c, cert.path.as_ref().unwrap(), 3, cert.colour));
            } else {
                assert!(centred_at_zero(&c, majority_colour(&c)), "{strategy} seed {seed}");
            }
        }
    }
}

#[test]
fn majority_class_has_at_least_average_size() {
    for i in 0..100 {
        let g = sample_gnp(40, 0.2, derive_seed(5, i)).unwrap();
        let r = 2 + (i % 4) as u32;
        let c = adversary_colour(&g, 10, r, Adversary::UniformRandom, i).unwrap();
        let m = majority_colour(&c);
        assert!(c.class_sizes()[m as usize] * r as usize >= g.edge_count());
    }
}

#[test]
fn growth_stops_at_target() {
    let g = Graph::path(10);
    let grown = dfs_grow(&g, StartPolicy::LowestIndex, Some(4));
    assert!(grown.reached_target);
    assert_eq!(grown.longest.vertices, vec![0, 1, 2, 3]);
    assert_eq!(grown.transitions.first(), Some(&Transition::Restart { vertex: 0 }));
}

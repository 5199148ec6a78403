//! Edge colourings meant to make monochromatic paths hard to find.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Colour, Colouring, Graph};
use crate::oracle::{longest_path_exact, OracleError};

/// Up to this many vertices the greedy breaker scores colours by the exact
/// longest path; above it, by the running endpoint-depth estimate.
pub const GREEDY_EXACT_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Independent uniform colours.
    UniformRandom,
    /// Each edge in turn gets the colour whose class would end up with the
    /// shortest longest path.
    GreedyPathBreaker,
    /// Edge `k` gets colour `k mod r`.
    BalancedPartition,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::UniformRandom,
        Strategy::GreedyPathBreaker,
        Strategy::BalancedPartition,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::UniformRandom => "uniform-random",
            Strategy::GreedyPathBreaker => "greedy-path-breaker",
            Strategy::BalancedPartition => "balanced-partition",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| OracleError::UnknownStrategy(s.to_string()))
    }
}

pub fn adversary_colour(
    g: &Graph,
    n: usize,
    r: u32,
    strategy: Strategy,
    seed: u64,
) -> Result<Colouring, OracleError> {
    if r == 0 {
        return Err(OracleError::InvalidArgument("r must be at least 1"));
    }
    let colours = match strategy {
        Strategy::UniformRandom => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..g.edge_count()).map(|_| rng.gen_range(0..r)).collect()
        }
        Strategy::BalancedPartition => (0..g.edge_count()).map(|k| k as Colour % r).collect(),
        Strategy::GreedyPathBreaker if g.vertex_count() <= GREEDY_EXACT_VERTICES => {
            greedy_exact(g, n, r)?
        }
        Strategy::GreedyPathBreaker => greedy_estimated(g, n, r),
    };
    Ok(Colouring::new(g, r, colours).expect("strategies emit colours below r"))
}

fn greedy_exact(g: &Graph, n: usize, r: u32) -> Result<Vec<Colour>, OracleError> {
    let mut classes: Vec<Vec<(u32, u32)>> = vec![Vec::new(); r as usize];
    let mut colours = Vec::with_capacity(g.edge_count());
    for &edge in g.edges() {
        let mut best = (usize::MAX, 0);
        for colour in 0..r {
            let class = &classes[colour as usize];
            let trial = Graph::new(g.vertex_count(), class.iter().copied().chain([edge]))
                .expect("subgraph of a simple graph");
            let (len, _) = longest_path_exact(&trial, GREEDY_EXACT_VERTICES)?;
            let score = len.min(n.max(1));
            if score < best.0 {
                best = (score, colour);
            }
        }
        classes[best.1 as usize].push(edge);
        colours.push(best.1);
    }
    Ok(colours)
}

/// `depth[c][v]` estimates the longest colour-`c` path ending at `v`, in
/// vertices. Joining two such paths through a new edge scores as their sum.
fn greedy_estimated(g: &Graph, n: usize, r: u32) -> Vec<Colour> {
    let cap = n.max(1);
    let mut depth = vec![vec![1usize; g.vertex_count()]; r as usize];
    let mut longest = vec![1usize; r as usize];
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (u, v) = (u as usize, v as usize);
            let score = |c: usize| longest[c].max(depth[c][u] + depth[c][v]).min(cap);
            let colour = (0..r as usize).min_by_key(|&c| (score(c), c)).unwrap();
            let d = &mut depth[colour];
            let (du, dv) = (d[u], d[v]);
            d[u] = du.max(dv + 1);
            d[v] = dv.max(du + 1);
            longest[colour] = longest[colour].max(du + dv);
            colour as Colour
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::sample_gnp;

    #[test]
    fn parses_names() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert_eq!(
            "rainbow".parse::<Strategy>(),
            Err(OracleError::UnknownStrategy("rainbow".into()))
        );
    }

    #[test]
    fn one_colour_is_all_zero() {
        let g = sample_gnp(30, 0.3, 1).unwrap();
        for s in Strategy::ALL {
            let c = adversary_colour(&g, 5, 1, s, 8).unwrap();
            assert!(c.colours().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn balanced_round_robin() {
        let g = Graph::path(5);
        let c = adversary_colour(&g, 3, 2, Strategy::BalancedPartition, 0).unwrap();
        assert_eq!(c.colours(), &[0, 1, 0, 1]);
    }

    #[test]
    fn greedy_exact_breaks_a_path() {
        // P_5 coloured greedily with 2 colours, target 3: alternate colours.
        let g = Graph::path(5);
        let c = adversary_colour(&g, 3, 2, Strategy::GreedyPathBreaker, 0).unwrap();
        assert_eq!(c.colours(), &[0, 1, 0, 1]);
    }

    #[test]
    fn greedy_estimate_is_deterministic() {
        let g = sample_gnp(200, 0.05, 3).unwrap();
        let a = adversary_colour(&g, 20, 3, Strategy::GreedyPathBreaker, 1).unwrap();
        let b = adversary_colour(&g, 20, 3, Strategy::GreedyPathBreaker, 99).unwrap();
        assert_eq!(a, b);
        let sizes = a.class_sizes();
        assert!(sizes.iter().all(|&s| s > 0), "{sizes:?}");
    }

    #[test]
    fn uniform_depends_on_seed() {
        let g = sample_gnp(60, 0.2, 3).unwrap();
        let a = adversary_colour(&g, 5, 2, Strategy::UniformRandom, 1).unwrap();
        let b = adversary_colour(&g, 5, 2, Strategy::UniformRandom, 1).unwrap();
        let c = adversary_colour(&g, 5, 2, Strategy::UniformRandom, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}

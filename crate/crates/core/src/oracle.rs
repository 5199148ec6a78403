//! Exhaustive ground truth for small instances: exact longest paths,
//! the arrow relation `G -> (P_n)_r` by colouring enumeration, and the
//! smallest arrowing graph within a vertex cap.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Colour, Colouring, Graph, Path, Vertex};

/// Default vertex cap for [`longest_path_exact`].
pub const DEFAULT_PATH_CAP: usize = 16;
/// Default cap on colourings visited by [`arrows_decide`]: all canonical
/// 2-colourings of 20 edges.
pub const DEFAULT_COLOURING_CAP: u128 = 1 << 19;
/// Largest vertex cap accepted by [`min_size_ramsey`].
pub const MAX_SEARCH_VERTICES: usize = 7;

const MAX_BITMASK_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },
    #[error("no graph on at most {vertex_cap} vertices arrows P_{n} with {r} colours")]
    NoArrowingGraph { n: usize, r: u32, vertex_cap: usize },
    #[error("unknown colouring strategy {0:?}")]
    UnknownStrategy(String),
    #[error("{0}")]
    InvalidArgument(&'static str),
}

/// Adjacency as one bitmask per vertex; requires at most 64 vertices.
fn adjacency_bits(vertex_count: usize, edges: impl Iterator<Item = (Vertex, Vertex)>) -> Vec<u64> {
    let mut adj = vec![0u64; vertex_count];
    for (u, v) in edges {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    adj
}

/// For every vertex subset `M`, the set of vertices at which some simple
/// path covering exactly `M` ends.
fn path_end_table(adj: &[u64]) -> Vec<u32> {
    let count = adj.len();
    let mut ends = vec![0u32; 1 << count];
    for v in 0..count {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..ends.len() {
        let mut frontier = ends[mask];
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let mut next = adj[v] as u32 & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    ends
}

/// Exact longest simple path by dynamic programming over vertex subsets.
///
/// Returns the number of vertices and the lexicographically least vertex
/// sequence among all longest paths. An empty graph gives `(0, [])`.
pub fn longest_path_exact(g: &Graph, cap: usize) -> Result<(usize, Path), OracleError> {
    let count = g.vertex_count();
    if count > cap.min(MAX_BITMASK_VERTICES) {
        return Err(OracleError::CapExceeded {
            what: "vertex count",
            value: count as u128,
            cap: cap.min(MAX_BITMASK_VERTICES) as u128,
        });
    }
    if count == 0 {
        return Ok((0, Path::default()));
    }
    let adj = adjacency_bits(count, g.edges().iter().copied());
    let ends = path_end_table(&adj);
    let best = (1..ends.len())
        .filter(|&m| ends[m] != 0)
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);

    // Can a path on `len` vertices start at `v` while avoiding `forbidden`?
    let starts_at = |v: usize, len: usize, forbidden: u32| {
        (1..ends.len()).any(|m| {
            m as u32 & forbidden == 0 && m.count_ones() as usize == len && ends[m] >> v & 1 == 1
        })
    };
    let mut vertices = Vec::with_capacity(best);
    let mut used = 0u32;
    let first = (0..count).find(|&v| starts_at(v, best, 0)).expect("a longest path exists");
    vertices.push(first as Vertex);
    used |= 1 << first;
    while vertices.len() < best {
        let head = *vertices.last().unwrap() as usize;
        let remaining = best - vertices.len();
        let next = (0..count)
            .filter(|&w| adj[head] >> w & 1 == 1 && used >> w & 1 == 0)
            .find(|&w| starts_at(w, remaining, used))
            .expect("prefix of a longest path extends");
        vertices.push(next as Vertex);
        used |= 1 << next;
    }
    let path = Path::from_vertices(g, vertices).expect("constructed along edges");
    Ok((best, path))
}

/// Whether the graph given by bitmask adjacency has a simple path on `n` vertices.
fn has_path_bits(adj: &[u64], n: usize) -> bool {
    fn extend(adj: &[u64], head: usize, visited: u64, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut next = adj[head] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if extend(adj, w, visited | 1 << w, remaining - 1) {
                return true;
            }
        }
        false
    }
    if n == 0 {
        return true;
    }
    if n > 1 && adj.iter().all(|&a| a == 0) {
        return false;
    }
    (0..adj.len()).any(|v| extend(adj, v, 1 << v, n - 1))
}

/// Whether `g` contains a path on `n` vertices (at most 64 vertices).
pub fn contains_path(g: &Graph, n: usize) -> Result<bool, OracleError> {
    if g.vertex_count() > 64 {
        return Err(OracleError::CapExceeded {
            what: "vertex count",
            value: g.vertex_count() as u128,
            cap: 64,
        });
    }
    Ok(has_path_bits(
        &adjacency_bits(g.vertex_count(), g.edges().iter().copied()),
        n,
    ))
}

/// How colourings are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Enumeration {
    /// All `r^|E|` colourings.
    Exhaustive,
    /// One colouring per colour permutation class: colours first appear in
    /// increasing order along the edge sequence.
    Canonicalized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowVerdict {
    pub arrows: bool,
    pub counterexample: Option<Colouring>,
    #[serde(rename = "examined")]
    pub colourings_examined: u64,
    pub method: Enumeration,
}

/// `S(m, k)` for all `k <= r`, summed: the number of canonical colourings.
pub fn canonical_colouring_count(edges: usize, r: u32) -> u128 {
    if edges == 0 {
        return 1;
    }
    let r = r as usize;
    // Stirling numbers of the second kind, row by row, saturating.
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for _ in 0..edges {
        for k in (1..=r).rev() {
            row[k] = row[k - 1].saturating_add((k as u128).saturating_mul(row[k]));
        }
        row[0] = 0;
    }
    row.iter().fold(0u128, |acc, &x| acc.saturating_add(x))
}

pub fn colouring_count(edges: usize, r: u32, method: Enumeration) -> u128 {
    match method {
        Enumeration::Exhaustive => (0..edges).fold(1u128, |acc, _| acc.saturating_mul(r as u128)),
        Enumeration::Canonicalized => canonical_colouring_count(edges, r),
    }
}

/// Decides `G -> (P_n)_r` by enumerating colourings; the first colouring
/// with no monochromatic `P_n` is returned as a counterexample.
pub fn arrows_decide(
    g: &Graph,
    n: usize,
    r: u32,
    method: Enumeration,
    cap: u128,
) -> Result<ArrowVerdict, OracleError> {
    if r == 0 {
        return Err(OracleError::InvalidArgument("r must be at least 1"));
    }
    if g.vertex_count() > 64 {
        return Err(OracleError::CapExceeded {
            what: "vertex count",
            value: g.vertex_count() as u128,
            cap: 64,
        });
    }
    let total = colouring_count(g.edge_count(), r, method);
    if total > cap {
        return Err(OracleError::CapExceeded {
            what: "colourings to examine",
            value: total,
            cap,
        });
    }
    let mut search = ArrowSearch {
        g,
        n,
        r,
        method,
        colours: vec![0; g.edge_count()],
        examined: 0,
    };
    let counterexample = search.run(0, 0);
    Ok(ArrowVerdict {
        arrows: counterexample.is_none(),
        counterexample: counterexample
            .map(|colours| Colouring::new(g, r, colours).expect("enumerated colours are in range")),
        colourings_examined: search.examined,
        method,
    })
}

struct ArrowSearch<'g> {
    g: &'g Graph,
    n: usize,
    r: u32,
    method: Enumeration,
    colours: Vec<Colour>,
    examined: u64,
}

impl ArrowSearch<'_> {
    /// Depth-first over edge `edge` onwards; `used` is the number of colours
    /// already introduced (only meaningful when canonicalized).
    fn run(&mut self, edge: usize, used: u32) -> Option<Vec<Colour>> {
        if edge == self.colours.len() {
            self.examined += 1;
            return (!self.has_monochromatic_path()).then(|| self.colours.clone());
        }
        let limit = match self.method {
            Enumeration::Exhaustive => self.r,
            Enumeration::Canonicalized => (used + 1).min(self.r),
        };
        for colour in 0..limit {
            self.colours[edge] = colour;
            if let Some(found) = self.run(edge + 1, used.max(colour + 1)) {
                return Some(found);
            }
        }
        None
    }

    fn has_monochromatic_path(&self) -> bool {
        (0..self.r).any(|colour| {
            let class = self
                .g
                .edges()
                .iter()
                .zip(&self.colours)
                .filter(|(_, &c)| c == colour)
                .map(|(&e, _)| e);
            has_path_bits(&adjacency_bits(self.g.vertex_count(), class), self.n)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeRamseyResult {
    /// Fewest edges of an arrowing graph among those examined.
    pub m: usize,
    /// An arrowing graph with `m` edges and, among those, the fewest
    /// non-isolated vertices; isolated vertices are dropped.
    pub witness: Graph,
    /// Non-isomorphic graphs tested.
    pub graphs_examined: u64,
    /// The search covered every graph on at most this many vertices, so `m`
    /// is a true minimum only within that class.
    pub vertex_cap: usize,
}

/// Pair index of `{i, j}` (`i < j`) among the `C(k, 2)` pairs of `k` vertices.
fn pair_bit(i: usize, j: usize, k: usize) -> u32 {
    debug_assert!(i < j && j < k);
    (i * (2 * k - i - 1) / 2 + (j - i - 1)) as u32
}

/// Canonical code of a graph on `k <= 7` vertices given as an edge bitmask
/// over pairs: the smallest code over all relabellings that list vertices
/// by non-increasing degree.
fn canonical_code(code: u32, k: usize) -> u32 {
    let has = |i: usize, j: usize| {
        let (a, b) = (i.min(j), i.max(j));
        code >> pair_bit(a, b, k) & 1 == 1
    };
    let degree: Vec<usize> = (0..k)
        .map(|v| (0..k).filter(|&w| w != v && has(v, w)).count())
        .collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(g) if degree[g[0]] == degree[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u32::MAX;
    let mut labelling = Vec::with_capacity(k);
    permute_groups(&groups, 0, &mut labelling, &mut |perm: &[usize]| {
        let mut c = 0u32;
        for i in 0..k {
            for j in i + 1..k {
                if has(perm[i], perm[j]) {
                    c |= 1 << pair_bit(i, j, k);
                }
            }
        }
        best = best.min(c);
    });
    best
}

/// Visits every concatenation of per-group permutations.
fn permute_groups(
    groups: &[Vec<usize>],
    at: usize,
    prefix: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if at == groups.len() {
        visit(prefix);
        return;
    }
    let mut group = groups[at].clone();
    let len = group.len();
    heap_permutations(&mut group, len, &mut |perm| {
        let base = prefix.len();
        prefix.extend_from_slice(perm);
        permute_groups(groups, at + 1, prefix, visit);
        prefix.truncate(base);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            items.swap(j, k - 1);
        }
    }
}

fn graph_from_code(code: u32, k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if code >> pair_bit(i, j, k) & 1 == 1 {
                edges.push((i as Vertex, j as Vertex));
            }
        }
    }
    Graph::new(k, edges).expect("code describes a simple graph")
}

/// Drops isolated vertices, keeping the relative order of the rest.
fn compact(g: &Graph) -> Graph {
    let kept: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let mut index = vec![0; g.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        index[v as usize] = i as Vertex;
    }
    Graph::new(
        kept.len(),
        g.edges().iter().map(|&(u, v)| (index[u as usize], index[v as usize])),
    )
    .expect("relabelling preserves simplicity")
}

/// Smallest edge count of a graph on at most `vertex_cap` vertices that
/// arrows `P_n` with `r` colours.
///
/// Graphs are generated level by level in edge count by adding one edge to
/// each representative of the previous level; isomorphic copies are merged
/// through their canonical codes.
pub fn min_size_ramsey(
    n: usize,
    r: u32,
    vertex_cap: usize,
    colouring_cap: u128,
) -> Result<SizeRamseyResult, OracleError> {
    if vertex_cap > MAX_SEARCH_VERTICES {
        return Err(OracleError::CapExceeded {
            what: "vertex cap",
            value: vertex_cap as u128,
            cap: MAX_SEARCH_VERTICES as u128,
        });
    }
    if r == 0 || n == 0 {
        return Err(OracleError::InvalidArgument("n and r must be at least 1"));
    }
    let k = vertex_cap;
    let pairs = k * k.saturating_sub(1) / 2;
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    let mut examined = 0u64;
    for m in 0..=pairs {
        let mut best: Option<(usize, u32, Graph)> = None;
        for &code in &level {
            let g = graph_from_code(code, k);
            examined += 1;
            if arrows_decide(&g, n, r, Enumeration::Canonicalized, colouring_cap)?.arrows {
                let witness = compact(&g);
                let key = (witness.vertex_count(), code);
                if best.as_ref().is_none_or(|(v, c, _)| key < (*v, *c)) {
                    best = Some((key.0, key.1, witness));
                }
            }
        }
        if let Some((_, _, witness)) = best {
            return Ok(SizeRamseyResult {
                m,
                witness,
                graphs_examined: examined,
                vertex_cap,
            });
        }
        level = level
            .iter()
            .flat_map(|&code| {
                (0..pairs as u32)
                    .filter(move |&bit| code >> bit & 1 == 0)
                    .map(move |bit| canonical_code(code | 1 << bit, k))
            })
            .collect();
    }
    Err(OracleError::NoArrowingGraph { n, r, vertex_cap })
}

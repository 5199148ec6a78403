//! Depth-first path growing over one colour class, split into phases.
//!
//! The search keeps three disjoint groups of live vertices: the current path
//! `P`, the unexplored set `U` and the dead set `W`. Each step either
//! extends `P` from its head into `U` (taking the lowest-index unexplored
//! neighbour), moves the head to `W` when it has no unexplored neighbour, or,
//! when `P` is empty, starts a new path at the lowest-index vertex of `U`.
//! No edge ever joins `U` and `W`.
//!
//! A phase ends the first time `|W| = n`. At that point `W` becomes `S_i`,
//! the vertices of `P` become `T_i`, and all live edges incident to `W`
//! (the set `F_i`) are deleted together with `W`. The path and `U` carry
//! over into the next phase. If no `n`-vertex path ever appears, the `F_i`
//! partition the colour class, so some phase must hold at least a
//! `1 / phase_count` share of its edges.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expansion::{pad_pair, ExpansionWitness};
use crate::graph::{
    monochromatic_subgraph, Colour, Colouring, Graph, GraphError, Path, Vertex, VertexSet,
};
use crate::model::RamseyParams;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DfsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    InvalidArgument(&'static str),
    #[error("certificate ended with a path, so it has no complete phase log")]
    NoPhaseLog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Place {
    Unexplored,
    OnPath,
    Dead,
    Removed,
}

/// One move of the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transition {
    /// `P` was empty; `vertex` left `U` and became a one-vertex path.
    Restart { vertex: Vertex },
    /// The head `from` gained the neighbour `to`, which left `U`.
    Extend { from: Vertex, to: Vertex, edge: usize },
    /// The head had no neighbour in `U` and moved to `W`.
    Retreat { vertex: Vertex },
}

/// How the very first path is started.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartPolicy {
    #[default]
    LowestIndex,
    /// Start at this vertex if it is live; later restarts use the lowest index.
    Vertex(Vertex),
}

/// Search state over a single-colour graph whose live vertices shrink
/// between phases.
#[derive(Debug, Clone)]
pub struct DfsState<'g> {
    graph: &'g Graph,
    place: Vec<Place>,
    path: Vec<Vertex>,
    path_edges: Vec<usize>,
    dead: Vec<Vertex>,
    unexplored: usize,
    live: usize,
    /// Per-vertex position in its neighbour list; neighbours never re-enter `U`,
    /// so the scan only moves forward.
    cursor: Vec<usize>,
    restart_cursor: usize,
    pending_start: Option<Vertex>,
}

impl<'g> DfsState<'g> {
    pub fn new(graph: &'g Graph, start: StartPolicy) -> Self {
        let count = graph.vertex_count();
        Self {
            graph,
            place: vec![Place::Unexplored; count],
            path: Vec::new(),
            path_edges: Vec::new(),
            dead: Vec::new(),
            unexplored: count,
            live: count,
            cursor: vec![0; count],
            restart_cursor: 0,
            pending_start: match start {
                StartPolicy::LowestIndex => None,
                StartPolicy::Vertex(v) => Some(v),
            },
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Current path, tail first.
    pub fn path(&self) -> &[Vertex] {
        &self.path
    }

    pub fn path_edges(&self) -> &[usize] {
        &self.path_edges
    }

    /// `W`, in the order vertices died.
    pub fn dead(&self) -> &[Vertex] {
        &self.dead
    }

    pub fn unexplored_count(&self) -> usize {
        self.unexplored
    }

    pub fn live_count(&self) -> usize {
        self.live
    }

    pub fn is_exhausted(&self) -> bool {
        self.path.is_empty() && self.unexplored == 0
    }

    pub fn is_unexplored(&self, v: Vertex) -> bool {
        self.place[v as usize] == Place::Unexplored
    }

    pub fn is_dead(&self, v: Vertex) -> bool {
        self.place[v as usize] == Place::Dead
    }

    pub fn is_live(&self, v: Vertex) -> bool {
        self.place[v as usize] != Place::Removed
    }

    /// Performs one move; `None` once `P` and `U` are both empty.
    pub fn step(&mut self) -> Option<Transition> {
        let Some(&head) = self.path.last() else {
            let vertex = self.next_start()?;
            self.place[vertex as usize] = Place::OnPath;
            self.unexplored -= 1;
            self.path.push(vertex);
            return Some(Transition::Restart { vertex });
        };
        let list = self.graph.neighbours(head);
        let cursor = &mut self.cursor[head as usize];
        while *cursor < list.len() && self.place[list[*cursor].neighbour as usize] != Place::Unexplored {
            *cursor += 1;
        }
        if let Some(inc) = list.get(*cursor) {
            let to = inc.neighbour;
            self.place[to as usize] = Place::OnPath;
            self.unexplored -= 1;
            self.path.push(to);
            self.path_edges.push(inc.edge);
            Some(Transition::Extend {
                from: head,
                to,
                edge: inc.edge,
            })
        } else {
            self.path.pop();
            self.path_edges.pop();
            self.place[head as usize] = Place::Dead;
            self.dead.push(head);
            Some(Transition::Retreat { vertex: head })
        }
    }

    fn next_start(&mut self) -> Option<Vertex> {
        if let Some(v) = self.pending_start.take() {
            if (v as usize) < self.place.len() && self.is_unexplored(v) {
                return Some(v);
            }
        }
        while self.restart_cursor < self.place.len() {
            let v = self.restart_cursor as Vertex;
            if self.is_unexplored(v) {
                return Some(v);
            }
            self.restart_cursor += 1;
        }
        None
    }

    /// Deletes `W` and every live edge incident to it, returning those edges
    /// (indices into this state's graph, ascending).
    pub fn remove_dead(&mut self) -> Vec<usize> {
        let mut removed = Vec::new();
        for &w in &self.dead {
            for inc in self.graph.neighbours(w) {
                match self.place[inc.neighbour as usize] {
                    Place::Removed => {}
                    // W-W edges are seen twice; keep the one from the lower end.
                    Place::Dead if inc.neighbour < w => {}
                    _ => removed.push(inc.edge),
                }
            }
        }
        for &w in &self.dead {
            self.place[w as usize] = Place::Removed;
        }
        self.live -= self.dead.len();
        self.dead.clear();
        removed.sort_unstable();
        removed
    }

    /// Checks the partition of live vertices and the absence of `U`-`W` edges
    /// by a full scan. Intended for tests and audits, it costs `O(|V| + |E|)`.
    pub fn check_invariants(&self) -> Result<(), String> {
        let count = |p: Place| self.place.iter().filter(|&&x| x == p).count();
        if count(Place::Unexplored) != self.unexplored {
            return Err("cached |U| disagrees with membership".into());
        }
        if count(Place::OnPath) != self.path.len() || count(Place::Dead) != self.dead.len() {
            return Err("P or W disagrees with membership".into());
        }
        if self.unexplored + self.path.len() + self.dead.len() != self.live {
            return Err("P, U, W do not partition the live vertices".into());
        }
        if self.path_edges.len() + 1 != self.path.len().max(1) {
            return Err("path edge count mismatch".into());
        }
        for (w, &k) in self.path.windows(2).zip(&self.path_edges) {
            let (a, b) = self.graph.edge(k);
            if !((a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1])) {
                return Err(format!("path edge {k} does not join {} and {}", w[0], w[1]));
            }
        }
        for &(a, b) in self.graph.edges() {
            let (pa, pb) = (self.place[a as usize], self.place[b as usize]);
            if matches!(
                (pa, pb),
                (Place::Unexplored, Place::Dead) | (Place::Dead, Place::Unexplored)
            ) {
                return Err(format!("live edge {{{a}, {b}}} joins U and W"));
            }
        }
        Ok(())
    }
}

/// Result of running the search on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsGrowth {
    pub longest: Path,
    pub transitions: Vec<Transition>,
    /// Whether the run stopped because the path reached the target length.
    pub reached_target: bool,
}

/// Runs the search to exhaustion, or until the path reaches `stop_at`
/// vertices, recording every transition and the longest path seen.
pub fn dfs_grow(g: &Graph, start: StartPolicy, stop_at: Option<usize>) -> DfsGrowth {
    let mut state = DfsState::new(g, start);
    let mut longest = Path::default();
    let mut transitions = Vec::new();
    loop {
        if state.path().len() > longest.len() {
            longest = Path {
                vertices: state.path().to_vec(),
                edge_indices: state.path_edges().to_vec(),
            };
        }
        if stop_at.is_some_and(|target| state.path().len() >= target) {
            return DfsGrowth {
                longest,
                transitions,
                reached_target: true,
            };
        }
        match state.step() {
            Some(t) => transitions.push(t),
            None => break,
        }
    }
    DfsGrowth {
        longest,
        transitions,
        reached_target: false,
    }
}

/// One completed (or final) phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseRecord {
    /// 1-based phase index.
    pub index: usize,
    /// `S_i`: the dead set at the end of the phase, ascending.
    pub s: Vec<Vertex>,
    /// `T_i`: the path at the end of the phase, in path order.
    pub t: Vec<Vertex>,
    /// `F_i`: removed edges as indices into the original graph, ascending.
    pub f_edges: Vec<usize>,
    /// Set for a final phase whose `|S_i|` differs from `n`.
    pub partial: bool,
}

impl PhaseRecord {
    pub fn f_count(&self) -> usize {
        self.f_edges.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DfsOutcome {
    /// A monochromatic path on `n` vertices.
    PathFound,
    /// A phase removed at least the pigeonhole share of the colour class.
    WitnessFound,
    /// No path and no witness; only possible for an empty colour class.
    BudgetOkContradiction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsCertificate {
    pub outcome: DfsOutcome,
    pub colour: Colour,
    pub n: usize,
    pub phase_count: usize,
    pub colour_class_size: usize,
    /// `ceil(colour_class_size / phase_count)`.
    pub threshold: usize,
    /// Present for `PathFound`; edge indices refer to the original graph.
    pub path: Option<Path>,
    /// 1-based index of the witness phase for `WitnessFound`.
    pub witness_phase: Option<usize>,
    pub phase_log: Vec<PhaseRecord>,
}

impl DfsCertificate {
    pub fn witness(&self) -> Option<&PhaseRecord> {
        let i = self.witness_phase?;
        self.phase_log.iter().find(|rec| rec.index == i)
    }

    /// The witness phase as a pair-density witness on `host`: `S_i` and
    /// `T_i` padded to `n` vertices each, counted in `host`, with the
    /// pigeonhole threshold as budget. `None` without a witness or when
    /// padding is impossible.
    pub fn expansion_witness(&self, host: &Graph) -> Option<ExpansionWitness> {
        let rec = self.witness()?;
        let s = VertexSet::from_vertices(host.vertex_count(), rec.s.iter().copied()).ok()?;
        let t = VertexSet::from_vertices(host.vertex_count(), rec.t.iter().copied()).ok()?;
        let (s, t) = pad_pair(host, &s, &t, self.n)?;
        ExpansionWitness::measure(host, &s, &t, self.threshold as f64).ok()
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            outcome: self.outcome,
            colour: self.colour,
            path: self.path.as_ref().map(|p| p.vertices.clone()),
            witness: self.witness().map(|rec| WitnessJson {
                phase: rec.index,
                s: rec.s.clone(),
                t: rec.t.clone(),
                edge_count: rec.f_count(),
            }),
            phase_log: self
                .phase_log
                .iter()
                .map(|rec| PhaseJson {
                    i: rec.index,
                    s_size: rec.s.len(),
                    t_size: rec.t.len(),
                    f_count: rec.f_count(),
                })
                .collect(),
        }
    }
}

/// Serialized certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub outcome: DfsOutcome,
    pub colour: Colour,
    pub path: Option<Vec<Vertex>>,
    pub witness: Option<WitnessJson>,
    pub phase_log: Vec<PhaseJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub phase: usize,
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    #[serde(rename = "T")]
    pub t: Vec<Vertex>,
    pub edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseJson {
    pub i: usize,
    #[serde(rename = "S_size")]
    pub s_size: usize,
    #[serde(rename = "T_size")]
    pub t_size: usize,
    #[serde(rename = "F_count")]
    pub f_count: usize,
}

/// Runs the phased search on the class of `colour`.
///
/// Phases `1..phase_count` stop the first time `|W| = n`; the last phase
/// runs until the live graph is empty, so the `F_i` always partition the
/// colour class. Returns as soon as the path reaches `n` vertices.
pub fn phase_run(
    g: &Graph,
    c: &Colouring,
    colour: Colour,
    n: usize,
    phase_count: usize,
) -> Result<DfsCertificate, DfsError> {
    if n == 0 {
        return Err(DfsError::InvalidArgument("n must be at least 1"));
    }
    if phase_count == 0 {
        return Err(DfsError::InvalidArgument("phase_count must be at least 1"));
    }
    let (class, original) = monochromatic_subgraph(g, c, colour)?;
    let mut state = DfsState::new(&class, StartPolicy::LowestIndex);
    let mut phase_log = Vec::new();
    let mut certificate = DfsCertificate {
        outcome: DfsOutcome::BudgetOkContradiction,
        colour,
        n,
        phase_count,
        colour_class_size: class.edge_count(),
        threshold: class.edge_count().div_ceil(phase_count),
        path: None,
        witness_phase: None,
        phase_log: Vec::new(),
    };

    let mut index = 1;
    while state.live_count() > 0 {
        let last = index >= phase_count;
        loop {
            if state.path().len() >= n {
                certificate.outcome = DfsOutcome::PathFound;
                certificate.path = Some(Path {
                    vertices: state.path().to_vec(),
                    edge_indices: state.path_edges().iter().map(|&k| original[k]).collect(),
                });
                certificate.phase_log = phase_log;
                return Ok(certificate);
            }
            if !last && state.dead().len() == n {
                break;
            }
            if state.step().is_none() {
                break;
            }
        }
        let mut s = state.dead().to_vec();
        s.sort_unstable();
        let t = state.path().to_vec();
        let f_edges = state.remove_dead().into_iter().map(|k| original[k]).collect();
        phase_log.push(PhaseRecord {
            index,
            partial: s.len() != n,
            s,
            t,
            f_edges,
        });
        index += 1;
    }

    debug_assert_eq!(
        phase_log.iter().map(PhaseRecord::f_count).sum::<usize>(),
        class.edge_count()
    );
    let best = phase_log
        .iter()
        .fold(None::<&PhaseRecord>, |best, rec| match best {
            Some(b) if b.f_count() >= rec.f_count() => Some(b),
            _ => Some(rec),
        });
    if let Some(rec) = best {
        if class.edge_count() > 0 && rec.f_count() >= certificate.threshold {
            certificate.outcome = DfsOutcome::WitnessFound;
            certificate.witness_phase = Some(rec.index);
        }
    }
    certificate.phase_log = phase_log;
    Ok(certificate)
}

/// Index of the largest colour class, ties to the lowest colour.
pub fn majority_colour(c: &Colouring) -> Colour {
    let sizes = c.class_sizes();
    let mut best = 0;
    for (colour, &size) in sizes.iter().enumerate() {
        if size > sizes[best] {
            best = colour;
        }
    }
    best as Colour
}

/// Runs [`phase_run`] with `7r` phases on the majority colour. With
/// `try_all_colours`, falls back to the other colours in decreasing class
/// size until one yields a path; the majority certificate is returned if
/// none does.
pub fn find_monochromatic_path(
    g: &Graph,
    c: &Colouring,
    n: usize,
    try_all_colours: bool,
) -> Result<DfsCertificate, DfsError> {
    c.check_against(g)?;
    let phase_count = 7 * c.r() as usize;
    let majority = phase_run(g, c, majority_colour(c), n, phase_count)?;
    if !try_all_colours || majority.outcome == DfsOutcome::PathFound {
        return Ok(majority);
    }
    let sizes = c.class_sizes();
    let mut order: Vec<Colour> = (0..c.r()).filter(|&k| k != majority.colour).collect();
    order.sort_by_key(|&k| std::cmp::Reverse(sizes[k as usize]));
    for colour in order {
        let cert = phase_run(g, c, colour, n, phase_count)?;
        if cert.outcome == DfsOutcome::PathFound {
            return Ok(cert);
        }
    }
    Ok(majority)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainLink {
    pub name: &'static str,
    pub lhs: f64,
    pub relation: &'static str,
    pub rhs: f64,
    pub holds: bool,
}

/// Numerical evaluation of the counting argument for one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub links: Vec<ChainLink>,
    /// Every link held, which would be contradictory; when no path was
    /// found at least one link must fail.
    pub all_hold: bool,
}

impl ChainReport {
    pub fn link(&self, name: &str) -> Option<&ChainLink> {
        self.links.iter().find(|l| l.name == name)
    }
}

/// Evaluates each inequality of the edge-counting chain for a certificate
/// that did not find a path:
///
/// `|E|/r <= |E_c| = sum |F_i| <= 7r * 70 ln(r) n < 500 ln(r) r n < |E|/r`.
pub fn check_contradiction_chain(
    cert: &DfsCertificate,
    params: &RamseyParams,
    total_edges: usize,
) -> Result<ChainReport, DfsError> {
    if cert.outcome == DfsOutcome::PathFound {
        return Err(DfsError::NoPhaseLog);
    }
    let r = params.r() as f64;
    let log_r = r.ln();
    let n = params.n() as f64;
    let share = total_edges as f64 / r;
    let class = cert.colour_class_size as f64;
    let sum: usize = cert.phase_log.iter().map(PhaseRecord::f_count).sum();
    let max = cert.phase_log.iter().map(PhaseRecord::f_count).max().unwrap_or(0) as f64;
    let phases = params.phase_count() as f64;
    let budget = params.expansion_budget();
    let link = |name, lhs: f64, relation, rhs: f64| {
        let holds = match relation {
            "<=" => lhs <= rhs,
            "<" => lhs < rhs,
            ">=" => lhs >= rhs,
            _ => lhs == rhs,
        };
        ChainLink {
            name,
            lhs,
            relation,
            rhs,
            holds,
        }
    };
    let links = vec![
        link("majority", share, "<=", class),
        link("partition", sum as f64, "==", class),
        link("phase-budget", max, "<=", budget),
        link("phase-total", sum as f64, "<=", phases * budget),
        link("constants", phases * budget, "<", 500.0 * log_r * r * n),
        link("edge-window", 500.0 * log_r * r * n, "<", share),
        link("pigeonhole", max, ">=", sum as f64 / cert.phase_count as f64),
    ];
    let all_hold = links.iter().all(|l| l.holds);
    Ok(ChainReport { links, all_hold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_path;

    #[test]
    fn grows_along_a_path() {
        let out = dfs_grow(&Graph::path(3), StartPolicy::LowestIndex, None);
        assert_eq!(out.longest.vertices, vec![0, 1, 2]);
        assert_eq!(
            out.transitions[..3],
            [
                Transition::Restart { vertex: 0 },
                Transition::Extend { from: 0, to: 1, edge: 0 },
                Transition::Extend { from: 1, to: 2, edge: 1 },
            ]
        );
        assert_eq!(out.transitions.len(), 6);
    }

    #[test]
    fn star_from_a_leaf() {
        let out = dfs_grow(&Graph::star(3), StartPolicy::Vertex(1), None);
        assert_eq!(out.longest.vertices, vec![1, 0, 2]);
        assert_eq!(out.longest.len(), 3);
    }

    #[test]
    fn empty_graph_kills_each_vertex() {
        let out = dfs_grow(&Graph::empty(5), StartPolicy::LowestIndex, None);
        assert_eq!(out.longest.len(), 1);
        let retreats = out
            .transitions
            .iter()
            .filter(|t| matches!(t, Transition::Retreat { .. }))
            .count();
        assert_eq!(retreats, 5);
        assert_eq!(out.transitions.len(), 10);
    }

    #[test]
    fn stops_at_target() {
        let out = dfs_grow(&Graph::path(10), StartPolicy::LowestIndex, Some(4));
        assert!(out.reached_target);
        assert_eq!(out.longest.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn invariants_hold_on_a_small_graph() {
        let g = Graph::new(6, [(0, 3), (3, 5), (1, 2), (2, 4), (1, 4), (0, 5)]).unwrap();
        let mut state = DfsState::new(&g, StartPolicy::LowestIndex);
        state.check_invariants().unwrap();
        while state.step().is_some() {
            state.check_invariants().unwrap();
        }
        assert!(state.is_exhausted());
        assert_eq!(state.dead().len(), 6);
    }

    #[test]
    fn path_found_on_monochromatic_path() {
        let g = Graph::path(7);
        let c = Colouring::constant(&g, 2, 0).unwrap();
        let cert = phase_run(&g, &c, 0, 7, 14).unwrap();
        assert_eq!(cert.outcome, DfsOutcome::PathFound);
        assert!(cert.phase_log.is_empty());
        assert!(verify_path(&g, &c, cert.path.as_ref().unwrap(), 7, 0));
    }

    #[test]
    fn empty_class_is_budget_ok() {
        // r = 2, n = 3: 42 vertices and no edges of colour 1.
        let g = Graph::path(42);
        let c = Colouring::constant(&g, 2, 0).unwrap();
        let cert = phase_run(&g, &c, 1, 3, 14).unwrap();
        assert_eq!(cert.outcome, DfsOutcome::BudgetOkContradiction);
        assert_eq!(cert.phase_log.len(), 14);
        assert!(cert.phase_log.iter().all(|rec| rec.s.len() == 3 && rec.f_count() == 0));
        assert!(cert.phase_log.iter().all(|rec| !rec.partial));
    }

    #[test]
    fn phases_partition_a_class_without_long_paths() {
        // Disjoint triangles have no P_4; every edge must land in some F_i.
        let mut edges = Vec::new();
        for b in 0..5u32 {
            let o = 3 * b;
            edges.extend([(o, o + 1), (o + 1, o + 2), (o, o + 2)]);
        }
        let g = Graph::new(15, edges).unwrap();
        let c = Colouring::constant(&g, 1, 0).unwrap();
        let cert = phase_run(&g, &c, 0, 4, 3).unwrap();
        assert_eq!(cert.outcome, DfsOutcome::WitnessFound);
        let mut all: Vec<usize> = cert.phase_log.iter().flat_map(|r| r.f_edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..15).collect::<Vec<_>>());
        assert_eq!(cert.threshold, 5);
        assert!(cert.witness().unwrap().f_count() >= 5);
        // Last phase absorbs the remainder: 15 vertices, 4 + 4 + 7.
        let sizes: Vec<usize> = cert.phase_log.iter().map(|r| r.s.len()).collect();
        assert_eq!(sizes, vec![4, 4, 7]);
        assert!(cert.phase_log[2].partial);
        let w = cert.expansion_witness(&g);
        assert!(w.is_none(), "|S_3| = 7 > n cannot be padded");
    }

    #[test]
    fn majority_and_fallback() {
        let k3 = Graph::complete(3);
        let c = Colouring::new(&k3, 2, vec![0, 1, 0]).unwrap();
        assert_eq!(majority_colour(&c), 0);
        let cert = find_monochromatic_path(&k3, &c, 3, false).unwrap();
        assert_eq!(cert.outcome, DfsOutcome::PathFound);
        assert!(verify_path(&k3, &c, cert.path.as_ref().unwrap(), 3, 0));

        let tie = Colouring::new(&Graph::path(3), 2, vec![1, 0]).unwrap();
        assert_eq!(majority_colour(&tie), 0);

        // Colour 1 is the minority but holds the only P_3.
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let c = Colouring::new(&g, 3, vec![1, 1, 0]).unwrap();
        assert_eq!(majority_colour(&c), 1);
        let c = Colouring::new(&g, 3, vec![1, 1, 2]).unwrap();
        assert_eq!(
            find_monochromatic_path(&g, &c, 3, false).unwrap().outcome,
            DfsOutcome::PathFound
        );
    }

    #[test]
    fn single_edge_is_p2() {
        let g = Graph::new(4, [(2, 3)]).unwrap();
        let c = Colouring::constant(&g, 2, 0).unwrap();
        let cert = find_monochromatic_path(&g, &c, 2, false).unwrap();
        assert_eq!(cert.outcome, DfsOutcome::PathFound);
        assert_eq!(cert.path.unwrap().vertices, vec![2, 3]);
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = Graph::path(3);
        let c = Colouring::constant(&g, 2, 0).unwrap();
        assert!(phase_run(&g, &c, 0, 0, 14).is_err());
        assert!(phase_run(&g, &c, 0, 3, 0).is_err());
        assert!(phase_run(&g, &c, 2, 3, 14).is_err());
    }

    #[test]
    fn chain_constants_at_r2() {
        let params = RamseyParams::new(100, 2).unwrap();
        let g = Graph::empty(params.host_vertices());
        let c = Colouring::constant(&g, 2, 0).unwrap();
        let cert = phase_run(&g, &c, 0, 100, 14).unwrap();
        let report = check_contradiction_chain(&cert, &params, 0).unwrap();
        let constants = report.link("constants").unwrap();
        let ln2 = std::f64::consts::LN_2;
        assert!((constants.lhs - 980.0 * ln2 * 100.0).abs() < 1e-6);
        assert!((constants.rhs - 1000.0 * ln2 * 100.0).abs() < 1e-6);
        assert!(constants.holds);
        assert!(report.link("pigeonhole").unwrap().holds);
        assert!(!report.link("edge-window").unwrap().holds);
        assert!(!report.all_hold);
    }

    #[test]
    fn chain_rejects_path_certificates() {
        let g = Graph::path(3);
        let c = Colouring::constant(&g, 2, 0).unwrap();
        let cert = phase_run(&g, &c, 0, 3, 14).unwrap();
        let params = RamseyParams::new(16, 2).unwrap();
        assert_eq!(
            check_contradiction_chain(&cert, &params, 2),
            Err(DfsError::NoPhaseLog)
        );
    }

    #[test]
    fn certificate_json_shape() {
        let g = Graph::path(3);
        let c = Colouring::constant(&g, 2, 0).unwrap();
        let cert = phase_run(&g, &c, 0, 3, 14).unwrap();
        assert_eq!(
            serde_json::to_string(&cert.to_json()).unwrap(),
            r#"{"outcome":"path_found","colour":0,"path":[0,1,2],"witness":null,"phase_log":[]}"#
        );
    }
}

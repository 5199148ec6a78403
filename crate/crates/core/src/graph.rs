//! Undirected simple graphs with positional edge indices, edge colourings,
//! paths and vertex subsets.
//!
//! Every structure here is immutable once built. Edge `k` of a [`Graph`] is
//! the `k`-th pair in its edge sequence, and a [`Colouring`] is simply one
//! colour per edge index, so subgraphs and certificates can always be
//! reported in the numbering of the original host.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index in `[0, vertex_count)`.
pub type Vertex = u32;

/// Colour index in `[0, r)`.
pub type Colour = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: u64, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("serialized edge [{0}, {1}] must satisfy u < v")]
    UnorderedEdge(Vertex, Vertex),
    #[error("vertex sets are not disjoint (both contain {0})")]
    NotDisjoint(Vertex),
    #[error("vertex set over {set} vertices used with a graph on {graph} vertices")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("colouring has {colours} entries but the graph has {edges} edges")]
    ColouringLength { colours: usize, edges: usize },
    #[error("colour {colour} is out of range for r = {r}")]
    ColourOutOfRange { colour: Colour, r: u32 },
    #[error("colour count must be at least 1")]
    NoColours,
    #[error("vertex count {0} exceeds the 32-bit vertex index space")]
    TooManyVertices(usize),
    #[error("edge list line {line}: {message}")]
    EdgeListSyntax { line: usize, message: String },
}

/// One entry of a vertex's neighbour list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub neighbour: Vertex,
    /// Index of the joining edge in the graph's edge sequence.
    pub edge: usize,
}

/// Immutable undirected simple graph.
///
/// Edges are stored as `(u, v)` with `u < v`; the sequence order is the order
/// the edges were supplied in. Neighbour lists are sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Incidence>>,
}

impl Graph {
    /// Builds a graph from an edge sequence. Pairs may be given in either
    /// orientation; they are stored normalized as `(min, max)`.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if vertex_count > Vertex::MAX as usize {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        let mut normalized = Vec::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (k, (a, b)) in edges.into_iter().enumerate() {
            for x in [a, b] {
                if x as usize >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x as u64,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            normalized.push((u, v));
            adjacency[u as usize].push(Incidence { neighbour: v, edge: k });
            adjacency[v as usize].push(Incidence { neighbour: u, edge: k });
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable_by_key(|inc| inc.neighbour);
            if let Some(w) = list.windows(2).find(|w| w[0].neighbour == w[1].neighbour) {
                let (x, y) = (u as Vertex, w[0].neighbour);
                return Err(GraphError::DuplicateEdge(x.min(y), x.max(y)));
            }
        }
        Ok(Self {
            vertex_count,
            edges: normalized,
            adjacency,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::new(vertex_count, []).expect("edgeless graph is valid")
    }

    /// `K_k`, edges in lexicographic order.
    pub fn complete(k: usize) -> Self {
        let k = k as Vertex;
        let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
        Self::new(k as usize, edges).expect("complete graph is valid")
    }

    /// The path `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> Self {
        let edges = (1..k as Vertex).map(|v| (v - 1, v));
        Self::new(k, edges).expect("path graph is valid")
    }

    /// `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves as Vertex).map(|v| (0, v));
        Self::new(leaves + 1, edges).expect("star graph is valid")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> (Vertex, Vertex) {
        self.edges[index]
    }

    /// Neighbours of `v`, sorted ascending by neighbour index.
    #[inline]
    pub fn neighbours(&self, v: Vertex) -> &[Incidence] {
        &self.adjacency[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let list = self.adjacency.get(u as usize)?;
        list.binary_search_by_key(&v, |inc| inc.neighbour)
            .ok()
            .map(|i| list[i].edge)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.vertex_count as Vertex
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Membership bitmap over `[0, universe)` with a cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            members: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            members: vec![true; universe],
            len: universe,
        }
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::new(universe);
        for v in vertices {
            if v as usize >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v as u64,
                    vertex_count: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.members.get(v as usize).copied().unwrap_or(false)
    }

    /// Returns `true` if `v` was newly inserted. Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        let slot = &mut self.members[v as usize];
        let fresh = !*slot;
        *slot = true;
        self.len += fresh as usize;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.members.get_mut(v as usize) {
            Some(slot) if *slot => {
                *slot = false;
                self.len -= 1;
                true
            }
            _ => false,
        }
    }

    pub fn clear(&mut self) {
        self.members.iter_mut().for_each(|m| *m = false);
        self.len = 0;
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| v as Vertex)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Some common member, if the sets intersect.
    pub fn common_member(&self, other: &VertexSet) -> Option<Vertex> {
        self.members
            .iter()
            .zip(&other.members)
            .position(|(&a, &b)| a && b)
            .map(|v| v as Vertex)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.common_member(other).is_none()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An assignment of one of `r` colours to every edge index of a companion graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    r: u32,
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(graph: &Graph, r: u32, colours: Vec<Colour>) -> Result<Self, GraphError> {
        let colouring = Self { r, colours };
        colouring.check_against(graph)?;
        Ok(colouring)
    }

    /// Every edge gets `colour`.
    pub fn constant(graph: &Graph, r: u32, colour: Colour) -> Result<Self, GraphError> {
        Self::new(graph, r, vec![colour; graph.edge_count()])
    }

    /// Validates length and range; deserialized colourings should pass through here.
    pub fn check_against(&self, graph: &Graph) -> Result<(), GraphError> {
        if self.r == 0 {
            return Err(GraphError::NoColours);
        }
        if self.colours.len() != graph.edge_count() {
            return Err(GraphError::ColouringLength {
                colours: self.colours.len(),
                edges: graph.edge_count(),
            });
        }
        if let Some(&colour) = self.colours.iter().find(|&&c| c >= self.r) {
            return Err(GraphError::ColourOutOfRange { colour, r: self.r });
        }
        Ok(())
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn colour(&self, edge: usize) -> Colour {
        self.colours[edge]
    }

    #[inline]
    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Number of edges in each colour class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.r as usize];
        for &c in &self.colours {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// A simple path: distinct vertices plus the edge index joining each consecutive pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Path {
    pub vertices: Vec<Vertex>,
    pub edge_indices: Vec<usize>,
}

impl Path {
    pub fn single(v: Vertex) -> Self {
        Self {
            vertices: vec![v],
            edge_indices: Vec::new(),
        }
    }

    /// Looks up the joining edges; `None` if a consecutive pair is not an
    /// edge or a vertex repeats.
    pub fn from_vertices(graph: &Graph, vertices: Vec<Vertex>) -> Option<Self> {
        let mut seen = HashSet::with_capacity(vertices.len());
        if !vertices.iter().all(|&v| seen.insert(v)) {
            return None;
        }
        let edge_indices = vertices
            .windows(2)
            .map(|w| graph.edge_index(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            vertices,
            edge_indices,
        })
    }

    /// Number of vertices.
    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Edges inside `S ∪ T` with at least one endpoint in `S`.
pub fn induced_edge_count(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
    for set in [s, t] {
        if set.universe() != g.vertex_count() {
            return Err(GraphError::UniverseMismatch {
                set: set.universe(),
                graph: g.vertex_count(),
            });
        }
    }
    if let Some(v) = s.common_member(t) {
        return Err(GraphError::NotDisjoint(v));
    }
    let mut count = 0;
    for v in s.iter() {
        for inc in g.neighbours(v) {
            let w = inc.neighbour;
            // S-S edges are seen from both ends; count them from the lower one.
            if t.contains(w) || (s.contains(w) && v < w) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Spanning subgraph keeping the edges of one colour, in their original
/// relative order, together with the map from new to original edge indices.
pub fn monochromatic_subgraph(
    g: &Graph,
    c: &Colouring,
    colour: Colour,
) -> Result<(Graph, Vec<usize>), GraphError> {
    c.check_against(g)?;
    if colour >= c.r() {
        return Err(GraphError::ColourOutOfRange { colour, r: c.r() });
    }
    let original: Vec<usize> = (0..g.edge_count())
        .filter(|&k| c.colour(k) == colour)
        .collect();
    let sub = Graph::new(g.vertex_count(), original.iter().map(|&k| g.edge(k)))
        .expect("subgraph of a valid graph is valid");
    Ok((sub, original))
}

/// True iff `p` is a simple path on exactly `target_len` vertices whose every
/// edge exists in `g` and carries `colour`.
pub fn verify_path(g: &Graph, c: &Colouring, p: &Path, target_len: usize, colour: Colour) -> bool {
    if p.vertices.len() != target_len || p.edge_indices.len() + 1 != p.vertices.len() {
        return false;
    }
    if c.colours().len() != g.edge_count() {
        return false;
    }
    let mut seen = HashSet::with_capacity(p.vertices.len());
    for &v in &p.vertices {
        if v as usize >= g.vertex_count() || !seen.insert(v) {
            return false;
        }
    }
    p.vertices
        .windows(2)
        .zip(&p.edge_indices)
        .all(|(w, &k)| {
            k < g.edge_count() && {
                let (a, b) = g.edge(k);
                ((a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1])) && c.colour(k) == colour
            }
        })
}

#![allow(dead_code)]

use proptest::prelude::*;
use sizeramsey::{Colouring, Graph, Vertex, VertexSet};

/// Graph on `1..=max_vertices` vertices, each pair present independently.
pub fn arb_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|v| {
        let pairs = v * (v - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| graph_from_mask(v, &mask))
    })
}

pub fn graph_from_mask(v: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..v as Vertex {
        for b in a + 1..v as Vertex {
            if mask[k] {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::new(v, edges).unwrap()
}

pub fn arb_coloured_graph(max_vertices: usize, max_r: u32) -> impl Strategy<Value = (Graph, Colouring)> {
    (arb_graph(max_vertices), 1..=max_r).prop_flat_map(|(g, r)| {
        let m = g.edge_count();
        proptest::collection::vec(0..r, m).prop_map(move |colours| {
            let c = Colouring::new(&g, r, colours).unwrap();
            (g.clone(), c)
        })
    })
}

pub fn set(universe: usize, vs: &[Vertex]) -> VertexSet {
    VertexSet::from_vertices(universe, vs.iter().copied()).unwrap()
}

/// Edges with both ends in `set`, by a full edge scan.
pub fn edges_inside(g: &Graph, set: &VertexSet) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| set.contains(u) && set.contains(v))
        .count()
}

/// Qualifying edges of `(s, t)` by a full edge scan.
pub fn naive_pair_count(g: &Graph, s: &[Vertex], t: &[Vertex]) -> usize {
    let in_s = |x: Vertex| s.contains(&x);
    let in_union = |x: Vertex| s.contains(&x) || t.contains(&x);
    g.edges()
        .iter()
        .filter(|&&(u, v)| in_union(u) && in_union(v) && (in_s(u) || in_s(v)))
        .count()
}

/// Every ordered disjoint `(S, T)` pair with `|S| = |T| = n`, by filtering
/// all pairs of bitmasks.
pub fn naive_disjoint_pairs(v: usize, n: usize) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    let members = |mask: u32| (0..v as Vertex).filter(|&x| mask >> x & 1 == 1).collect::<Vec<_>>();
    let mut out = Vec::new();
    for s in 0u32..1 << v {
        if s.count_ones() as usize != n {
            continue;
        }
        for t in 0u32..1 << v {
            if t.count_ones() as usize == n && s & t == 0 {
                out.push((members(s), members(t)));
            }
        }
    }
    out
}

/// Longest simple path by trying every ordering of every vertex subset.
pub fn naive_longest_path(g: &Graph) -> usize {
    fn grow(g: &Graph, path: &mut Vec<Vertex>, best: &mut usize) {
        *best = (*best).max(path.len());
        let head = *path.last().unwrap();
        for w in g.vertices() {
            if !path.contains(&w) && g.edge_index(head, w).is_some() {
                path.push(w);
                grow(g, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for v in g.vertices() {
        grow(g, &mut vec![v], &mut best);
    }
    best
}

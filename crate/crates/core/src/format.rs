//! On-disk formats: graph JSON, plain edge lists, and colouring JSON.
//!
//! Graph JSON is `{"vertex_count": N, "edges": [[u, v], ...]}` with `u < v`.
//! Edge lists hold one `u v` pair per line; `#` starts a comment, and a
//! `# vertices N` comment pins the vertex count (otherwise it is one more
//! than the largest vertex mentioned).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{Colouring, Graph, GraphError, Vertex};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertex_count: usize,
    edges: Vec<[Vertex; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            vertex_count: self.vertex_count(),
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        graph_from_json(raw).map_err(serde::de::Error::custom)
    }
}

fn graph_from_json(raw: GraphJson) -> Result<Graph, GraphError> {
    if let Some(&[u, v]) = raw.edges.iter().find(|[u, v]| u >= v) {
        return Err(if u == v {
            GraphError::SelfLoop(u)
        } else {
            GraphError::UnorderedEdge(u, v)
        });
    }
    Graph::new(raw.vertex_count, raw.edges.into_iter().map(|[u, v]| (u, v)))
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization cannot fail")
}

pub fn graph_from_json_str(text: &str) -> Result<Graph, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let syntax = |message: &str| GraphError::EdgeListSyntax {
            line,
            message: message.to_string(),
        };
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(rest) = comment.and_then(|c| c.trim().strip_prefix("vertices")) {
            let n = rest.trim().parse().map_err(|_| syntax("bad vertex count"))?;
            declared = Some(n);
        }
        let mut fields = body.split_whitespace();
        let Some(first) = fields.next() else { continue };
        let second = fields.next().ok_or_else(|| syntax("expected two vertices"))?;
        if fields.next().is_some() {
            return Err(syntax("trailing fields"));
        }
        let parse = |s: &str| s.parse::<Vertex>().map_err(|_| syntax("bad vertex index"));
        edges.push((parse(first)?, parse(second)?));
    }
    let inferred = edges
        .iter()
        .map(|&(u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap_or(0);
    Graph::new(declared.unwrap_or(inferred), edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn colouring_to_json(c: &Colouring) -> String {
    serde_json::to_string(c).expect("colouring serialization cannot fail")
}

/// Parses `{"r": .., "colours": [..]}` and checks it against `g`.
pub fn colouring_from_json_str(text: &str, g: &Graph) -> Result<Colouring, FormatError> {
    let c: Colouring = serde_json::from_str(text)?;
    c.check_against(g)?;
    Ok(c)
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

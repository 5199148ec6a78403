use serde::Serialize;
use sizeramsey::oracle::{DEFAULT_COLOURING_CAP, DEFAULT_PATH_CAP};
use sizeramsey::{arrows_decide, longest_path_exact, min_size_ramsey, Enumeration, Graph, Vertex};

use crate::args::{EnumerationArg, Format, GraphSource, Global, OracleCommand};
use crate::error::CliError;
use crate::output::{emit, load_graph, render_json};

#[derive(Debug, Serialize)]
struct LongestPath {
    length: usize,
    path: Vec<Vertex>,
}

fn graph(source: &GraphSource) -> Result<Graph, CliError> {
    match (&source.graph, source.complete) {
        (Some(path), None) => load_graph(path),
        (None, Some(k)) => Ok(Graph::complete(k)),
        _ => Err(CliError::usage("give exactly one of --graph and --complete")),
    }
}

pub fn run(global: &Global, command: &OracleCommand) -> Result<(), CliError> {
    if global.format == Some(Format::Csv) {
        return Err(CliError::usage("oracle results are JSON only"));
    }
    let bytes = match command {
        OracleCommand::Arrows { source, n, r, method } => {
            let g = graph(source)?;
            let method = match method {
                EnumerationArg::Canonical => Enumeration::Canonicalized,
                EnumerationArg::Exhaustive => Enumeration::Exhaustive,
            };
            let cap = global.cap.unwrap_or(DEFAULT_COLOURING_CAP);
            let verdict = arrows_decide(&g, *n, *r, method, cap)?;
            crate::log(global, format!("oracle: arrows = {}", verdict.arrows));
            render_json(&verdict)?
        }
        OracleCommand::MinRamsey { n, r, vertex_cap } => {
            let cap = global.cap.unwrap_or(DEFAULT_COLOURING_CAP);
            let result = min_size_ramsey(*n, *r, *vertex_cap, cap)?;
            crate::log(global, format!("oracle: m = {}", result.m));
            render_json(&result)?
        }
        OracleCommand::LongestPath { source } => {
            let g = graph(source)?;
            let cap = global
                .cap
                .map_or(DEFAULT_PATH_CAP, |c| usize::try_from(c).unwrap_or(usize::MAX));
            let (length, path) = longest_path_exact(&g, cap)?;
            render_json(&LongestPath {
                length,
                path: path.vertices,
            })?
        }
    };
    emit(&bytes, global.out.as_deref())
}

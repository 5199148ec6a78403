use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Serialize, Serializer};
use sizeramsey::format::{colouring_from_json_str, graph_from_json_str, parse_edge_list};
use sizeramsey::{Colouring, Graph};

use crate::args::Format;
use crate::error::CliError;

/// Serializes an optional real as its shortest round-trip decimal string.
pub fn real<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

pub fn join_vertices(vs: &[u32]) -> String {
    vs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

pub fn render_rows<T: Serialize>(rows: &[T], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row)
                    .map_err(|e| CliError::Invariant(format!("csv encoding: {e}")))?;
            }
            w.into_inner()
                .map_err(|e| CliError::Invariant(format!("csv encoding: {e}")))
        }
        Format::Json => render_json(&rows),
    }
}

pub fn render_json<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(value)
        .map_err(|e| CliError::Invariant(format!("json encoding: {e}")))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes to `out`, or to standard output when it is `None`.
pub fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

pub fn create_dir(path: &Path) -> Result<(), CliError> {
    fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Graph JSON for a `.json` extension, edge list otherwise.
pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        graph_from_json_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
    } else {
        parse_edge_list(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
    }
}

pub fn load_colouring(path: &Path, g: &Graph) -> Result<Colouring, CliError> {
    let text = read(path)?;
    colouring_from_json_str(&text, g).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

pub fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

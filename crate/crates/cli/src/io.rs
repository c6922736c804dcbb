//! Reading and writing graph streams.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use polydeza::graph::codec::{
    decode_graph6, decode_planar_code, encode_graph6, encode_planar_code, GRAPH6_HEADER,
    PLANAR_CODE_HEADER,
};
use polydeza::graph::{embed_with_cap, DEFAULT_EMBED_CAP};
use polydeza::{AbstractGraph, PlaneGraph};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Format {
    PlanarCode,
    Graph6,
}

/// A decoded input graph; graph6 input has no embedding.
#[derive(Clone, Debug)]
pub enum Graph {
    Plane(PlaneGraph),
    Abstract(AbstractGraph),
}

impl Graph {
    pub fn to_abstract(&self) -> AbstractGraph {
        match self {
            Graph::Plane(p) => p.to_abstract(),
            Graph::Abstract(a) => a.clone(),
        }
    }

    /// The embedding, computing one for graph6 input.
    pub fn plane(&self) -> Result<PlaneGraph, CliError> {
        match self {
            Graph::Plane(p) => Ok(p.clone()),
            Graph::Abstract(a) => embed_with_cap(a, a.n().max(DEFAULT_EMBED_CAP))
                .map_err(CliError::input)?
                .ok_or_else(|| CliError::Input("graph is not planar".into())),
        }
    }
}

fn sniff(bytes: &[u8], path: &Path) -> Format {
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        return Format::PlanarCode;
    }
    if bytes.starts_with(GRAPH6_HEADER.as_bytes()) {
        return Format::Graph6;
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::Graph6,
        Some("pc") => Format::PlanarCode,
        _ if bytes
            .iter()
            .all(|b| b.is_ascii_graphic() || b.is_ascii_whitespace()) =>
        {
            Format::Graph6
        }
        _ => Format::PlanarCode,
    }
}

pub fn read_graphs(path: &Path, format: Option<Format>) -> Result<Vec<Graph>, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    match format.unwrap_or_else(|| sniff(&bytes, path)) {
        Format::PlanarCode => Ok(decode_planar_code(&bytes)
            .map_err(CliError::input)?
            .into_iter()
            .map(Graph::Plane)
            .collect()),
        Format::Graph6 => {
            let text = String::from_utf8(bytes)
                .map_err(|_| CliError::Input(format!("{}: not graph6 text", path.display())))?;
            let body = text.strip_prefix(GRAPH6_HEADER).unwrap_or(&text);
            body.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| {
                    decode_graph6(l)
                        .map(Graph::Abstract)
                        .map_err(CliError::input)
                })
                .collect()
        }
    }
}

pub fn encode(graphs: &[Graph], format: Format, allow_loss: bool) -> Result<Vec<u8>, CliError> {
    match format {
        Format::PlanarCode => {
            let planes = graphs
                .iter()
                .map(Graph::plane)
                .collect::<Result<Vec<_>, _>>()?;
            encode_planar_code(&planes).map_err(CliError::input)
        }
        Format::Graph6 => {
            if !allow_loss && graphs.iter().any(|g| matches!(g, Graph::Plane(_))) {
                return Err(CliError::FormatLoss);
            }
            let mut out = String::new();
            for g in graphs {
                out.push_str(&encode_graph6(&g.to_abstract()));
                out.push('\n');
            }
            Ok(out.into_bytes())
        }
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

pub fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialise");
    text.push('\n');
    write_file(path, text.as_bytes())
}

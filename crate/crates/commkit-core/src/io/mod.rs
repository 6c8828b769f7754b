//! Parsers for the three interchange formats the benchmark networks are
//! distributed in, plus partition / dendrogram / curve serialization.
//!
//! All parsers accept LF or CRLF line endings and return [`ParseDiagnostics`]
//! alongside the graph; they never panic on malformed bytes.

mod edge_list;
mod gml;
mod pajek;
mod write;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use gml::parse_gml;
pub use pajek::parse_pajek;
pub use write::{
    parse_dendrogram_json, write_curve_csv, write_dendrogram, write_partition, DendrogramRecord,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ingestion warnings. Counts are populated even on success.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseDiagnostics {
    pub dropped_self_loops: usize,
    pub dropped_duplicate_edges: usize,
    /// Weighted edge lines whose weight was parsed and discarded.
    pub discarded_weights: usize,
    /// Directed arc lines folded into undirected edges.
    pub symmetrized_arcs: usize,
    pub line_of_first_error: Option<usize>,
}

/// Input format selector for [`parse_graph`].
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Format {
    EdgeList,
    Gml,
    Pajek,
}

impl Format {
    /// Guess from a file extension: `.gml` is GML, `.net`/`.paj` Pajek,
    /// anything else an edge list.
    pub fn from_extension(path: &str) -> Format {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".gml") {
            Format::Gml
        } else if lower.ends_with(".net") || lower.ends_with(".paj") {
            Format::Pajek
        } else {
            Format::EdgeList
        }
    }
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "tsv" => Ok(Format::EdgeList),
            "gml" => Ok(Format::Gml),
            "pajek" | "net" => Ok(Format::Pajek),
            other => Err(Error::InvalidConfig(format!("unknown format '{other}'"))),
        }
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<(Graph, ParseDiagnostics)> {
    match format {
        Format::EdgeList => parse_edge_list(bytes),
        Format::Gml => parse_gml(bytes),
        Format::Pajek => parse_pajek(bytes),
    }
}

/// Decode input bytes as UTF-8, mapping failures to a parse error at the
/// offending line.
fn decode(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        Error::format(line, "input is not valid UTF-8")
    })
}

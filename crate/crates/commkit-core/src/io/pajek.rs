//! Pajek `.net` reader: `*Vertices N`, optional vertex label lines, and
//! `*Edges` / `*Arcs` sections. Arcs are symmetrized; edge weights are
//! parsed and discarded. Both are counted in the diagnostics.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, NodeId};
use crate::io::{decode, ParseDiagnostics};

pub fn parse_pajek(bytes: &[u8]) -> Result<(Graph, ParseDiagnostics)> {
    let text = decode(bytes)?;
    let mut vertex_count: Option<usize> = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut section = Section::Preamble;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (line, u, v) 1-based
    let mut diagnostics = ParseDiagnostics::default();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = strip_keyword(line, "*vertices") {
            let n: usize = rest
                .split_whitespace()
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::format(line_no, "*Vertices needs a count"))?;
            vertex_count = Some(n);
            labels = vec![None; n];
            section = Section::Vertices;
            continue;
        }
        if strip_keyword(line, "*edges").is_some() {
            require_header(vertex_count, line_no)?;
            section = Section::Edges;
            continue;
        }
        if strip_keyword(line, "*arcs").is_some() {
            require_header(vertex_count, line_no)?;
            section = Section::Arcs;
            continue;
        }
        if line.starts_with('*') {
            // unknown section (e.g. *Matrix): refuse rather than misread
            return Err(Error::format(line_no, format!("unsupported section '{line}'")));
        }

        match section {
            Section::Preamble => {
                return Err(Error::format(line_no, "data before *Vertices header"))
            }
            Section::Vertices => {
                let n = vertex_count.unwrap();
                let mut tokens = line.split_whitespace();
                let id: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::format(line_no, "vertex line must start with an id"))?;
                if id == 0 || id > n {
                    return Err(Error::format(
                        line_no,
                        format!("vertex id {id} outside 1..{n}"),
                    ));
                }
                labels[id - 1] = Some(parse_vertex_label(line, id));
            }
            Section::Edges | Section::Arcs => {
                let mut tokens = line.split_whitespace();
                let u: usize = next_id(tokens.next(), line_no)?;
                let v: usize = next_id(tokens.next(), line_no)?;
                let n = vertex_count.unwrap();
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(Error::format(
                            line_no,
                            format!("edge endpoint {id} outside 1..{n}"),
                        ));
                    }
                }
                if tokens.next().is_some() {
                    diagnostics.discarded_weights += 1;
                }
                if section == Section::Arcs {
                    diagnostics.symmetrized_arcs += 1;
                }
                edges.push((line_no, u, v));
            }
        }
    }

    let n = vertex_count.ok_or_else(|| Error::format(1, "missing *Vertices header"))?;
    let mut builder = GraphBuilder::new();
    let mut ids: Vec<NodeId> = Vec::with_capacity(n);
    for (i, label) in labels.iter().enumerate() {
        let name = label.clone().unwrap_or_else(|| (i + 1).to_string());
        ids.push(builder.node(&name));
    }
    for (_, u, v) in edges {
        builder.add_edge_ids(ids[u - 1], ids[v - 1]);
    }
    diagnostics.dropped_self_loops = builder.dropped_self_loops();
    diagnostics.dropped_duplicate_edges = builder.dropped_duplicate_edges();
    Ok((builder.finish(), diagnostics))
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Section {
    Preamble,
    Vertices,
    Edges,
    Arcs,
}

fn strip_keyword<'a>(line: &'a str, keyword: &str) -> Option<&'a str> {
    let lower = line.to_ascii_lowercase();
    lower.starts_with(keyword).then(|| &line[keyword.len()..])
}

fn require_header(vertex_count: Option<usize>, line: usize) -> Result<()> {
    if vertex_count.is_none() {
        return Err(Error::format(line, "section before *Vertices header"));
    }
    Ok(())
}

fn next_id(token: Option<&str>, line: usize) -> Result<usize> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::format(line, "edge line needs two integer endpoints"))
}

/// Vertex labels are quoted (`1 "name" ...`) or the bare second token;
/// missing labels default to the vertex id.
fn parse_vertex_label(line: &str, id: usize) -> String {
    if let Some(start) = line.find('"') {
        if let Some(len) = line[start + 1..].find('"') {
            return line[start + 1..start + 1 + len].to_string();
        }
    }
    line.split_whitespace()
        .nth(1)
        .map(str::to_string)
        .unwrap_or_else(|| id.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_vertices_and_edges() {
        let (g, _) = parse_pajek(b"*Vertices 2\n1 \"a\"\n2 \"b\"\n*Edges\n1 2\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.node_by_label("a").is_some());
    }

    #[test]
    fn vertex_lines_are_optional() {
        let (g, d) = parse_pajek(b"*Vertices 3\n*Edges\n1 2 0.5\n").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(d.discarded_weights, 1);
        assert!(g.node_by_label("3").is_some());
    }

    #[test]
    fn arcs_are_symmetrized() {
        let (g, d) = parse_pajek(b"*Vertices 2\n*Arcs\n1 2\n2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(d.symmetrized_arcs, 2);
        assert_eq!(d.dropped_duplicate_edges, 1);
    }

    #[test]
    fn missing_header_is_an_error() {
        assert!(matches!(
            parse_pajek(b"1 2\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(parse_pajek(b""), Err(Error::Format { .. })));
    }

    #[test]
    fn out_of_range_ids_are_errors() {
        assert!(matches!(
            parse_pajek(b"*Vertices 2\n3 \"c\"\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse_pajek(b"*Vertices 2\n*Edges\n1 9\n"),
            Err(Error::Format { line: 3, .. })
        ));
    }

    #[test]
    fn case_insensitive_headers() {
        let (g, _) = parse_pajek(b"*VERTICES 2\n*EDGES\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}

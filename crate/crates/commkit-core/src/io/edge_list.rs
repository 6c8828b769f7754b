//! Whitespace-separated edge list: one edge per line, `#` comments.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::io::{decode, ParseDiagnostics};

pub fn parse_edge_list(bytes: &[u8]) -> Result<(Graph, ParseDiagnostics)> {
    let text = decode(bytes)?;
    let mut builder = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::format(
                    i + 1,
                    "expected exactly two whitespace-separated node labels",
                ))
            }
        };
        builder.add_edge(a, b);
    }
    let diagnostics = ParseDiagnostics {
        dropped_self_loops: builder.dropped_self_loops(),
        dropped_duplicate_edges: builder.dropped_duplicate_edges(),
        ..Default::default()
    };
    Ok((builder.finish(), diagnostics))
}

/// Canonical edge-list encoding: `label label` per edge, LF endings.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_edges() {
        let (g, d) = parse_edge_list(b"1 2\n2 3\n").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(d, ParseDiagnostics::default());
    }

    #[test]
    fn collapses_reversed_duplicates() {
        let (g, d) = parse_edge_list(b"a b\nb a\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(d.dropped_duplicate_edges, 1);
    }

    #[test]
    fn drops_self_loops() {
        let (g, d) = parse_edge_list(b"x x\n").unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(d.dropped_self_loops, 1);
    }

    #[test]
    fn reports_bad_token_count_with_line_number() {
        let err = parse_edge_list(b"1 2\n3\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        let err = parse_edge_list(b"1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }));
    }

    #[test]
    fn skips_comments_blank_lines_and_crlf() {
        let (g, _) = parse_edge_list(b"# header\r\n\r\n1 2\r\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn round_trips() {
        let (g, _) = parse_edge_list(b"a b\nb c\nc a\nd a\n").unwrap();
        let (g2, _) = parse_edge_list(write_edge_list(&g).as_bytes()).unwrap();
        assert_eq!(g.node_count(), g2.node_count());
        assert_eq!(g.edge_count(), g2.edge_count());
        let edges = |g: &Graph| -> Vec<(String, String)> {
            g.edges()
                .map(|(u, v)| (g.label(u).into(), g.label(v).into()))
                .collect()
        };
        assert_eq!(edges(&g), edges(&g2));
    }
}

//! Output serialization: partition CSV, dendrogram JSON, curve CSV.
//! Everything is UTF-8 with LF endings and byte-stable across runs.

use serde::{Deserialize, Serialize};

use crate::divisive::{Dendrogram, Partition};
use crate::error::{Error, Result};
use crate::evaluation::ModularityCurve;

/// Partition CSV: header `node,community`, one row per node sorted by node
/// label; community ids are 0-based, ordered by smallest member node id.
pub fn write_partition(p: &Partition, labels: &[String]) -> String {
    let mut rows: Vec<(&str, u32)> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), p.community[i]))
        .collect();
    rows.sort_by(|a, b| a.0.cmp(b.0));
    let mut out = String::from("node,community\n");
    for (label, community) in rows {
        out.push_str(&csv_field(label));
        out.push(',');
        out.push_str(&community.to_string());
        out.push('\n');
    }
    out
}

/// One removal step of a serialized dendrogram.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DendrogramRecord {
    pub step: usize,
    pub edge: [String; 2],
    pub score: f64,
    pub components_after: usize,
}

/// Dendrogram JSON: an array of removal records in execution order.
/// Scores round-trip exactly (shortest-representation float encoding).
pub fn write_dendrogram(d: &Dendrogram, labels: &[String]) -> String {
    let records: Vec<DendrogramRecord> = d
        .removals
        .iter()
        .enumerate()
        .map(|(i, r)| DendrogramRecord {
            step: i + 1,
            edge: [
                labels[r.edge.0.index()].clone(),
                labels[r.edge.1.index()].clone(),
            ],
            score: r.score,
            components_after: r.components_after,
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&records).expect("records serialize");
    out.push('\n');
    out
}

pub fn parse_dendrogram_json(text: &str) -> Result<Vec<DendrogramRecord>> {
    serde_json::from_str(text).map_err(|e| Error::format(e.line(), e.to_string()))
}

/// Modularity curve CSV: header `k,modularity`.
pub fn write_curve_csv(curve: &ModularityCurve) -> String {
    let mut out = String::from("k,modularity\n");
    for &(k, q) in &curve.points {
        out.push_str(&format!("{k},{q}\n"));
    }
    out
}

/// Quote a CSV field only when it needs it.
fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

//! Edge scorers: betweenness, the Radicchi edge-clustering coefficient and
//! ten local similarity indices, plus node clustering and whole-graph
//! descriptive statistics.

mod betweenness;
mod local;
mod stats;

pub use betweenness::{edge_betweenness, node_betweenness};
pub use local::{
    node_clustering, radicchi_coefficient, score_aa, score_cn, score_hub_depressed,
    score_hub_promoted, score_jaccard, score_llhn, score_pa, score_ra, score_salton,
    score_sorensen,
};
pub use stats::{graph_stats, GraphStats};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{ordered, Graph, NodeId};

/// Which end of the score ranking the divisive engine removes.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// High scores mark inter-community bridges (betweenness).
    RemoveMax,
    /// Low scores mark weak links (edge clustering, similarity indices).
    RemoveMin,
}

/// The twelve edge scorers.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum MetricId {
    Betweenness,
    Radicchi,
    CommonNeighbors,
    AdamicAdar,
    ResourceAllocation,
    PreferentialAttachment,
    Jaccard,
    Sorensen,
    Salton,
    HubDepressed,
    HubPromoted,
    Llhn,
}

impl MetricId {
    pub const ALL: [MetricId; 12] = [
        MetricId::Betweenness,
        MetricId::Radicchi,
        MetricId::CommonNeighbors,
        MetricId::AdamicAdar,
        MetricId::ResourceAllocation,
        MetricId::PreferentialAttachment,
        MetricId::Jaccard,
        MetricId::Sorensen,
        MetricId::Salton,
        MetricId::HubDepressed,
        MetricId::HubPromoted,
        MetricId::Llhn,
    ];

    pub fn code(self) -> &'static str {
        match self {
            MetricId::Betweenness => "betweenness",
            MetricId::Radicchi => "radicchi",
            MetricId::CommonNeighbors => "cn",
            MetricId::AdamicAdar => "aa",
            MetricId::ResourceAllocation => "ra",
            MetricId::PreferentialAttachment => "pa",
            MetricId::Jaccard => "ja",
            MetricId::Sorensen => "so",
            MetricId::Salton => "sa",
            MetricId::HubDepressed => "hd",
            MetricId::HubPromoted => "hp",
            MetricId::Llhn => "llhn",
        }
    }

    pub fn orientation(self) -> Orientation {
        match self {
            MetricId::Betweenness => Orientation::RemoveMax,
            _ => Orientation::RemoveMin,
        }
    }

    /// Whether the score of an edge depends only on its endpoints'
    /// neighborhoods (making the NEIGHBORHOOD recompute policy valid).
    pub fn is_local(self) -> bool {
        self != MetricId::Betweenness
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for MetricId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        MetricId::ALL
            .into_iter()
            .find(|m| m.code() == lower)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown metric '{s}'")))
    }
}

/// A scored edge. `excluded` is set only by the Radicchi coefficient when
/// its denominator min(k_i-1, k_j-1) vanishes on a pendant edge; excluded
/// edges are never removal candidates.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct EdgeScore {
    pub edge: (NodeId, NodeId),
    pub value: f64,
    pub excluded: bool,
}

impl EdgeScore {
    fn new(u: NodeId, v: NodeId, value: f64) -> Self {
        EdgeScore {
            edge: ordered(u, v),
            value,
            excluded: false,
        }
    }
}

/// Score every edge of `g` with `metric`, in canonical edge order.
pub fn score_edges(g: &Graph, metric: MetricId) -> Vec<EdgeScore> {
    if metric == MetricId::Betweenness {
        return edge_betweenness(g);
    }
    g.edges()
        .map(|(u, v)| score_known_edge(g, metric, u, v))
        .collect()
}

fn score_known_edge(g: &Graph, metric: MetricId, u: NodeId, v: NodeId) -> EdgeScore {
    match metric {
        MetricId::Radicchi => radicchi_coefficient(g, u, v).expect("edge exists"),
        MetricId::Betweenness => unreachable!("betweenness is scored per graph"),
        _ => {
            let value = score_pair(g, metric, u, v).expect("edge endpoints exist");
            EdgeScore::new(u, v, value)
        }
    }
}

/// Score a node pair with one of the ten similarity indices.
///
/// Defined for any distinct pair; the divisive engine only ever applies it
/// to existing edges. Betweenness and Radicchi are not pairwise scorers.
pub fn score_pair(g: &Graph, metric: MetricId, u: NodeId, v: NodeId) -> Result<f64> {
    match metric {
        MetricId::CommonNeighbors => score_cn(g, u, v),
        MetricId::AdamicAdar => score_aa(g, u, v),
        MetricId::ResourceAllocation => score_ra(g, u, v),
        MetricId::PreferentialAttachment => score_pa(g, u, v),
        MetricId::Jaccard => score_jaccard(g, u, v),
        MetricId::Sorensen => score_sorensen(g, u, v),
        MetricId::Salton => score_salton(g, u, v),
        MetricId::HubDepressed => score_hub_depressed(g, u, v),
        MetricId::HubPromoted => score_hub_promoted(g, u, v),
        MetricId::Llhn => score_llhn(g, u, v),
        MetricId::Betweenness | MetricId::Radicchi => Err(Error::InvalidConfig(format!(
            "{metric} is not a pairwise similarity index"
        ))),
    }
}
